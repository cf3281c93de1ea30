#include <doctest.h>

#include "scffd/dest_ring.hpp"
#include "scffd/int_ring.hpp"
#include "scffd/poly_ring.hpp"
#include "scffd/primes.hpp"
#include "test_util.hpp"

using namespace scffd;
using namespace scffd::testutil;

namespace {

std::shared_ptr<const DestroyRing> B2() {
    auto Z = IntRing::get();
    return DestroyRing::create(Z, Z->from_int(2), "x");
}

}  // namespace

TEST_CASE("construction validates the destroyed prime") {
    auto Z = IntRing::get();
    CHECK(B2()->signature() == "Destroy(Z,2,x)");
    CHECK_NOTHROW(DestroyRing::create(Z, Z->from_int(3), "x"));
    CHECK_THROWS_AS(DestroyRing::create(Z, Z->from_int(4), "x"), Error);
    CHECK_THROWS_AS(DestroyRing::create(Z, Z->one(), "x"), Error);
}

TEST_CASE("coefficient shape and multiplication bookkeeping") {
    auto B = B2();
    auto Z = IntRing::get();
    Elem x = B->variable();

    Elem xx = B->mul(x, x);
    CHECK(B->print(xx) == "(4/4)*x^2");
    CHECK(printed(*Z, B->numerators(xx)) == printed(*Z, {Z->zero(), Z->zero(), Z->from_int(4)}));

    Elem half_sq = B->make({Z->zero(), Z->zero(), Z->from_int(2)});  // (2/4)x^2 = x^2/2
    CHECK(B->print(half_sq) == "(2/4)*x^2");
    CHECK(B->equal(B->mul(B->from_int(2), half_sq), xx));

    Elem f = B->make({Z->from_int(3), Z->from_int(1), Z->from_int(5)});
    CHECK(B->equal(B->mul(f, B->one()), f));
    CHECK(B->equal(B->add(f, B->zero()), f));
    CHECK(B->degree(B->mul(f, f)) == 4);

    auto g = rng(111);
    for (int t = 0; t < 50; ++t) {
        auto rnd = [&]() {
            std::vector<Elem> ns;
            int d = static_cast<int>(rand_in(g, 0, 3));
            for (int k = 0; k <= d; ++k) ns.push_back(Z->from_int(rand_in(g, -6, 6)));
            return B->make(std::move(ns));
        };
        Elem a = rnd(), b = rnd(), c = rnd();
        CHECK(B->equal(B->mul(a, b), B->mul(b, a)));
        CHECK(B->equal(B->mul(B->mul(a, b), c), B->mul(a, B->mul(b, c))));
        CHECK(B->equal(B->mul(a, B->add(b, c)), B->add(B->mul(a, b), B->mul(a, c))));
        if (!B->is_zero(a) && !B->is_zero(b))
            CHECK(B->degree(B->mul(a, b)) == B->degree(a) + B->degree(b));
    }
}

TEST_CASE("membership against the cover fraction field") {
    auto B = B2();
    auto Z = IntRing::get();
    auto cov = std::static_pointer_cast<const PolyRing>(B->cover());
    auto cpoly = [&](std::vector<long long> cs) {
        std::vector<Elem> v;
        for (long long c : cs) v.push_back(Z->from_int(c));
        return cov->make(std::move(v));
    };

    auto m1 = B->member(cpoly({0, 0, 3}), cpoly({4}));  // (3/4)x^2
    REQUIRE(m1.has_value());
    CHECK(printed(*Z, B->numerators(*m1)) ==
          printed(*Z, {Z->zero(), Z->zero(), Z->from_int(3)}));

    CHECK_FALSE(B->member(cpoly({0, 0, 1}), cpoly({3})).has_value());  // (1/3)x^2
    CHECK_FALSE(B->member(cpoly({0, 1}), cpoly({2})).has_value());     // x/2

    // unreduced cover pairs are accepted: (2x^2)/8 = x^2/4
    auto m2 = B->member(cpoly({0, 0, 2}), cpoly({8}));
    REQUIRE(m2.has_value());
    CHECK(B->print(*m2) == "(1/4)*x^2");

    auto [n, d] = B->lift_cover(*m2);
    auto back = B->member(n, d);
    REQUIRE(back.has_value());
    CHECK(B->equal(*back, *m2));
}

TEST_CASE("the destroyed prime keeps its divisors but loses primality") {
    auto B = B2();
    auto Z = IntRing::get();
    Elem x = B->variable();
    Elem two = B->from_int(2);

    CHECK(printed(*B, B->units()) == std::vector<std::string>{"1", "-1"});

    // divisor preservation for constants
    for (long long a = -20; a <= 20; ++a) {
        if (a == 0) continue;
        auto in_base = Z->divisors(Z->from_int(a)).members;
        std::vector<Elem> embedded;
        for (const Elem& d : in_base) embedded.push_back(B->embed(d));
        CHECK(same_set(*B, B->divisors(B->from_int(a)).members, embedded));
    }

    auto w = B->divides(two, B->mul(x, x));
    CHECK(w.divides);
    CHECK(B->print(*w.witness) == "(2/4)*x^2");
    CHECK(B->equal(B->mul(two, *w.witness), B->mul(x, x)));
    CHECK_FALSE(B->divides(two, x).divides);

    CHECK(B->is_prime(two) == Trilean::no);
    CHECK(B->is_irreducible(two) == Trilean::yes);
    for (long long p : {3, 5, 7}) {
        CHECK(B->is_prime(B->from_int(p)) == Trilean::yes);
        CHECK(B->is_irreducible(B->from_int(p)) == Trilean::yes);
    }
    CHECK(B->is_prime(x) == Trilean::unsupported);

    // non-associate base primes stay non-associate
    CHECK_FALSE(B->are_associates(B->from_int(3), B->from_int(5)));
    CHECK(B->are_associates(B->from_int(3), B->from_int(-3)));
}

TEST_CASE("divisor enumeration inside the destroyed ring") {
    auto B = B2();
    Elem x = B->variable();

    CHECK(printed(*B, B->divisors(x).members) == std::vector<std::string>{"1", "-1", "x", "-x"});
    CHECK(printed(*B, B->divisors(B->mul(x, x)).members) ==
          std::vector<std::string>{"1", "-1", "2", "-2", "4", "-4", "x", "-x", "(1/4)*x^2",
                                   "(-1/4)*x^2", "(2/4)*x^2", "(-2/4)*x^2", "(4/4)*x^2",
                                   "(-4/4)*x^2"});

    // every member divides with an exact witness
    DivisorSet d = B->divisors(B->mul(x, x));
    for (const Elem& m : d.members) {
        auto q = B->divide_exact(d.target, m);
        REQUIRE(q.has_value());
        CHECK(B->equal(B->mul(m, *q), d.target));
    }
}

TEST_CASE("staged towers and the prime schedule") {
    EnumerationSchedule sched({0, 2, 4});
    auto staged = staged_destroy(sched, {"x0", "x1", "x2"});
    CHECK(staged->signature() == "Destroy(Destroy(Destroy(Z,2,x0),5,x1),11,x2)");
    CHECK(staged_destroy(EnumerationSchedule(std::vector<std::size_t>{}), {})->signature() == "Z");
    CHECK_THROWS_AS(EnumerationSchedule({0, 0}), Error);

    // limit-mode primality of p_0..p_5 under [0,2,4]: F,T,F,T,F,T
    std::vector<bool> expect = {false, true, false, true, false, true};
    for (std::size_t i = 0; i < expect.size(); ++i) {
        CHECK(staged_is_prime(sched, i, StageMode::at_limit()) == expect[i]);
        Elem p = staged->from_int(nth_prime(i));
        CHECK(staged->is_prime(p) == to_trilean(expect[i]));
        CHECK(staged->is_irreducible(p) == Trilean::yes);
    }

    // stage dynamics: p_2 = 5 is prime at stage 1, destroyed at stage 2
    EnumerationSchedule s2({0, 2});
    CHECK(staged_is_prime(s2, 2, StageMode::at_stage(1)));
    CHECK_FALSE(staged_is_prime(s2, 2, StageMode::at_stage(2)));
    CHECK_FALSE(staged_is_prime(s2, 0, StageMode::at_limit()));
    CHECK(staged_is_prime(s2, 1, StageMode::at_limit()));
    CHECK_THROWS_AS(staged_is_prime(s2, 1, StageMode::at_stage(3)), Error);
}

TEST_CASE("staged coherence: later stages preserve earlier divisor sets") {
    auto A1 = std::static_pointer_cast<const DestroyRing>(
        staged_destroy(EnumerationSchedule({0}), {"x0"}));
    auto A2 = std::static_pointer_cast<const DestroyRing>(
        staged_destroy(EnumerationSchedule({0, 2}), {"x0", "x1"}));
    REQUIRE(A2->base()->signature() == A1->signature());

    std::vector<Elem> probes;
    for (long long a : {2, 3, 4, 6, 12}) probes.push_back(A1->from_int(a));
    probes.push_back(A1->variable());  // x0, constant from stage 2's viewpoint
    for (const Elem& a : probes) {
        std::vector<Elem> lifted;
        for (const Elem& d : A1->divisors(a).members) lifted.push_back(A2->embed(d));
        CHECK(same_set(*A2, A2->divisors(A2->embed(a)).members, lifted));
    }
}

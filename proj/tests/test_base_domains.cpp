#include <doctest.h>

#include <algorithm>

#include "scffd/int_ring.hpp"
#include "scffd/primes.hpp"
#include "scffd/quad_ring.hpp"
#include "test_util.hpp"

using namespace scffd;
using namespace scffd::testutil;

namespace {

std::vector<Elem> brute_int_divisors(const IntRing& Z, const Integer& a) {
    std::vector<Elem> out;
    Integer bound = abs_int(a);
    for (Integer d = 1; d <= bound; ++d)
        if (a % d == 0) {
            out.push_back(Z.from_int(d));
            out.push_back(Z.from_int(-d));
        }
    return out;
}

std::vector<Elem> brute_quad_divisors(const QuadRing& Q, const Elem& z) {
    std::vector<Elem> out;
    Integer N = Q.norm(z);
    for (Integer n = 1; n <= N; ++n)
        for (const Elem& w : Q.elements_of_norm(n))
            if (Q.divide_exact(z, w)) out.push_back(w);
    return out;
}

}  // namespace

TEST_CASE("integer arithmetic and canonical order") {
    auto Z = IntRing::get();
    CHECK(Z->print(Z->add(Z->from_int(2), Z->from_int(3))) == "5");
    CHECK(Z->print(Z->mul(Z->from_int(-2), Z->from_int(3))) == "-6");
    CHECK(Z->equal(Z->add(Z->from_int(7), Z->zero()), Z->from_int(7)));
    CHECK(Z->equal(Z->mul(Z->from_int(7), Z->one()), Z->from_int(7)));
    CHECK(Z->equal(Z->sub(Z->from_int(2), Z->from_int(9)), Z->from_int(-7)));
    CHECK(Z->equal(Z->pow(Z->from_int(3), 4), Z->from_int(81)));

    // frozen canonical enumeration: 0, 1, -1, 2, -2, ...
    std::vector<std::string> first;
    for (std::size_t i = 0; i < 7; ++i) first.push_back(Z->print(Z->enumerate(i)));
    CHECK(first == std::vector<std::string>{"0", "1", "-1", "2", "-2", "3", "-3"});

    CHECK(Z->compare(Z->from_int(2), Z->from_int(3)) == std::strong_ordering::less);
    CHECK(Z->compare(Z->from_int(2), Z->from_int(-2)) == std::strong_ordering::less);
    CHECK(Z->compare(Z->from_int(5), Z->from_int(5)) == std::strong_ordering::equal);
}

TEST_CASE("integer divisors, units, primality") {
    auto Z = IntRing::get();

    CHECK(printed(*Z, Z->divisors(Z->from_int(6)).members) ==
          std::vector<std::string>{"1", "-1", "2", "-2", "3", "-3", "6", "-6"});
    CHECK(printed(*Z, Z->divisors(Z->from_int(12)).members) ==
          std::vector<std::string>{"1", "-1", "2", "-2", "3", "-3", "4", "-4", "6", "-6", "12",
                                   "-12"});
    CHECK(printed(*Z, Z->units()) == std::vector<std::string>{"1", "-1"});
    CHECK(same_set(*Z, Z->divisors(Z->one()).members, Z->units()));
    CHECK_THROWS_AS(Z->divisors(Z->zero()), Error);

    // brute-force differential oracle
    for (long long a = -30; a <= 30; ++a) {
        if (a == 0) continue;
        CHECK(same_set(*Z, Z->divisors(Z->from_int(a)).members, brute_int_divisors(*Z, a)));
    }

    CHECK(Z->is_prime(Z->from_int(7)) == Trilean::yes);
    CHECK(Z->is_prime(Z->from_int(-7)) == Trilean::yes);
    CHECK(Z->is_prime(Z->from_int(6)) == Trilean::no);
    CHECK(Z->is_prime(Z->one()) == Trilean::no);
    CHECK(Z->is_prime(Z->zero()) == Trilean::no);
    CHECK(Z->is_irreducible(Z->from_int(2)) == Trilean::yes);
    CHECK(Z->is_irreducible(Z->from_int(6)) == Trilean::no);
    CHECK(Z->is_irreducible(Z->one()) == Trilean::no);

    CHECK(Z->are_associates(Z->from_int(2), Z->from_int(-2)));
    CHECK_FALSE(Z->are_associates(Z->from_int(2), Z->from_int(3)));

    auto d30 = Z->divides(Z->from_int(3), Z->zero());
    CHECK(d30.divides);
    CHECK(Z->is_zero(*d30.witness));
    CHECK_FALSE(Z->divides(Z->zero(), Z->from_int(3)).divides);
}

TEST_CASE("integer factorization and the UFD divisor oracle") {
    auto Z = IntRing::get();
    Factorization f = Z->factor_irreducibles(Z->from_int(12));
    CHECK(Z->print(f.unit) == "1");
    std::vector<std::string> multiset;
    for (const Elem& p : f.factors) multiset.push_back(Z->print(p));
    std::sort(multiset.begin(), multiset.end());
    CHECK(multiset == std::vector<std::string>{"2", "2", "3"});
    Elem prod = f.unit;
    for (const Elem& p : f.factors) prod = Z->mul(prod, p);
    CHECK(Z->equal(prod, Z->from_int(12)));

    CHECK(same_set(*Z, Z->divisors_from_factorization(Z->from_int(12)),
                   Z->divisors(Z->from_int(12)).members));
    CHECK(same_set(*Z, Z->divisors_from_factorization(Z->one()), Z->units()));
    CHECK_THROWS_AS(Z->factor_irreducibles(Z->zero()), Error);
    CHECK_THROWS_AS(Z->factor_irreducibles(Z->one()), Error);
}

TEST_CASE("prime list helpers") {
    CHECK(nth_prime(0) == 2);
    CHECK(nth_prime(1) == 3);
    CHECK(nth_prime(2) == 5);
    CHECK(nth_prime(4) == 11);
    CHECK(is_prime_int(7));
    CHECK(is_prime_int(-7));
    CHECK_FALSE(is_prime_int(1));
    CHECK_FALSE(is_prime_int(0));
    CHECK(prime_index(11) == std::size_t{4});
    CHECK(prime_index(-3) == std::size_t{1});
    CHECK_FALSE(prime_index(12).has_value());
}

TEST_CASE("quadratic norms and element enumeration") {
    auto Q = QuadRing::create(5);
    CHECK(Q->norm(Q->make(1, 1)) == 6);
    CHECK(Q->norm(Q->from_int(2)) == 4);
    CHECK(Q->norm(Q->zero()) == 0);

    CHECK(printed(*Q, Q->elements_of_norm(1)) == std::vector<std::string>{"1", "-1"});
    CHECK(Q->elements_of_norm(2).empty());
    CHECK(printed(*Q, Q->elements_of_norm(6)) ==
          std::vector<std::string>{"1 + s", "-1 + s", "1 - s", "-1 - s"});

    // norm multiplicativity on a pseudorandom sample
    auto g = rng(101);
    for (int t = 0; t < 200; ++t) {
        Elem z = Q->make(rand_in(g, -9, 9), rand_in(g, -9, 9));
        Elem w = Q->make(rand_in(g, -9, 9), rand_in(g, -9, 9));
        CHECK(Q->norm(Q->mul(z, w)) == Q->norm(z) * Q->norm(w));
    }
}

TEST_CASE("quadratic divisors, division, units") {
    auto Q = QuadRing::create(5);
    Elem six = Q->from_int(6);
    Elem r1 = Q->make(1, 1), r2 = Q->make(1, -1);

    CHECK(Q->equal(Q->mul(r1, r2), six));  // (1+s)(1-s) = 6

    auto d6 = Q->divisors(six);
    CHECK(d6.members.size() == 12);
    CHECK(printed(*Q, d6.members) ==
          std::vector<std::string>{"1", "-1", "2", "-2", "1 + s", "-1 + s", "1 - s", "-1 - s", "3",
                                   "-3", "6", "-6"});

    CHECK(printed(*Q, Q->divisors(r1).members) ==
          std::vector<std::string>{"1", "-1", "1 + s", "-1 - s"});
    CHECK(printed(*Q, Q->divisors(Q->one()).members) == std::vector<std::string>{"1", "-1"});
    CHECK(printed(*Q, Q->units()) == std::vector<std::string>{"1", "-1"});

    auto q = Q->divide_exact(six, r1);
    REQUIRE(q.has_value());
    CHECK(Q->equal(*q, r2));
    CHECK_FALSE(Q->divide_exact(r1, Q->from_int(2)).has_value());
    CHECK(Q->are_associates(r1, Q->negate(r1)));

    // brute-force completeness for every z with norm <= 200
    for (long long b = -6; b <= 6; ++b)
        for (long long a = -14; a <= 14; ++a) {
            Elem z = Q->make(a, b);
            if (Q->is_zero(z) || Q->norm(z) > 200) continue;
            CHECK(same_set(*Q, Q->divisors(z).members, brute_quad_divisors(*Q, z)));
        }
}

TEST_CASE("quadratic primality via the finite quotient") {
    auto Q = QuadRing::create(5);
    CHECK(Q->is_prime(Q->from_int(2)) == Trilean::no);
    CHECK(Q->is_prime(Q->from_int(3)) == Trilean::no);
    CHECK(Q->is_prime(Q->make(1, 1)) == Trilean::no);
    CHECK(Q->is_prime(Q->make(1, -1)) == Trilean::no);
    CHECK(Q->is_prime(Q->root()) == Trilean::yes);  // norm 5, prime quotient

    CHECK(Q->is_irreducible(Q->from_int(2)) == Trilean::yes);
    CHECK(Q->is_irreducible(Q->from_int(3)) == Trilean::yes);
    CHECK(Q->is_irreducible(Q->make(1, 1)) == Trilean::yes);
    CHECK(Q->is_irreducible(Q->from_int(6)) == Trilean::no);

    // prime-norm elements are prime; prime => irreducible throughout
    for (long long b = -4; b <= 4; ++b)
        for (long long a = -9; a <= 9; ++a) {
            Elem z = Q->make(a, b);
            if (Q->is_zero(z) || Q->norm(z) > 90) continue;
            Trilean p = Q->is_prime(z);
            if (is_prime_int(Q->norm(z))) CHECK(p == Trilean::yes);
            if (p == Trilean::yes) CHECK(Q->is_irreducible(z) == Trilean::yes);
        }
}

TEST_CASE("quadratic printing and two factorizations of six") {
    auto Q = QuadRing::create(5);
    CHECK(Q->print(Q->make(1, 1)) == "1 + s");
    CHECK(Q->print(Q->make(1, -1)) == "1 - s");
    CHECK(Q->print(Q->make(-1, 1)) == "-1 + s");
    CHECK(Q->print(Q->make(0, 1)) == "s");
    CHECK(Q->print(Q->make(0, -2)) == "-2*s");
    CHECK(Q->print(Q->zero()) == "0");
    CHECK(Q->print(Q->from_int(-2)) == "-2");

    Factorization f = Q->factor_irreducibles(Q->from_int(6));
    Elem prod = f.unit;
    for (const Elem& p : f.factors) {
        CHECK(Q->is_irreducible(p) == Trilean::yes);
        prod = Q->mul(prod, p);
    }
    CHECK(Q->equal(prod, Q->from_int(6)));
    CHECK(f.factors.size() == 2);
}

TEST_CASE("divisor sets are unit-closed, divisor-closed, and witnessed") {
    auto Z = IntRing::get();
    auto Q = QuadRing::create(5);
    auto check_closures = [](const Ring& r, const Elem& a) {
        DivisorSet d = r.divisors(a);
        auto units = r.units();
        for (const Elem& m : d.members) {
            auto w = r.divide_exact(a, m);
            REQUIRE(w.has_value());
            CHECK(r.equal(r.mul(m, *w), a));
            for (const Elem& u : units) CHECK(contains(r, d.members, r.mul(u, m)));
            for (const Elem& sub : r.divisors(m).members) CHECK(contains(r, d.members, sub));
        }
    };
    auto g = rng(202);
    for (int t = 0; t < 25; ++t) {
        check_closures(*Z, Z->from_int(rand_in(g, 1, 60)));
        long long qa = rand_in(g, -5, 5), qb = rand_in(g, -2, 2);
        if (qa == 0 && qb == 0) qa = 3;
        check_closures(*Q, Q->make(qa, qb));
    }
}

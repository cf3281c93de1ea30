#include <doctest.h>

#include "scffd/dest_ring.hpp"
#include "scffd/fringe_ring.hpp"
#include "scffd/int_ring.hpp"
#include "scffd/laurent_ring.hpp"
#include "scffd/parse.hpp"
#include "scffd/poly_ring.hpp"
#include "scffd/quad_ring.hpp"
#include "test_util.hpp"

using namespace scffd;
using namespace scffd::testutil;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::validation;
}

}  // namespace

TEST_CASE("descriptor grammar") {
    CHECK(parse_ring("Z").ring->signature() == "Z");
    CHECK(parse_ring("Quad(5)").ring->signature() == "Quad(5)");
    CHECK(parse_ring("Poly(Z,x)").ring->signature() == "Poly(Z,x)");
    CHECK(parse_ring("Poly(Poly(Z,x),y)").ring->signature() == "Poly(Poly(Z,x),y)");
    CHECK(parse_ring("Destroy(Z, 3, x)").ring->signature() == "Destroy(Z,3,x)");
    CHECK(parse_ring("Fringe(Z,y)").ring->signature() == "Fringe(Z,y)");
    CHECK(parse_ring(" Z ").ring->signature() == "Z");

    CHECK(kind_of([] { parse_ring("Destroy(Z,4,x)"); }) == ErrorKind::validation);
    CHECK(kind_of([] { parse_ring("Quad(0)"); }) == ErrorKind::validation);
    CHECK(kind_of([] { parse_ring("Quad(12)"); }) == ErrorKind::validation);
    CHECK(kind_of([] { parse_ring("Poly(Poly(Z,x),x)"); }) == ErrorKind::validation);
    CHECK(kind_of([] { parse_ring("Poly(Z,s)"); }) == ErrorKind::validation);
    CHECK(kind_of([] { parse_ring("Frob(Z)"); }) == ErrorKind::syntax);
    CHECK(kind_of([] { parse_ring("Z extra"); }) == ErrorKind::syntax);
    CHECK(kind_of([] { parse_ring(""); }) == ErrorKind::syntax);
    CHECK(kind_of([] { parse_ring("Fringe(Quad(5),y)"); }) == ErrorKind::validation);
}

TEST_CASE("staged descriptors carry their schedule") {
    ParsedRing st = parse_ring("Staged(primes=[0,2],vars=[x0,x1])");
    CHECK(st.staging == ParsedRing::Staging::primes);
    CHECK(st.ring->signature() == "Destroy(Destroy(Z,2,x0),5,x1)");
    CHECK(st.schedule.entries() == std::vector<std::size_t>{0, 2});
    CHECK(st.at_stage(0)->signature() == "Z");
    CHECK(st.at_stage(1)->signature() == "Destroy(Z,2,x0)");
    CHECK(st.at_stage(2)->signature() == "Destroy(Destroy(Z,2,x0),5,x1)");
    CHECK(kind_of([&] { st.at_stage(3); }) == ErrorKind::stage_mismatch);

    ParsedRing si = parse_ring("StagedIrred(primes=[0,2],vars=[x0,x1])");
    CHECK(si.staging == ParsedRing::Staging::irreducibles);
    CHECK(si.ring->signature() == "StagedIrred(primes=[0,2],vars=[x0,x1])");
    CHECK(si.at_stage(1)->signature() == "StagedIrred(primes=[0],vars=[x0])");

    // IrredDestroy normalizes to the staged form
    CHECK(parse_ring("IrredDestroy(Z,2,x0)").ring->signature() ==
          "StagedIrred(primes=[0],vars=[x0])");
    CHECK(parse_ring("IrredDestroy(StagedIrred(primes=[0],vars=[x0]),5,x1)").ring->signature() ==
          "StagedIrred(primes=[0,2],vars=[x0,x1])");

    // Fringe over a staged base inherits the staging
    ParsedRing fs = parse_ring("Fringe(StagedIrred(primes=[0,2],vars=[x0,x1]),y)");
    CHECK(fs.staging == ParsedRing::Staging::irreducibles);
    CHECK(fs.at_stage(1)->signature() == "Fringe(StagedIrred(primes=[0],vars=[x0]),y)");

    ParsedRing plain = parse_ring("Z");
    CHECK_FALSE(plain.staged());
    CHECK(kind_of([&] { plain.at_stage(0); }) == ErrorKind::validation);

    CHECK(kind_of([] { parse_ring("Staged(primes=[0,0],vars=[x0,x1])"); }) ==
          ErrorKind::repeated_index);
    CHECK(kind_of([] { parse_ring("Staged(primes=[0],vars=[x0,x1])"); }) == ErrorKind::validation);
    CHECK(kind_of([] { parse_ring("Staged(primes=[999999],vars=[x0])"); }) ==
          ErrorKind::validation);
}

TEST_CASE("element expressions evaluate fraction-first, membership second") {
    auto Z = parse_ring("Z").ring;
    CHECK(Z->print(parse_element(Z, "2+3*4")) == "14");
    CHECK(Z->print(parse_element(Z, "6/3")) == "2");
    CHECK(Z->print(parse_element(Z, "-(2-5)^2")) == "-9");
    CHECK(Z->print(parse_element(Z, "2^6")) == "64");
    CHECK(kind_of([&] { parse_element(Z, "1/2"); }) == ErrorKind::not_in_ring);
    CHECK(kind_of([&] { parse_element(Z, "1/0"); }) == ErrorKind::division_by_zero);
    CHECK(kind_of([&] { parse_element(Z, "2^70"); }) == ErrorKind::validation);
    CHECK(kind_of([&] { parse_element(Z, "x"); }) == ErrorKind::syntax);
    CHECK(kind_of([&] { parse_element(Z, "2 +"); }) == ErrorKind::syntax);
    CHECK(kind_of([&] { parse_element(Z, "2 2"); }) == ErrorKind::syntax);

    auto Q = parse_ring("Quad(5)").ring;
    CHECK(Q->print(parse_element(Q, "1 + s")) == "1 + s");
    CHECK(Q->print(parse_element(Q, "s^2")) == "-5");
    CHECK(Q->print(parse_element(Q, "(1+s)*(1-s)")) == "6");
    CHECK(Q->print(parse_element(Q, "6/(1+s)")) == "1 - s");

    auto P = parse_ring("Poly(Z,x)").ring;
    CHECK(P->print(parse_element(P, "x^2-1")) == "x^2 + -1");
    CHECK(P->print(parse_element(P, "x/2*2")) == "x");  // evaluated in F(x) first
    CHECK(P->print(parse_element(P, "(x+1)*(x-1)")) == "x^2 + -1");
    CHECK(kind_of([&] { parse_element(P, "x/2"); }) == ErrorKind::not_in_ring);
    CHECK(kind_of([&] { parse_element(P, "x^-1"); }) == ErrorKind::validation);

    auto B = parse_ring("Destroy(Z,2,x)").ring;
    CHECK(B->print(parse_element(B, "(x^2)/2")) == "(2/4)*x^2");
    CHECK(B->print(parse_element(B, "x*x")) == "(4/4)*x^2");
    CHECK(kind_of([&] { parse_element(B, "x/2"); }) == ErrorKind::not_in_ring);
}

TEST_CASE("negative exponents only on staged variables") {
    auto R = parse_ring("StagedIrred(primes=[0,2],vars=[x0,x1])").ring;
    CHECK(R->print(parse_element(R, "2/x0")) == "2*x0^-1");
    CHECK(R->print(parse_element(R, "2*x0^-1")) == "2*x0^-1");
    CHECK(R->print(parse_element(R, "x0*(2/x0)")) == "2");
    CHECK(R->print(parse_element(R, "10/(x0*x1)")) == "10*x0^-1*x1^-1");
    CHECK(kind_of([&] { parse_element(R, "1/x0"); }) == ErrorKind::not_in_ring);
    CHECK(kind_of([&] { parse_element(R, "x0^-1"); }) == ErrorKind::not_in_ring);
    CHECK(kind_of([&] { parse_element(R, "(x0+1)^-1"); }) == ErrorKind::validation);

    auto F = parse_ring("Fringe(StagedIrred(primes=[0],vars=[x0]),y)").ring;
    CHECK(F->print(parse_element(F, "x0*y + 2/x0")) == "x0*y + 2*x0^-1");
    CHECK(kind_of([&] { parse_element(F, "y^-1"); }) == ErrorKind::validation);

    auto A = parse_ring("Fringe(Z,y)").ring;
    CHECK(A->print(parse_element(A, "y^2/2 + y + 1")) == "(1/2)*y^2 + y + 1");
    CHECK(kind_of([&] { parse_element(A, "y/2"); }) == ErrorKind::not_in_ring);
}

TEST_CASE("print and parse round-trip on randomized canonical elements") {
    auto g = rng(818);
    auto roundtrip = [&](const RingPtr& r, const Elem& e) {
        Elem back = parse_element(r, r->print(e));
        CHECK(r->equal(back, e));
    };

    auto Z = IntRing::get();
    for (int t = 0; t < 40; ++t) roundtrip(Z, Z->from_int(rand_in(g, -500, 500)));

    auto Q = QuadRing::create(5);
    for (int t = 0; t < 40; ++t)
        roundtrip(Q, Q->make(rand_in(g, -9, 9), rand_in(g, -9, 9)));

    auto P = PolyRing::create(Z, "x");
    for (int t = 0; t < 40; ++t) {
        std::vector<Elem> cs;
        int d = static_cast<int>(rand_in(g, 0, 4));
        for (int k = 0; k <= d; ++k) cs.push_back(Z->from_int(rand_in(g, -9, 9)));
        roundtrip(P, P->make(std::move(cs)));
    }

    auto B = DestroyRing::create(Z, Z->from_int(2), "x");
    for (int t = 0; t < 40; ++t) {
        std::vector<Elem> ns;
        int d = static_cast<int>(rand_in(g, 0, 4));
        for (int k = 0; k <= d; ++k) ns.push_back(Z->from_int(rand_in(g, -9, 9)));
        roundtrip(B, B->make(std::move(ns)));
    }

    auto R = LaurentRing::create(EnumerationSchedule({0, 2}), {"x0", "x1"});
    std::vector<Elem> gens = {R->from_int(3), R->variable(0), R->cofactor(0), R->variable(1),
                              R->cofactor(1)};
    for (int t = 0; t < 40; ++t) {
        Elem e = R->from_int(rand_in(g, -3, 3));
        for (int k = 0; k < 4; ++k) {
            const Elem& pick = gens[static_cast<std::size_t>(rand_in(g, 0, 4))];
            e = rand_in(g, 0, 1) ? R->mul(e, pick) : R->add(e, pick);
        }
        roundtrip(R, e);
    }

    auto A = FringeRing::create(Z, "y");
    for (int t = 0; t < 40; ++t) {
        std::vector<Fraction> hi;
        int extra = static_cast<int>(rand_in(g, 0, 2));
        for (int k = 0; k < extra; ++k)
            hi.emplace_back(Z->from_int(rand_in(g, -9, 9)), Z->from_int(rand_in(g, 1, 9)));
        while (!hi.empty() && hi.back().is_zero()) hi.pop_back();
        roundtrip(A, A->make(Z->from_int(rand_in(g, -9, 9)), Z->from_int(rand_in(g, -9, 9)),
                             std::move(hi)));
    }
}

TEST_CASE("destroy descriptors accept element expressions for q") {
    auto pr = parse_ring("Destroy(Quad(5), s, t)");  // sqrt(-5) is prime in Z[sqrt(-5)]
    CHECK(pr.ring->signature() == "Destroy(Quad(5),s,t)");
    CHECK(kind_of([] { parse_ring("Destroy(Quad(5), 2, t)"); }) == ErrorKind::validation);
    CHECK(kind_of([] { parse_ring("Destroy(Z, 0, x)"); }) == ErrorKind::validation);
}

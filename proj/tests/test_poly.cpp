#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include "doctest.h"
#include "toric/fanpoly.hpp"

using namespace toric;

namespace {

SparseMultiPoly mono(int nvars, std::vector<long> e, long num, long den = 1) {
    return SparseMultiPoly::monomial(nvars, e, make_rat(num, den));
}

// an inert-style synthetic cone set: one block with inertia degree f; only
// the empty cone is invariant
InvariantConeSet inert_block(long m, long f) {
    InvariantConeSet cs;
    cs.blocks = {BlockIndex{0, 0, f}};
    cs.m = {m};
    cs.cones = {{}};
    return cs;
}

InvariantConeSet with_inertia(const Fan& f, const OrbifoldWeights& w,
                              const std::vector<long>& inertia) {
    InvariantConeSet cs = split_cone_set(f, w);
    for (size_t b = 0; b < cs.blocks.size(); ++b)
        cs.blocks[b].f = inertia[b % inertia.size()];
    return cs;
}

}  // namespace

TEST_CASE("single-cone factor shapes") {
    RFactorShape plain = r_factor_shape(2, 1, PolyVariant::Plain);
    CHECK(plain.num_exp == 1);
    CHECK(plain.den_exp == 1);
    RFactorShape camp = r_factor_shape(2, 1, PolyVariant::Campana);
    CHECK(camp.num_exp == 2);
    CHECK(camp.den_exp == 1);
    RFactorShape darm = r_factor_shape(3, 2, PolyVariant::Darmon);
    CHECK(darm.num_exp == 6);
    CHECK(darm.den_exp == 6);
}

TEST_CASE("hand-expanded numerators on the line") {
    Fan l = p1();
    {
        InvariantConeSet cs = split_cone_set(l, OrbifoldWeights::ones(2));
        SparseMultiPoly q = q_polynomial(cs, PolyVariant::Plain);
        SparseMultiPoly expect =
            SparseMultiPoly::constant(2, 1) - mono(2, {1, 1}, 1);
        CHECK(q == expect);
    }
    {
        InvariantConeSet cs = split_cone_set(l, OrbifoldWeights::parse("2,2", 2));
        SparseMultiPoly q = q_polynomial(cs, PolyVariant::Campana);
        SparseMultiPoly expect = SparseMultiPoly::constant(2, 1) +
                                 mono(2, {3, 0}, 1) + mono(2, {0, 3}, 1) -
                                 mono(2, {2, 2}, 1) - mono(2, {3, 2}, 1) -
                                 mono(2, {2, 3}, 1);
        CHECK(q == expect);
    }
    {
        InvariantConeSet cs = split_cone_set(l, OrbifoldWeights::parse("2,2", 2));
        SparseMultiPoly q = q_polynomial(cs, PolyVariant::Darmon);
        SparseMultiPoly expect =
            SparseMultiPoly::constant(2, 1) - mono(2, {2, 2}, 1);
        CHECK(q == expect);
    }
}

TEST_CASE("inert toy block") {
    SparseMultiPoly q = q_polynomial(inert_block(2, 2), PolyVariant::Campana);
    SparseMultiPoly expect = SparseMultiPoly::constant(1, 1) - mono(1, {4}, 1);
    CHECK(q == expect);
}

TEST_CASE("division is exact across the parameter grid") {
    std::vector<Fan> fans{p1(), p2(), p1xp1(), hirzebruch1()};
    for (const Fan& f : fans) {
        for (long m = 1; m <= 4; ++m) {
            for (long fin : {1L, 2L, 3L}) {
                OrbifoldWeights w;
                for (int i = 0; i < f.num_orbits; ++i)
                    w.w.push_back(Weight{m + (i % 2), false});
                for (PolyVariant v : {PolyVariant::Plain, PolyVariant::Campana,
                                      PolyVariant::Darmon}) {
                    InvariantConeSet cs = with_inertia(f, w, {fin, 1});
                    SparseMultiPoly q = q_polynomial(cs, v);  // throws on remainder
                    CHECK(q.constant_term() == 1);
                    DegreeBoundReport rep = verify_degree_bounds(q, cs, v);
                    if (!rep.ok)
                        for (const auto& issue : rep.issues) FAIL_CHECK(issue);
                }
            }
        }
    }
}

TEST_CASE("Darmon numerator is the plain numerator in powered variables") {
    std::vector<Fan> fans{p1(), p2(), p1xp1()};
    for (const Fan& f : fans) {
        for (long m : {2L, 3L}) {
            OrbifoldWeights w;
            for (int i = 0; i < f.num_orbits; ++i) w.w.push_back(Weight{m, false});
            InvariantConeSet cs = split_cone_set(f, w);
            SparseMultiPoly qd = q_polynomial(cs, PolyVariant::Darmon);
            InvariantConeSet cs1 = split_cone_set(f, OrbifoldWeights::ones(f.num_orbits));
            SparseMultiPoly qp = q_polynomial(cs1, PolyVariant::Plain);
            SparseMultiPoly subst = SparseMultiPoly::constant(qp.nvars, 0);
            for (const auto& [e, c] : qp.terms) {
                std::vector<long> pe = e;
                for (auto& x : pe) x *= m;
                subst = subst + SparseMultiPoly::monomial(qp.nvars, pe, c);
            }
            CHECK(qd == subst);
        }
    }
}

TEST_CASE("weight one reproduces the plain numerator") {
    for (const Fan& f : {p1(), p2(), p1xp1(), hirzebruch1()}) {
        InvariantConeSet cs = split_cone_set(f, OrbifoldWeights::ones(f.num_orbits));
        CHECK(q_polynomial(cs, PolyVariant::Campana) ==
              q_polynomial(cs, PolyVariant::Plain));
        CHECK(q_polynomial(cs, PolyVariant::Darmon) ==
              q_polynomial(cs, PolyVariant::Plain));
    }
}

TEST_CASE("rational function identity at a sample point") {
    // Q / prod(1-u^{mf}) must equal the direct geometric-series sum of the
    // cone factors, evaluated at u = 1/3 everywhere
    for (const Fan& f : {p1(), p2(), p1xp1()}) {
        for (long m : {1L, 2L, 3L}) {
            OrbifoldWeights w;
            for (int i = 0; i < f.num_orbits; ++i) w.w.push_back(Weight{m, false});
            InvariantConeSet cs = split_cone_set(f, w);
            for (PolyVariant v : {PolyVariant::Plain, PolyVariant::Campana,
                                  PolyVariant::Darmon}) {
                SparseMultiPoly q = q_polynomial(cs, v);
                Rat x = make_rat(1, 3);
                // direct sum over cones of prod of scalar factors
                Rat direct = 0;
                for (const auto& cone : cs.cones) {
                    Rat term = 1;
                    for (int b : cone) {
                        RFactorShape sh = r_factor_shape(cs.m[b], cs.blocks[b].f, v);
                        Rat num = 1, den = 1;
                        for (long i = 0; i < sh.num_exp; ++i) num *= x;
                        for (long i = 0; i < sh.den_exp; ++i) den *= x;
                        term *= num / (1 - den);
                    }
                    direct += term;
                }
                Rat lhs = q.eval(QVec(cs.nblocks(), x));
                for (int b = 0; b < cs.nblocks(); ++b) {
                    long mm = (v == PolyVariant::Plain) ? 1 : cs.m[b];
                    Rat den = 1;
                    for (long i = 0; i < mm * cs.blocks[b].f; ++i) den *= x;
                    lhs /= (1 - den);
                }
                CHECK(lhs == direct);  // both sides are exact rationals
            }
        }
    }
}

TEST_CASE("printing is stable") {
    InvariantConeSet cs = split_cone_set(p1(), OrbifoldWeights::parse("2,2", 2));
    SparseMultiPoly q = q_polynomial(cs, PolyVariant::Darmon);
    CHECK(q.str(cs.blocks) == q.str(cs.blocks));
    CHECK(q.str(cs.blocks).find("1") == 0);
}

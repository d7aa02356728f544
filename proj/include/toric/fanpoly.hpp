#ifndef TORIC_FANPOLY_HPP
#define TORIC_FANPOLY_HPP

#include <map>
#include <string>
#include <vector>
#include "toric/fan.hpp"
#include "toric/points.hpp"
#include "toric/real.hpp"

namespace toric {

// one variable block u_{i,w}: orbit i, place sub-label w, inertia degree f
struct BlockIndex {
    int orbit = 0;
    int place = 0;
    long f = 1;
};

// invariant-cone combinatorics abstracted away from the fan: which blocks
// each cone contains, plus per-block weight and inertia data
struct InvariantConeSet {
    std::vector<BlockIndex> blocks;
    std::vector<long> m;                   // finite weight per block
    std::vector<std::vector<int>> cones;   // sorted block-index lists, incl. empty

    int nblocks() const { return static_cast<int>(blocks.size()); }
};

// split case: one block per finite-weight orbit, f = 1; cones touching an
// infinite-weight ray are dropped entirely
InvariantConeSet split_cone_set(const Fan& f, const OrbifoldWeights& w);

// sparse exact polynomial in the block variables
class SparseMultiPoly {
  public:
    using Expo = std::vector<long>;
    std::map<Expo, Rat> terms;
    int nvars = 0;

    static SparseMultiPoly constant(int nvars, const Rat& c);
    static SparseMultiPoly monomial(int nvars, const Expo& e, const Rat& c);
    SparseMultiPoly operator+(const SparseMultiPoly& o) const;
    SparseMultiPoly operator-(const SparseMultiPoly& o) const;
    SparseMultiPoly operator*(const SparseMultiPoly& o) const;
    bool operator==(const SparseMultiPoly& o) const;
    Rat constant_term() const;
    // evaluate at rational substitutions
    Rat eval(const QVec& x) const;
    // evaluate with per-variable values given as arbitrary reals
    Real eval(const std::vector<Real>& x, mpfr_prec_t prec) const;
    // canonical print: graded by total degree, then lex; names from blocks
    std::string str(const std::vector<BlockIndex>& blocks) const;
};

// divide by (1 - u_var^k); sets exact to false when a remainder is left
SparseMultiPoly divide_one_minus_power(const SparseMultiPoly& p, int var, long k,
                                       bool& exact);

enum class PolyVariant { Plain, Campana, Darmon };
PolyVariant poly_variant(Variant v);

// numerator and denominator exponent of the single-cone factor
// R = u^{num_exp} / (1 - u^{den_exp}) for one block
struct RFactorShape {
    long num_exp;
    long den_exp;
};
RFactorShape r_factor_shape(long m, long f, PolyVariant variant);

// Q with sum_cones prod R = Q * prod_b (1 - u_b^{m_b f_b})^{-1}; computed by
// clearing denominators and verified by exact division with zero remainder
SparseMultiPoly q_polynomial(const InvariantConeSet& cs, PolyVariant variant);

struct DegreeBoundReport {
    bool ok = true;
    std::vector<std::string> issues;
};

DegreeBoundReport verify_degree_bounds(const SparseMultiPoly& q,
                                       const InvariantConeSet& cs,
                                       PolyVariant variant);

}  // namespace toric

#endif

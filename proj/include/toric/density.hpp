#ifndef TORIC_DENSITY_HPP
#define TORIC_DENSITY_HPP

#include <string>
#include <vector>
#include "toric/fan.hpp"
#include "toric/fanpoly.hpp"
#include "toric/picard.hpp"
#include "toric/real.hpp"

namespace toric {

struct LocalDensity {
    long p = 0;
    Rat s;
    Real direct_value;
    Real closed_value;
    Real tail_bound;
    PolyVariant variant = PolyVariant::Plain;
};

// direct lattice sum: (1-1/p)^d * sum over lattice vectors n with
// phi_{m,s}(n) <= N of [variant indicator](n) * p^{-phi_{m,s}(n)},
// with a rigorous geometric tail bound for the discarded shell
struct DirectDensity {
    Real value;
    Real tail_bound;
    long level = 0;
};

DirectDensity local_density_direct(const Fan& f, const OrbifoldWeights& w,
                                   PolyVariant variant, long p, const Rat& s,
                                   long level,
                                   mpfr_prec_t prec = Real::kDefaultPrec);

// closed form: (1-1/p)^d * prod_blocks (1-p^{-f s})^{-1} * Q(u = p^{-s/m});
// refuses evaluation below the certified convergence abscissa
Real local_density_closed(const Fan& f, const OrbifoldWeights& w,
                          PolyVariant variant, long p, const Rat& s,
                          mpfr_prec_t prec = Real::kDefaultPrec);

// same evaluation with a precomputed cone set and Q polynomial
Real local_density_closed_from_q(const InvariantConeSet& cs,
                                 const SparseMultiPoly& q, int dim, long p,
                                 const Rat& s,
                                 mpfr_prec_t prec = Real::kDefaultPrec);

// 2^d * sum over maximal cones of prod (m/s); cross-checked by quadrature
Real archimedean_density(const Fan& f, const OrbifoldWeights& w, const Rat& s);

// numerical cross-check of the archimedean density (per-cone Gauss-Laguerre)
double archimedean_density_quadrature(const Fan& f, const OrbifoldWeights& w,
                                      double s);

struct ConstantReport {
    Real alpha_direct;   // prod(1/m_i) * chi_Eff(-K - D): enters c_pred
    Real alpha_paper;    // chi_Eff(-K): the alternative normalization
    int b = 0;           // Picard rank
    Real d_inf;          // archimedean density at s = 1
    Real euler;          // truncated product of (1-1/p)^b * d_p(1)
    Real tail;           // bound on |log| of the neglected Euler tail
    Real c_pred;
    long cutoff = 0;

    std::string key_values() const;
    std::string csv_header() const;
    std::string csv_line() const;
};

ConstantReport predicted_constant(const Fan& f, const OrbifoldWeights& w,
                                  PolyVariant variant, long prime_cutoff,
                                  int workers = 1,
                                  mpfr_prec_t prec = Real::kDefaultPrec);

}  // namespace toric

#endif

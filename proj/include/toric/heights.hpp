#ifndef TORIC_HEIGHTS_HPP
#define TORIC_HEIGHTS_HPP

#include <map>
#include "toric/fan.hpp"
#include "toric/points.hpp"
#include "toric/real.hpp"

namespace toric {

struct HeightValue {
    std::map<Int, Rat> finite_exponents;  // prime -> exact exponent
    Real archimedean_log;
    Real total_log;

    Real total() const { return exp(total_log); }
};

// exponent e with local height p^e
Rat local_height_exponent(const Fan& f, const PLFunction& phi,
                          const TorusPoint& t, const Int& p);

// index of a maximal cone containing (log|t_1|,...,log|t_d|), decided by
// exact rational power comparisons (no floating point)
int archimedean_cone(const Fan& f, const TorusPoint& t);

// linear form u with phi(x) = <u,x> on that cone
QVec archimedean_dual_form(const Fan& f, const PLFunction& phi,
                           const TorusPoint& t);

Real archimedean_log_height(const Fan& f, const PLFunction& phi,
                            const TorusPoint& t,
                            mpfr_prec_t prec = Real::kDefaultPrec);

Real archimedean_height(const Fan& f, const PLFunction& phi,
                        const TorusPoint& t,
                        mpfr_prec_t prec = Real::kDefaultPrec);

HeightValue global_height(const Fan& f, const PLFunction& phi,
                          const TorusPoint& t,
                          mpfr_prec_t prec = Real::kDefaultPrec);

// exact rational value of H(phi,t)^L; L must clear every denominator in the
// exponents (any multiple of lcm of the weights does)
Rat global_height_power(const Fan& f, const PLFunction& phi,
                        const TorusPoint& t, long L);

// enumeration lower-bound constant: min over rays of phi(ray)
Rat height_kappa(const Fan& f, const PLFunction& phi);

}  // namespace toric

#endif

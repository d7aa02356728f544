#ifndef TORIC_FIT_HPP
#define TORIC_FIT_HPP

#include <string>
#include "toric/enumerate.hpp"

namespace toric {

struct FitResult {
    double c = 0;        // leading coefficient of c * B (log B)^{b-1}
    double c_err = 0;    // standard error of c
    double c2 = 0;       // optional lower-order coefficient (two-term fit)
    bool two_term = false;
    double residual_rms = 0;  // relative residual over the fitted checkpoints
    int used_points = 0;
};

// least squares for count ~ c * B (log B)^(b-1) [+ c2 * B (log B)^(b-2)],
// restricted to checkpoints with B >= min_bound
FitResult fit_leading_constant(const std::vector<Rat>& checkpoints,
                               const std::vector<long long>& counts, int b,
                               bool two_term, double min_bound = 0);

struct FitReport {
    FitResult fit;
    double c_pred = 0;
    double ratio = 0;  // fitted / predicted

    std::string text() const;
    std::string csv() const;  // c_fit,c_fit_err,c_pred,ratio
};

FitReport fit_and_report(const CountRun& run, int b, double c_pred,
                         bool two_term = false, double min_bound = 0);

}  // namespace toric

#endif

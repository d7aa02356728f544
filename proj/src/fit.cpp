#include "toric/fit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace toric {

FitResult fit_leading_constant(const std::vector<Rat>& checkpoints,
                               const std::vector<long long>& counts, int b,
                               bool two_term, double min_bound) {
    if (checkpoints.size() != counts.size())
        throw std::invalid_argument("checkpoint/count length mismatch");
    std::vector<double> x1, x2, y;
    for (size_t k = 0; k < checkpoints.size(); ++k) {
        double B = checkpoints[k].get_d();
        if (B < min_bound || B <= 1) continue;
        double lg = std::log(B);
        x1.push_back(B * std::pow(lg, b - 1));
        x2.push_back(B * std::pow(lg, b - 2));
        y.push_back(static_cast<double>(counts[k]));
    }
    size_t n = y.size();
    int k = two_term ? 2 : 1;
    if (static_cast<int>(n) < k + 1)
        throw std::invalid_argument("too few checkpoints for the fit");
    FitResult r;
    r.two_term = two_term;
    r.used_points = static_cast<int>(n);
    if (!two_term) {
        double sxx = 0, sxy = 0;
        for (size_t i = 0; i < n; ++i) {
            sxx += x1[i] * x1[i];
            sxy += x1[i] * y[i];
        }
        r.c = sxy / sxx;
        double rss = 0;
        for (size_t i = 0; i < n; ++i) {
            double e = y[i] - r.c * x1[i];
            rss += e * e;
        }
        double s2 = n > 1 ? rss / (n - 1) : 0;
        r.c_err = std::sqrt(s2 / sxx);
    } else {
        // 2x2 normal equations
        double a11 = 0, a12 = 0, a22 = 0, b1 = 0, b2 = 0;
        for (size_t i = 0; i < n; ++i) {
            a11 += x1[i] * x1[i];
            a12 += x1[i] * x2[i];
            a22 += x2[i] * x2[i];
            b1 += x1[i] * y[i];
            b2 += x2[i] * y[i];
        }
        double det = a11 * a22 - a12 * a12;
        if (det == 0) throw std::runtime_error("degenerate design matrix");
        r.c = (b1 * a22 - b2 * a12) / det;
        r.c2 = (a11 * b2 - a12 * b1) / det;
        double rss = 0;
        for (size_t i = 0; i < n; ++i) {
            double e = y[i] - r.c * x1[i] - r.c2 * x2[i];
            rss += e * e;
        }
        double s2 = n > 2 ? rss / (n - 2) : 0;
        r.c_err = std::sqrt(s2 * a22 / det);
    }
    double rel2 = 0;
    for (size_t i = 0; i < n; ++i) {
        double model = r.c * x1[i] + (two_term ? r.c2 * x2[i] : 0.0);
        if (y[i] > 0) {
            double e = (y[i] - model) / y[i];
            rel2 += e * e;
        }
    }
    r.residual_rms = std::sqrt(rel2 / n);
    return r;
}

std::string FitReport::text() const {
    std::ostringstream o;
    o << "c_fit = " << fit.c << " +/- " << fit.c_err;
    if (fit.two_term) o << "  (c2 = " << fit.c2 << ")";
    o << "\nc_pred = " << c_pred << "\nratio fitted/predicted = " << ratio
      << "\nresidual rms (relative) = " << fit.residual_rms << " over "
      << fit.used_points << " checkpoints\n";
    return o.str();
}

std::string FitReport::csv() const {
    std::ostringstream o;
    o << "c_fit,c_fit_err,c_pred,ratio\n"
      << fit.c << "," << fit.c_err << "," << c_pred << "," << ratio << "\n";
    return o.str();
}

FitReport fit_and_report(const CountRun& run, int b, double c_pred,
                         bool two_term, double min_bound) {
    if (run.checkpoints.size() < 5)
        throw std::invalid_argument("need at least 5 checkpoints");
    FitReport rep;
    rep.fit = fit_leading_constant(run.checkpoints, run.counts, b, two_term,
                                   min_bound);
    rep.c_pred = c_pred;
    rep.ratio = c_pred != 0 ? rep.fit.c / c_pred : 0;
    return rep;
}

}  // namespace toric

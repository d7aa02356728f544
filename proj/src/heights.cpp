#include "toric/heights.hpp"

#include <stdexcept>
#include "toric/io.hpp"

namespace toric {

Rat local_height_exponent(const Fan& f, const PLFunction& phi,
                          const TorusPoint& t, const Int& p) {
    Vec dv = degree_vector(t, p);
    QVec q;
    q.reserve(dv.size());
    for (const auto& e : dv) q.emplace_back(e);
    return evaluate_pl(f, phi, q);
}

namespace {

// |q|^w as an exact rational, w possibly negative
Rat abs_pow(const Rat& q, const Int& w) {
    Rat a = abs(q);
    Rat r = 1;
    Int n = abs(w);
    Rat base = (w < 0) ? Rat(1) / a : a;
    // small exponents only; plain square-and-multiply
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

// sign of sum_k c_k * log|t_k| with rational c, decided exactly:
// scale c to integers w and compare prod |t_k|^{w_k} with 1
int log_combination_sign(const QVec& c, const QVec& t) {
    Int den = 1;
    for (const auto& e : c) den = lcm(den, e.get_den());
    Rat prod = 1;
    for (size_t k = 0; k < c.size(); ++k) {
        Int w = c[k].get_num() * (den / c[k].get_den());
        if (w != 0) prod *= abs_pow(t[k], w);
    }
    if (prod > 1) return 1;
    if (prod < 1) return -1;
    return 0;
}

}  // namespace

int archimedean_cone(const Fan& f, const TorusPoint& t) {
    for (size_t c = 0; c < f.max_cones.size(); ++c) {
        const QMat& d = f.cone_dual(static_cast<int>(c));
        bool inside = true;
        for (int r = 0; r < f.dim; ++r)
            if (log_combination_sign(d[r], t.coords) < 0) {
                inside = false;
                break;
            }
        if (inside) return static_cast<int>(c);
    }
    throw std::runtime_error("log-absolute-value vector lies in no cone");
}

QVec archimedean_dual_form(const Fan& f, const PLFunction& phi,
                           const TorusPoint& t) {
    int c = archimedean_cone(f, t);
    const QMat& d = f.cone_dual(c);
    QVec u(f.dim, Rat(0));
    for (int r = 0; r < f.dim; ++r) {
        const Rat& val = phi.ray_values[f.max_cones[c][r]];
        for (int k = 0; k < f.dim; ++k) u[k] += val * d[r][k];
    }
    return u;
}

Real archimedean_log_height(const Fan& f, const PLFunction& phi,
                            const TorusPoint& t, mpfr_prec_t prec) {
    QVec u = archimedean_dual_form(f, phi, t);
    Real s(prec);
    for (int k = 0; k < f.dim; ++k) {
        if (u[k] == 0) continue;
        Rat a = abs(t.coords[k]);
        s += Real(u[k], prec) * log(Real(a, prec));
    }
    return s;
}

Real archimedean_height(const Fan& f, const PLFunction& phi,
                        const TorusPoint& t, mpfr_prec_t prec) {
    return exp(archimedean_log_height(f, phi, t, prec));
}

HeightValue global_height(const Fan& f, const PLFunction& phi,
                          const TorusPoint& t, mpfr_prec_t prec) {
    HeightValue h;
    h.archimedean_log = Real(prec);
    h.total_log = Real(prec);
    for (const auto& p : support_primes(t.coords)) {
        Rat e = local_height_exponent(f, phi, t, p);
        if (e == 0) continue;
        h.finite_exponents[p] = e;
        h.total_log += Real(e, prec) * log(Real(p, prec));
    }
    h.archimedean_log = archimedean_log_height(f, phi, t, prec);
    h.total_log += h.archimedean_log;
    return h;
}

Rat global_height_power(const Fan& f, const PLFunction& phi,
                        const TorusPoint& t, long L) {
    Rat result = 1;
    for (const auto& p : support_primes(t.coords)) {
        Rat e = local_height_exponent(f, phi, t, p) * L;
        if (e.get_den() != 1)
            throw std::invalid_argument("L does not clear the exponent denominators");
        result *= abs_pow(Rat(p), e.get_num());
    }
    QVec u = archimedean_dual_form(f, phi, t);
    for (int k = 0; k < f.dim; ++k) {
        Rat e = u[k] * L;
        if (e.get_den() != 1)
            throw std::invalid_argument("L does not clear the exponent denominators");
        if (e != 0) result *= abs_pow(t.coords[k], e.get_num());
    }
    return result;
}

Rat height_kappa(const Fan& f, const PLFunction& phi) {
    Rat k = phi.ray_values.at(0);
    for (const auto& v : phi.ray_values)
        if (v < k) k = v;
    return k;
}

}  // namespace toric

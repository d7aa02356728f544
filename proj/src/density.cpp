#include "toric/density.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>
#include "toric/io.hpp"

namespace toric {

namespace {

Real pow_rat(long p, const Rat& e, mpfr_prec_t prec) {
    return pow(Real(Int(p), prec), Real(e, prec));
}

bool lambda_passes(long lambda, long m, PolyVariant variant) {
    switch (variant) {
        case PolyVariant::Plain: return true;
        case PolyVariant::Campana: return lambda >= m;
        case PolyVariant::Darmon: return lambda % m == 0;
    }
    return true;
}

// sum over lambda in Z_{>=1}^k on the given blocks with s*sum(lambda/m) <= N
void cone_sum(const std::vector<long>& m, PolyVariant variant, long p,
              const Rat& s, long level, size_t idx, const Rat& partial_phi,
              Real& acc, mpfr_prec_t prec) {
    if (idx == m.size()) {
        acc += pow_rat(p, -partial_phi, prec);
        return;
    }
    for (long lam = 1;; ++lam) {
        Rat phi = partial_phi + s * make_rat(lam, m[idx]);
        if (phi > level) break;
        if (!lambda_passes(lam, m[idx], variant)) continue;
        cone_sum(m, variant, p, s, level, idx + 1, phi, acc, prec);
    }
}

}  // namespace

DirectDensity local_density_direct(const Fan& f, const OrbifoldWeights& w,
                                   PolyVariant variant, long p, const Rat& s,
                                   long level, mpfr_prec_t prec) {
    if (s <= 0) throw std::invalid_argument("s must be positive");
    InvariantConeSet cs = split_cone_set(f, w);
    DirectDensity out;
    out.value = Real(prec);
    out.level = level;
    // partition of the cocharacter lattice by relative cone interiors: each
    // lattice vector is a strictly positive combination on exactly one cone
    for (const auto& cone : cs.cones) {
        std::vector<long> m;
        m.reserve(cone.size());
        for (int b : cone) m.push_back(cs.m[b]);
        cone_sum(m, variant, p, s, level, 0, Rat(0), out.value, prec);
    }
    // tail: lattice vectors at height j <= phi < j+1 number at most
    // (C(j+2))^d per maximal cone with C = max(max m / s, 1)
    long maxm = 1;
    for (long m : cs.m) maxm = std::max(maxm, m);
    double c = std::max(Rat(Rat(maxm) / s).get_d(), 1.0);
    double ncones = static_cast<double>(f.max_cones.size());
    double tail = 0;
    for (long j = level;; ++j) {
        double term = ncones * std::pow(c * (j + 2), f.dim) *
                      std::pow(static_cast<double>(p), -static_cast<double>(j));
        tail += term;
        if (term < tail * 1e-18 || j > level + 10000) break;
    }
    Real norm = pow(Real(1.0, prec) - Real(1.0, prec) / Real(Int(p), prec),
                    Real(static_cast<double>(f.dim), prec));
    out.value = out.value * norm;
    out.tail_bound = Real(tail, prec) * norm;
    return out;
}

Real local_density_closed_from_q(const InvariantConeSet& cs,
                                 const SparseMultiPoly& q, int dim, long p,
                                 const Rat& s, mpfr_prec_t prec) {
    std::vector<Real> u;
    u.reserve(cs.nblocks());
    for (int b = 0; b < cs.nblocks(); ++b)
        u.push_back(pow_rat(p, -s / cs.m[b], prec));
    Real value = q.eval(u, prec);
    for (int b = 0; b < cs.nblocks(); ++b) {
        // the cleared block denominator (1 - u^{m f}) evaluates to 1 - p^{-f s}
        Real den = Real(1.0, prec) -
                   pow_rat(p, -s * Rat(cs.blocks[b].f), prec);
        value = value / den;
    }
    Real norm = pow(Real(1.0, prec) - Real(1.0, prec) / Real(Int(p), prec),
                    Real(static_cast<double>(dim), prec));
    return value * norm;
}

Real local_density_closed(const Fan& f, const OrbifoldWeights& w,
                          PolyVariant variant, long p, const Rat& s,
                          mpfr_prec_t prec) {
    InvariantConeSet cs = split_cone_set(f, w);
    // certified convergence region of the regularized product
    Rat abscissa = 0;
    for (int b = 0; b < cs.nblocks(); ++b) {
        Rat a = make_rat(cs.m[b], cs.m[b] + 1);
        if (a > abscissa) abscissa = a;
    }
    if (s < abscissa)
        throw std::runtime_error("s below the certified convergence abscissa");
    SparseMultiPoly q = q_polynomial(cs, variant);
    return local_density_closed_from_q(cs, q, f.dim, p, s, prec);
}

Real archimedean_density(const Fan& f, const OrbifoldWeights& w, const Rat& s) {
    if (s <= 0) throw std::invalid_argument("s must be positive");
    for (const auto& wt : w.w)
        if (wt.infinite)
            throw std::runtime_error("archimedean density diverges with an infinite weight");
    Rat total = 0;
    for (const auto& mc : f.max_cones) {
        Rat prod = 1;
        for (int i : mc) prod *= make_rat(w.w[f.orbit_of_ray[i]].m) / s;
        total += prod;
    }
    Int twod = 1;
    twod <<= f.dim;
    return Real(total * Rat(twod));
}

namespace {

// Gauss-Laguerre nodes/weights by Newton iteration on the recurrence
void gauss_laguerre(int n, std::vector<double>& x, std::vector<double>& wt) {
    x.assign(n, 0.0);
    wt.assign(n, 0.0);
    double z = 0;
    for (int i = 0; i < n; ++i) {
        if (i == 0)
            z = 3.0 / (1.0 + 2.4 * n);
        else if (i == 1)
            z += 15.0 / (1.0 + 2.5 * n);
        else
            z += (1.0 + 2.55 * (i - 1)) / (1.9 * (i - 1)) * (z - x[i - 2]);
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2 * j - 1 - z) * p2 - (j - 1) * p3) / j;
            }
            pp = n * (p1 - p2) / z;
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-14 * std::max(1.0, z)) break;
        }
        x[i] = z;
        wt[i] = 1.0 / (z * pp * pp);  // w_i = 1 / (x_i * L_n'(x_i)^2)
    }
}

Rat rationalize(double v) {
    // exact dyadic representation of the double
    Rat r(v);
    return r;
}

}  // namespace

double archimedean_density_quadrature(const Fan& f, const OrbifoldWeights& w,
                                      double s) {
    const int n = 24;
    std::vector<double> gx, gw;
    gauss_laguerre(n, gx, gw);
    PLFunction phi = log_anticanonical(f, w);
    double total = 0;
    std::vector<int> idx(f.dim, 0);
    for (size_t c = 0; c < f.max_cones.size(); ++c) {
        const auto& mc = f.max_cones[c];
        // integrate e^{-s*phi(x)} dx over the cone by tensor quadrature in the
        // unimodular ray coordinates, evaluating phi through the generic
        // locate-based evaluator at each node
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            double wprod = 1, lamsum = 0;
            QVec x(f.dim, Rat(0));
            for (int k = 0; k < f.dim; ++k) {
                double lam = gx[idx[k]];
                wprod *= gw[idx[k]];
                lamsum += lam;
                Rat rl = rationalize(lam);
                for (int r = 0; r < f.dim; ++r)
                    x[r] += rl * Rat(f.rays[mc[k]][r]);
            }
            double phival = evaluate_pl(f, phi, x).get_d();
            total += wprod * std::exp(lamsum - s * phival);
            int k = 0;
            while (k < f.dim && ++idx[k] == n) idx[k++] = 0;
            if (k == f.dim) break;
        }
    }
    return std::ldexp(total, f.dim);  // 2^d sign components
}

std::string ConstantReport::key_values() const {
    std::ostringstream o;
    o << "alpha_direct=" << alpha_direct.str() << "\n";
    o << "alpha_paper=" << alpha_paper.str() << "\n";
    o << "b=" << b << "\n";
    o << "d_inf=" << d_inf.str() << "\n";
    o << "euler_P=" << euler.str() << "\n";
    o << "tail=" << tail.str(6) << "\n";
    o << "c_pred=" << c_pred.str() << "\n";
    return o.str();
}

std::string ConstantReport::csv_header() const {
    return "alpha_direct,alpha_paper,b,d_inf,euler_P,tail,c_pred,cutoff";
}

std::string ConstantReport::csv_line() const {
    std::ostringstream o;
    o << alpha_direct.str() << "," << alpha_paper.str() << "," << b << ","
      << d_inf.str() << "," << euler.str() << "," << tail.str(6) << ","
      << c_pred.str() << "," << cutoff;
    return o.str();
}

ConstantReport predicted_constant(const Fan& f, const OrbifoldWeights& w,
                                  PolyVariant variant, long prime_cutoff,
                                  int workers, mpfr_prec_t prec) {
    ConstantReport rep;
    PicardData pic = picard(f);
    rep.b = pic.rank;
    rep.cutoff = prime_cutoff;

    Rat inv_m_prod = 1;
    for (const auto& wt : w.w) {
        if (wt.infinite) throw std::runtime_error("prediction needs finite weights");
        inv_m_prod *= make_rat(1, wt.m);
    }
    QVec log_ac = log_anticanonical_class(f, pic, w);
    rep.alpha_direct = Real(inv_m_prod * effective_cone_constant(pic, log_ac), prec);
    QVec ac = log_anticanonical_class(f, pic, OrbifoldWeights::ones(f.num_orbits));
    rep.alpha_paper = Real(effective_cone_constant(pic, ac), prec);

    rep.d_inf = archimedean_density(f, w, Rat(1));

    // Euler product over p <= cutoff of (1-1/p)^b * d_p(1); fixed-size chunks
    // reduced in index order so the result is independent of worker count
    InvariantConeSet cs = split_cone_set(f, w);
    SparseMultiPoly q = q_polynomial(cs, variant);
    std::vector<long> primes = primes_below(prime_cutoff + 1);
    const size_t chunk = 64;
    size_t nchunks = (primes.size() + chunk - 1) / chunk;
    std::vector<Real> chunk_prod(nchunks, Real(1.0, prec));
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            size_t ci = next.fetch_add(1);
            if (ci >= nchunks) return;
            Real prod(1.0, prec);
            size_t lo = ci * chunk, hi = std::min(lo + chunk, primes.size());
            for (size_t i = lo; i < hi; ++i) {
                long p = primes[i];
                Real dp = local_density_closed_from_q(cs, q, f.dim, p, Rat(1), prec);
                Real conv = pow(Real(1.0, prec) - Real(1.0, prec) / Real(Int(p), prec),
                                Real(static_cast<double>(rep.b), prec));
                prod *= conv * dp;
            }
            chunk_prod[ci] = prod;
        }
    };
    int nthreads = std::max(1, workers);
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    rep.euler = Real(1.0, prec);
    for (const auto& cp : chunk_prod) rep.euler *= cp;

    // tail: each neglected factor is 1 + sum_a c_a p^{-theta_a} with theta_a
    // the per-monomial convergence exponent; sum_{n>P} n^{-theta} <=
    // P^{1-theta}/(theta-1)
    double tail = 0;
    for (const auto& [e, c] : q.terms) {
        double theta = 0;
        bool nonzero = false;
        for (int k = 0; k < cs.nblocks(); ++k)
            if (e[k]) {
                nonzero = true;
                theta += static_cast<double>(e[k]) / cs.m[k];
            }
        if (!nonzero) continue;
        double ca = std::abs(Rat(c).get_d());
        if (theta <= 1.0001) {
            tail += 1e9;  // should not happen: degree bounds forbid it
            continue;
        }
        tail += 2.0 * ca * std::pow(static_cast<double>(prime_cutoff), 1.0 - theta) /
                (theta - 1.0);
    }
    rep.tail = Real(tail, prec);

    Rat fact = 1;
    for (int k = 2; k < rep.b; ++k) fact *= k;
    rep.c_pred = rep.alpha_direct / Real(fact, prec) * rep.d_inf * rep.euler;
    return rep;
}

}  // namespace toric

#include "toric/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>
#include "toric/io.hpp"

namespace toric {

namespace {

Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int sqrt_floor(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int root_floor(const Int& n, unsigned long k) {
    Int r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

Rat rat_pow(const Rat& q, long e) {
    Rat r = 1;
    Rat base = q;
    long n = e;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

long to_long(const Int& n) { return n.get_si(); }

}  // namespace

std::vector<long> enumerate_mfull(long X, long m) {
    std::vector<long> out;
    if (X < 1) return out;
    if (m <= 1) {
        out.resize(X);
        std::iota(out.begin(), out.end(), 1L);
        return out;
    }
    long proot = to_long(root_floor(Int(X), static_cast<unsigned long>(m)));
    std::vector<long> ps = primes_below(proot + 1);
    // DFS over primes: exponent 0 or >= m on each
    std::vector<std::pair<size_t, long>> stack{{0, 1}};
    while (!stack.empty()) {
        auto [i, n] = stack.back();
        stack.pop_back();
        out.push_back(n);
        for (size_t j = i; j < ps.size(); ++j) {
            Int pw = int_pow(Int(ps[j]), static_cast<unsigned long>(m));
            if (pw > X / n) break;
            long v = n * to_long(pw);
            while (true) {
                stack.emplace_back(j + 1, v);
                if (ps[j] > X / v) break;
                v *= ps[j];
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> enumerate_mth_powers(long X, long m) {
    std::vector<long> out;
    if (m <= 1) return enumerate_mfull(X, 1);
    for (long k = 1;; ++k) {
        Int pw = int_pow(Int(k), static_cast<unsigned long>(m));
        if (pw > X) break;
        out.push_back(to_long(pw));
    }
    return out;
}

std::vector<Rat> checkpoint_grid(const Rat& bound, int min_points, int max_points) {
    std::vector<Rat> grid;
    Rat b = bound;
    for (int k = 0; k < max_points && b >= 1; ++k) {
        grid.push_back(b);
        b /= 2;
    }
    if (grid.empty()) grid.push_back(bound);
    (void)min_points;
    std::reverse(grid.begin(), grid.end());
    return grid;
}

std::string CountRun::csv() const {
    std::ostringstream o;
    o << "B,count,variant,fan,weights,elapsed_ms\n";
    for (size_t k = 0; k < checkpoints.size(); ++k)
        o << checkpoints[k].get_d() << "," << counts[k] << "," << variant << ","
          << fan_name << "," << weights << "," << elapsed_ms << "\n";
    return o.str();
}

namespace {

// ---- fan-shape recognition -------------------------------------------------

struct PnShape {
    int n = 0;
    std::vector<long> mu;  // weight of coordinate x_j, j = 0..n; 0 marks infinite
};

bool same_cone_list(std::vector<std::vector<int>> a, std::vector<std::vector<int>> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::optional<PnShape> match_pn(const Fan& f, const OrbifoldWeights& w) {
    Fan ref = projective_space(f.dim);
    if (f.rays != ref.rays || !same_cone_list(f.max_cones, ref.max_cones))
        return std::nullopt;
    PnShape s;
    s.n = f.dim;
    s.mu.resize(f.dim + 1);
    auto weight_of_ray = [&](int ray) {
        const Weight& wt = w.w[f.orbit_of_ray[ray]];
        return wt.infinite ? 0L : wt.m;
    };
    for (int j = 1; j <= f.dim; ++j) s.mu[j] = weight_of_ray(j - 1);
    s.mu[0] = weight_of_ray(f.dim);
    return s;
}

struct ProductShape {
    long m1 = 1, m2 = 1;  // equal weights within each factor
};

std::optional<ProductShape> match_p1xp1(const Fan& f, const OrbifoldWeights& w) {
    Fan ref = p1xp1();
    if (f.rays != ref.rays || !same_cone_list(f.max_cones, ref.max_cones))
        return std::nullopt;
    auto wt = [&](int ray) -> std::optional<long> {
        const Weight& x = w.w[f.orbit_of_ray[ray]];
        if (x.infinite) return std::nullopt;
        return x.m;
    };
    auto a0 = wt(0), a1 = wt(1), b0 = wt(2), b1 = wt(3);
    if (!a0 || !a1 || !b0 || !b1) return std::nullopt;
    if (*a0 != *a1 || *b0 != *b1) return std::nullopt;
    ProductShape s;
    s.m1 = *a0;
    s.m2 = *b0;
    return s;
}

// coordinate list admitted by the variant for a weight-mu coordinate
std::optional<std::vector<long>> coordinate_list(long X, long mu, Variant variant) {
    if (mu == 1) return enumerate_mfull(X, 1);
    switch (variant) {
        case Variant::Plain:
            return enumerate_mfull(X, 1);
        case Variant::Campana:
        case Variant::GeomCampana:
        case Variant::StrongCampana:
            return enumerate_mfull(X, mu);
        case Variant::Darmon:
        case Variant::GeomDarmon:
        case Variant::StrongDarmon:
            return enumerate_mth_powers(X, mu);
        case Variant::WeakCampana:
            return std::nullopt;  // only coincides with the above on P1
    }
    return std::nullopt;
}

// smallest checkpoint index admitting the value, or -1
template <class Pred>
int bucket_of(const std::vector<Rat>& thresh, Pred admitted) {
    for (size_t k = 0; k < thresh.size(); ++k)
        if (admitted(thresh[k])) return static_cast<int>(k);
    return -1;
}

void cumulate(std::vector<long long>& counts) {
    for (size_t k = 1; k < counts.size(); ++k) counts[k] += counts[k - 1];
}

// ---- P1 with equal weights -------------------------------------------------

std::vector<unsigned> phi_sieve(long X) {
    std::vector<unsigned> phi(X + 1);
    for (long i = 0; i <= X; ++i) phi[i] = static_cast<unsigned>(i);
    for (long i = 2; i <= X; ++i)
        if (phi[i] == static_cast<unsigned>(i))  // prime
            for (long j = i; j <= X; j += i) phi[j] -= phi[j] / i;
    return phi;
}

// ordered positive coprime pairs with max <= X, times 2 sign choices
std::vector<long long> p1_plain_counts(const std::vector<Rat>& thresh) {
    // H = max(a,b)^2, so the cap at threshold T is floor(sqrt(T))
    std::vector<long> caps;
    for (const auto& t : thresh) caps.push_back(to_long(sqrt_floor(floor_rat(t))));
    long capmax = caps.back();
    std::vector<long long> counts(thresh.size(), 0);
    if (capmax < 1) return counts;
    auto phi = phi_sieve(capmax);
    std::vector<long long> prefix(capmax + 1, 0);
    for (long h = 1; h <= capmax; ++h) prefix[h] = prefix[h - 1] + phi[h];
    for (size_t k = 0; k < thresh.size(); ++k)
        counts[k] = caps[k] >= 1 ? 2 * (2 * prefix[caps[k]] - 1) : 0;
    return counts;
}

std::vector<long long> p1_equal_counts(long m, Variant variant,
                                       const std::vector<Rat>& thresh,
                                       int workers) {
    if (m == 1) return p1_plain_counts(thresh);
    // H = max(a,b)^{2/m}: cap at T is the largest t with t^2 <= T^m
    std::vector<long> caps;
    for (const auto& t : thresh)
        caps.push_back(to_long(sqrt_floor(floor_rat(rat_pow(t, m)))));
    long capmax = caps.back();
    std::vector<long long> hist(thresh.size(), 0);
    if (capmax < 1) return hist;
    Variant v = (variant == Variant::WeakCampana) ? Variant::Campana : variant;
    auto listopt = coordinate_list(capmax, m, v);
    if (!listopt) throw std::runtime_error("variant unsupported on this path");
    const std::vector<long>& list = *listopt;
    size_t nl = list.size();
    const size_t chunk = 64;
    size_t nchunks = (nl + chunk - 1) / chunk;
    std::vector<std::vector<long long>> parts(nchunks);
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            size_t ci = next.fetch_add(1);
            if (ci >= nchunks) return;
            std::vector<long long> local(thresh.size(), 0);
            size_t lo = ci * chunk, hi = std::min(lo + chunk, nl);
            for (size_t i = lo; i < hi; ++i) {
                long a = list[i];
                for (size_t j = 0; j < nl; ++j) {
                    long b = list[j];
                    if (std::gcd(a, b) != 1) continue;
                    long h = std::max(a, b);
                    auto it = std::lower_bound(caps.begin(), caps.end(), h);
                    if (it == caps.end()) continue;
                    local[it - caps.begin()] += 2;  // sign of the coordinate
                }
            }
            parts[ci] = std::move(local);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(1, workers); ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    for (const auto& part : parts)
        if (!part.empty())
            for (size_t k = 0; k < hist.size(); ++k) hist[k] += part[k];
    cumulate(hist);
    return hist;
}

// ---- P2 with trivial weights -----------------------------------------------

std::vector<long long> p2_plain_counts(const std::vector<Rat>& thresh) {
    // H = (x0 x1 x2)^2 / min^3; with the multiset a <= b <= c this is b^2c^2/a
    std::vector<long long> hist(thresh.size(), 0);
    const Rat& tmax = thresh.back();
    for (long a = 1; Rat(Int(a) * Int(a) * Int(a)) <= tmax; ++a) {
        for (long b = a; Rat(int_pow(Int(b), 4)) <= tmax * a; ++b) {
            long gab = std::gcd(a, b);
            Int bb = Int(b) * b;
            for (long c = b;; ++c) {
                Rat h = Rat(bb * c * c) / a;
                if (h > tmax) break;
                if (std::gcd(gab, c) != 1) continue;
                int k = bucket_of(thresh, [&](const Rat& t) { return h <= t; });
                if (k < 0) continue;
                long long perms;
                if (a == b && b == c)
                    perms = 1;
                else if (a == b || b == c)
                    perms = 3;
                else
                    perms = 6;
                hist[k] += perms * 4;  // sign classes of (x0, x1) with x2 > 0
            }
        }
    }
    cumulate(hist);
    return hist;
}

// ---- generic P^n via coordinate lists --------------------------------------

struct PnExact {
    long L = 1;       // common exponent denominator
    long kappaL = 0;  // L * sum(1/mu_j)
    std::vector<long> e;  // per-coordinate exponent 2L/mu_j of |x_j| in H^L
};

PnExact pn_exact(const PnShape& s) {
    PnExact x;
    for (long mu : s.mu) x.L = std::lcm(x.L, mu);
    for (long mu : s.mu) {
        x.e.push_back(2 * x.L / mu);
        x.kappaL += x.L / mu;
    }
    return x;
}

// H^L of a positive tuple as an exact rational
Rat pn_height_power(const PnExact& x, const std::vector<long>& coords) {
    Int num = 1;
    long mn = coords[0];
    for (long c : coords) mn = std::min(mn, c);
    for (size_t j = 0; j < coords.size(); ++j)
        num *= int_pow(Int(coords[j]), static_cast<unsigned long>(x.e[j]));
    return Rat(num) / Rat(int_pow(Int(mn), static_cast<unsigned long>(x.kappaL)));
}

long pn_coordinate_cap(const PnShape& s, const PnExact& x, size_t j, const Rat& t) {
    // |x_j| <= max(T^{mu_j/2}, T^{1/kappa})
    Rat tl = rat_pow(t, x.L);
    Int cap1 = root_floor(floor_rat(rat_pow(t, s.mu[j])), 2);
    Int cap2 = root_floor(floor_rat(tl), static_cast<unsigned long>(x.kappaL));
    Int cap = std::max(cap1, cap2);
    return std::max(0L, to_long(cap));
}

void pn_tuples(const PnShape& s, Variant variant, const Rat& tmax,
               const std::function<void(const std::vector<long>&, const Rat&)>& emit) {
    PnExact x = pn_exact(s);
    std::vector<std::vector<long>> lists(s.n + 1);
    for (int j = 0; j <= s.n; ++j) {
        if (s.mu[j] == 0) {  // infinite weight: coordinate must be a unit
            lists[j] = {1};
            continue;
        }
        auto lo = coordinate_list(pn_coordinate_cap(s, x, j, tmax), s.mu[j], variant);
        if (!lo) throw std::runtime_error("variant unsupported on this path");
        lists[j] = std::move(*lo);
    }
    std::vector<long> coords(s.n + 1, 1);
    std::function<void(int, long)> rec = [&](int j, long g) {
        if (j > s.n) {
            if (g != 1) return;
            Rat h = pn_height_power(x, coords);
            emit(coords, h);
            return;
        }
        for (long v : lists[j]) {
            coords[j] = v;
            rec(j + 1, std::gcd(g, v));
        }
    };
    rec(0, 0);
}

std::vector<long long> pn_counts(const PnShape& s, Variant variant,
                                 const std::vector<Rat>& thresh) {
    PnExact x = pn_exact(s);
    std::vector<Rat> threshL;
    for (const auto& t : thresh) threshL.push_back(rat_pow(t, x.L));
    std::vector<long long> hist(thresh.size(), 0);
    long long signs = 1LL << s.n;
    pn_tuples(s, variant, thresh.back(),
              [&](const std::vector<long>&, const Rat& hL) {
                  int k = bucket_of(threshL, [&](const Rat& t) { return hL <= t; });
                  if (k >= 0) hist[k] += signs;
              });
    cumulate(hist);
    return hist;
}

// ---- P1 x P1 product counting ----------------------------------------------

struct FactorHist {
    // max-coordinate value -> number of torus points of that height (with signs)
    std::vector<std::pair<long, long long>> by_max;
    long exp;  // H^L = max^exp
};

FactorHist p1_factor_hist(long m, Variant variant, long L, const Rat& tmax) {
    FactorHist fh;
    fh.exp = 2 * L / m;
    // factor height H = max^{2/m} <= tmax (other factor contributes >= 1)
    long cap = to_long(root_floor(floor_rat(rat_pow(tmax, L)),
                                  static_cast<unsigned long>(fh.exp)));
    if (cap < 1) return fh;
    if (m == 1) {
        auto phi = phi_sieve(cap);
        for (long h = 1; h <= cap; ++h) {
            long long c = (h == 1) ? 1 : 2LL * phi[h];
            fh.by_max.emplace_back(h, 2 * c);
        }
        return fh;
    }
    Variant v = (variant == Variant::WeakCampana) ? Variant::Campana : variant;
    auto listopt = coordinate_list(cap, m, v);
    if (!listopt) throw std::runtime_error("variant unsupported on this path");
    const auto& list = *listopt;
    std::map<long, long long> hist;
    for (size_t i = 0; i < list.size(); ++i)
        for (size_t j = 0; j < list.size(); ++j) {
            if (std::gcd(list[i], list[j]) != 1) continue;
            hist[std::max(list[i], list[j])] += 2;
        }
    fh.by_max.assign(hist.begin(), hist.end());
    return fh;
}

std::vector<long long> p1xp1_counts(const ProductShape& s, Variant variant,
                                    const std::vector<Rat>& thresh) {
    long L = std::lcm(s.m1, s.m2);
    FactorHist f1 = p1_factor_hist(s.m1, variant, L, thresh.back());
    FactorHist f2 = p1_factor_hist(s.m2, variant, L, thresh.back());
    std::vector<long long> prefix2(f2.by_max.size() + 1, 0);
    std::vector<Rat> pow2;
    pow2.reserve(f2.by_max.size());
    for (size_t i = 0; i < f2.by_max.size(); ++i) {
        prefix2[i + 1] = prefix2[i] + f2.by_max[i].second;
        pow2.push_back(Rat(int_pow(Int(f2.by_max[i].first),
                                   static_cast<unsigned long>(f2.exp))));
    }
    std::vector<long long> counts(thresh.size(), 0);
    for (size_t k = 0; k < thresh.size(); ++k) {
        Rat tl = rat_pow(thresh[k], L);
        long long total = 0;
        for (const auto& [h1, c1] : f1.by_max) {
            Rat rem = tl / Rat(int_pow(Int(h1), static_cast<unsigned long>(f1.exp)));
            if (rem < 1) break;  // by_max ascending, heights only grow
            size_t lo = std::upper_bound(pow2.begin(), pow2.end(), rem) - pow2.begin();
            total += c1 * prefix2[lo];
        }
        counts[k] = total;
    }
    return counts;
}

// ---- generic fallback ------------------------------------------------------

struct FallbackCtx {
    const Fan& fan;
    const OrbifoldWeights& w;
    Variant variant;
    PLFunction phi;
    long L;
    std::vector<Rat> threshL;
    Rat blmax;
    std::vector<long> primes;
    Rat minphi;  // minimal positive height exponent of a valid local profile
    long long nodes = 0;
    long long budget = 0;
    std::vector<long long>* hist = nullptr;
    std::vector<TorusPoint>* points = nullptr;
    long long signs = 1;
};

// enumerate valid (phi, degree vector) local contributions at one prime
void local_contribs(FallbackCtx& cx, const Rat& rem_pow, long p,
                    std::vector<std::pair<Rat, Vec>>& out) {
    const Fan& f = cx.fan;
    Rat logcap = 0;  // cap on phi: p^{L*phi} <= rem_pow
    for (const auto& cone : f.cones()) {
        if (cone.empty()) continue;
        std::vector<long> lambda(cone.size(), 0);
        std::function<void(size_t, Rat)> rec = [&](size_t idx, Rat part) {
            if (idx == cone.size()) {
                LocalProfile prof;
                prof.cone = cone;
                prof.lambda = std::vector<long>(lambda.begin(), lambda.end());
                if (!classify_profile(f, cx.w, prof, cx.variant).ok) return;
                Vec v(f.dim, 0);
                for (size_t j = 0; j < cone.size(); ++j)
                    for (int k = 0; k < f.dim; ++k)
                        v[k] += lambda[j] * f.rays[cone[j]][k];
                out.emplace_back(part, std::move(v));
                return;
            }
            int ray = cone[idx];
            const Weight& wt = cx.w.w[f.orbit_of_ray[ray]];
            Rat step = wt.infinite ? Rat(0) : make_rat(1, wt.m);
            for (long lam = 1;; ++lam) {
                Rat phi = wt.infinite ? part : part + step * lam;
                // exact cap: p^{L*phi} <= rem_pow (phi has denominator | L)
                Rat scaled = phi * cx.L;
                Int e = scaled.get_num();  // scaled is integral by construction
                if (Rat(int_pow(Int(p), static_cast<unsigned long>(e.get_ui()))) >
                    rem_pow)
                    break;
                lambda[idx] = lam;
                rec(idx + 1, phi);
                if (wt.infinite) break;  // profile invalid anyway; pruned above
            }
            lambda[idx] = 0;
        };
        rec(0, Rat(0));
    }
    (void)logcap;
}

void fallback_rec(FallbackCtx& cx, size_t prime_start, const Rat& finite_pow,
                  QVec coords) {
    if (++cx.nodes > cx.budget)
        throw BudgetExceeded("fallback search exceeded its node budget");
    // the current profile is itself a candidate point
    TorusPoint t{coords};
    Rat hL = global_height_power(cx.fan, cx.phi, t, cx.L);
    int k = bucket_of(cx.threshL, [&](const Rat& b) { return hL <= b; });
    if (k >= 0) {
        if (cx.hist) (*cx.hist)[k] += cx.signs;
        if (cx.points) {
            int d = cx.fan.dim;
            for (long long mask = 0; mask < cx.signs; ++mask) {
                TorusPoint s = t;
                for (int j = 0; j < d; ++j)
                    if (mask & (1LL << j)) s.coords[j] = -s.coords[j];
                cx.points->push_back(std::move(s));
            }
        }
    }
    // extend by a larger prime
    for (size_t pi = prime_start; pi < cx.primes.size(); ++pi) {
        long p = cx.primes[pi];
        Rat rem = cx.blmax / finite_pow;
        // cheapest possible extension at p costs p^{L*minphi}
        Rat scaled = cx.minphi * cx.L;
        if (Rat(int_pow(Int(p), static_cast<unsigned long>(scaled.get_num().get_ui()))) >
            rem)
            break;
        std::vector<std::pair<Rat, Vec>> contribs;
        local_contribs(cx, rem, p, contribs);
        for (const auto& [phi, v] : contribs) {
            Rat fpow = finite_pow;
            Rat sc = phi * cx.L;
            fpow *= Rat(int_pow(Int(p), static_cast<unsigned long>(sc.get_num().get_ui())));
            QVec c2 = coords;
            for (int j = 0; j < cx.fan.dim; ++j) {
                long e = v[j].get_si();
                if (e > 0)
                    c2[j] *= Rat(int_pow(Int(p), static_cast<unsigned long>(e)));
                else if (e < 0)
                    c2[j] /= Rat(int_pow(Int(p), static_cast<unsigned long>(-e)));
            }
            fallback_rec(cx, pi + 1, fpow, std::move(c2));
        }
    }
}

void run_fallback(const Fan& f, const OrbifoldWeights& w, Variant variant,
                  const std::vector<Rat>& thresh, const EnumOptions& opt,
                  std::vector<long long>* hist, std::vector<TorusPoint>* points) {
    FallbackCtx cx{f, w, variant};
    cx.phi = log_anticanonical(f, w);
    cx.L = w.lcm_finite();
    for (const auto& t : thresh) cx.threshL.push_back(rat_pow(t, cx.L));
    cx.blmax = cx.threshL.back();
    cx.budget = opt.fallback_budget;
    cx.hist = hist;
    cx.points = points;
    cx.signs = 1LL << f.dim;
    // minimal positive exponent of a valid one-prime profile
    cx.minphi = 1;
    if (variant == Variant::Plain) {
        for (const auto& wt : w.w)
            if (!wt.infinite) cx.minphi = std::min(cx.minphi, make_rat(1, wt.m));
    }
    // primes that can appear: p^{L*minphi} <= B^L
    double pmax = 2;
    {
        Rat sc = cx.minphi * cx.L;
        double e = 1.0 / sc.get_d() / cx.L * 0;  // computed exactly below
        (void)e;
        // walk a sieve until the exact test fails
        long bound = 2;
        while (true) {
            Rat lhs(int_pow(Int(bound), static_cast<unsigned long>(sc.get_num().get_ui())));
            if (lhs > cx.blmax) break;
            bound = bound < 1'000'000 ? bound * 2 : bound + bound / 2;
            if (bound > 100'000'000) break;
        }
        pmax = static_cast<double>(bound);
    }
    for (long p : primes_below(static_cast<long>(pmax) + 1)) {
        Rat sc = cx.minphi * cx.L;
        Rat lhs(int_pow(Int(p), static_cast<unsigned long>(sc.get_num().get_ui())));
        if (lhs <= cx.blmax) cx.primes.push_back(p);
    }
    if (thresh.back() < 1) return;  // below the minimal height; nothing to do
    fallback_rec(cx, 0, Rat(1), QVec(f.dim, Rat(1)));
}

}  // namespace

bool fast_path_available(const Fan& f, const OrbifoldWeights& w, Variant variant) {
    if (auto pn = match_pn(f, w)) {
        bool all_one = true, all_big = true, any_inf = false;
        for (long mu : pn->mu) {
            if (mu == 0) any_inf = true;
            if (mu != 1) all_one = false;
            if (mu < 2) all_big = false;
        }
        if (any_inf) return false;
        if (pn->n == 1) return variant != Variant::Plain || all_one;
        if (all_one) return pn->n == 2;  // classification is vacuous there
        if (all_big)
            return variant != Variant::Plain && variant != Variant::WeakCampana;
        return false;
    }
    if (auto pr = match_p1xp1(f, w)) {
        auto ok = [&](long m) {
            if (m == 1) return true;
            return variant != Variant::Plain;
        };
        if (variant == Variant::WeakCampana) return false;
        return ok(pr->m1) && ok(pr->m2);
    }
    return false;
}

CountRun count_points(const Fan& f, const OrbifoldWeights& w, Variant variant,
                      const Rat& bound, const EnumOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    CountRun run;
    run.fan_name = f.name;
    run.weights = w.str();
    run.variant = variant_name(variant);
    run.bound = bound;
    run.checkpoints = checkpoint_grid(bound);
    if (run.checkpoints.empty()) throw std::runtime_error("empty checkpoint grid");
    bool fast = !opt.force_fallback && fast_path_available(f, w, variant);
    if (fast) {
        auto pn = match_pn(f, w);
        if (pn && pn->n == 1 && pn->mu[0] == pn->mu[1]) {
            Variant v = pn->mu[0] == 1 ? Variant::Plain : variant;
            run.counts = p1_equal_counts(pn->mu[0], v, run.checkpoints, opt.workers);
        } else if (pn) {
            bool all_one = true;
            for (long mu : pn->mu)
                if (mu != 1) all_one = false;
            if (pn->n == 2 && all_one)
                run.counts = p2_plain_counts(run.checkpoints);
            else
                run.counts = pn_counts(*pn, variant, run.checkpoints);
        } else {
            auto pr = match_p1xp1(f, w);
            run.counts = p1xp1_counts(*pr, variant, run.checkpoints);
        }
    } else {
        run.used_fallback = true;
        run.note = "generic profile search (no specialized enumerator)";
        std::vector<long long> hist(run.checkpoints.size(), 0);
        run_fallback(f, w, variant, run.checkpoints, opt, &hist, nullptr);
        cumulate(hist);
        run.counts = std::move(hist);
    }
    auto t1 = std::chrono::steady_clock::now();
    run.elapsed_ms =
        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() / 1e3;
    return run;
}

std::vector<TorusPoint> enumerate_points(const Fan& f, const OrbifoldWeights& w,
                                         Variant variant, const Rat& bound,
                                         const EnumOptions& opt) {
    std::vector<TorusPoint> pts;
    bool fast = !opt.force_fallback && fast_path_available(f, w, variant);
    auto pn = fast ? match_pn(f, w) : std::nullopt;
    if (pn) {
        // tuple path works for every supported P^n configuration at small B
        PnExact x = pn_exact(*pn);
        Rat bl = rat_pow(bound, x.L);
        Variant v = variant;
        bool all_one = true;
        for (long mu : pn->mu)
            if (mu != 1) all_one = false;
        if (all_one) v = Variant::Plain;
        if (pn->n == 1 && variant == Variant::WeakCampana) v = Variant::Campana;
        pn_tuples(*pn, v, bound, [&](const std::vector<long>& c, const Rat& hL) {
            if (hL > bl) return;
            int n = pn->n;
            for (long long mask = 0; mask < (1LL << n); ++mask) {
                TorusPoint t;
                for (int j = 1; j <= n; ++j) {
                    Rat q = make_rat(c[j], c[0]);
                    if (mask & (1LL << (j - 1))) q = -q;
                    t.coords.push_back(q);
                }
                pts.push_back(std::move(t));
            }
        });
    } else if (fast) {
        // product fan: combine the two factor point sets under the joint bound
        Fan fac = p1();
        auto pr = match_p1xp1(f, w);
        long L = std::lcm(pr->m1, pr->m2);
        auto factor_pts = [&](long m, int which) {
            OrbifoldWeights fw;
            fw.w = {Weight{m, false}, Weight{m, false}};
            PLFunction phi = log_anticanonical(fac, fw);
            EnumOptions o2 = opt;
            o2.force_fallback = false;
            std::vector<TorusPoint> fp = enumerate_points(fac, fw, variant, bound, o2);
            std::vector<std::pair<Rat, TorusPoint>> out;
            for (auto& t : fp) {
                out.emplace_back(global_height_power(fac, phi, t, L), t);
            }
            (void)which;
            return out;
        };
        auto f1 = factor_pts(pr->m1, 0), f2 = factor_pts(pr->m2, 1);
        Rat bl = rat_pow(bound, L);
        for (const auto& [h1, t1] : f1)
            for (const auto& [h2, t2] : f2) {
                if (h1 * h2 > bl) continue;
                TorusPoint t;
                t.coords = {t1.coords[0], t2.coords[0]};
                pts.push_back(std::move(t));
            }
    } else {
        std::vector<Rat> thresh{bound};
        run_fallback(f, w, variant, thresh, opt, nullptr, &pts);
    }
    // canonical order: exact height power, then lexicographic coordinates
    PLFunction phi = log_anticanonical(f, w);
    long L = w.lcm_finite();
    std::vector<std::pair<Rat, TorusPoint>> keyed;
    keyed.reserve(pts.size());
    for (auto& t : pts)
        keyed.emplace_back(global_height_power(f, phi, t, L), std::move(t));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second.coords < b.second.coords;
    });
    pts.clear();
    for (auto& [h, t] : keyed) pts.push_back(std::move(t));
    return pts;
}

}  // namespace toric

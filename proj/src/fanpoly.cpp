#include "toric/fanpoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toric {

InvariantConeSet split_cone_set(const Fan& f, const OrbifoldWeights& w) {
    InvariantConeSet cs;
    std::vector<int> block_of_ray(f.nrays(), -1);
    for (int i = 0; i < f.nrays(); ++i) {
        const Weight& wt = w.w[f.orbit_of_ray[i]];
        if (wt.infinite) continue;
        block_of_ray[i] = cs.nblocks();
        cs.blocks.push_back(BlockIndex{f.orbit_of_ray[i], 0, 1});
        cs.m.push_back(wt.m);
    }
    std::set<std::vector<int>> seen;
    for (const auto& cone : f.cones()) {
        std::vector<int> bl;
        bool drop = false;
        for (int i : cone) {
            if (block_of_ray[i] < 0) {
                drop = true;  // infinite-weight ray: cone carries no points
                break;
            }
            bl.push_back(block_of_ray[i]);
        }
        if (drop) continue;
        std::sort(bl.begin(), bl.end());
        if (seen.insert(bl).second) cs.cones.push_back(std::move(bl));
    }
    return cs;
}

SparseMultiPoly SparseMultiPoly::constant(int nvars, const Rat& c) {
    SparseMultiPoly p;
    p.nvars = nvars;
    if (c != 0) p.terms[Expo(nvars, 0)] = c;
    return p;
}

SparseMultiPoly SparseMultiPoly::monomial(int nvars, const Expo& e, const Rat& c) {
    SparseMultiPoly p;
    p.nvars = nvars;
    if (c != 0) p.terms[e] = c;
    return p;
}

SparseMultiPoly SparseMultiPoly::operator+(const SparseMultiPoly& o) const {
    SparseMultiPoly r = *this;
    for (const auto& [e, c] : o.terms) {
        Rat& dst = r.terms[e];
        dst += c;
        if (dst == 0) r.terms.erase(e);
    }
    return r;
}

SparseMultiPoly SparseMultiPoly::operator-(const SparseMultiPoly& o) const {
    SparseMultiPoly r = *this;
    for (const auto& [e, c] : o.terms) {
        Rat& dst = r.terms[e];
        dst -= c;
        if (dst == 0) r.terms.erase(e);
    }
    return r;
}

SparseMultiPoly SparseMultiPoly::operator*(const SparseMultiPoly& o) const {
    SparseMultiPoly r;
    r.nvars = nvars;
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) {
            Expo e(nvars);
            for (int k = 0; k < nvars; ++k) e[k] = e1[k] + e2[k];
            Rat& dst = r.terms[e];
            dst += c1 * c2;
            if (dst == 0) r.terms.erase(e);
        }
    return r;
}

bool SparseMultiPoly::operator==(const SparseMultiPoly& o) const {
    return terms == o.terms;
}

Rat SparseMultiPoly::constant_term() const {
    auto it = terms.find(Expo(nvars, 0));
    return it == terms.end() ? Rat(0) : it->second;
}

Rat SparseMultiPoly::eval(const QVec& x) const {
    Rat total = 0;
    for (const auto& [e, c] : terms) {
        Rat t = c;
        for (int k = 0; k < nvars; ++k)
            for (long j = 0; j < e[k]; ++j) t *= x[k];
        total += t;
    }
    return total;
}

Real SparseMultiPoly::eval(const std::vector<Real>& x, mpfr_prec_t prec) const {
    Real total(prec);
    for (const auto& [e, c] : terms) {
        Real t(c, prec);
        for (int k = 0; k < nvars; ++k)
            if (e[k] > 0) t *= pow(x[k], Real(static_cast<double>(e[k]), prec));
        total += t;
    }
    return total;
}

std::string SparseMultiPoly::str(const std::vector<BlockIndex>& blocks) const {
    // graded by total degree, then lex on exponent vectors
    std::vector<std::pair<Expo, Rat>> ordered(terms.begin(), terms.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) {
                  long da = 0, db = 0;
                  for (long e : a.first) da += e;
                  for (long e : b.first) db += e;
                  if (da != db) return da < db;
                  return a.first < b.first;
              });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        if (!first) out << " + ";
        first = false;
        out << c.get_str();
        for (int k = 0; k < nvars; ++k) {
            if (e[k] == 0) continue;
            out << " * u[" << blocks[k].orbit << "," << blocks[k].place << "]";
            if (e[k] != 1) out << "^" << e[k];
        }
    }
    if (first) out << "0";
    return out.str();
}

SparseMultiPoly divide_one_minus_power(const SparseMultiPoly& p, int var, long k,
                                       bool& exact) {
    // synthetic division by (1 - u^k) in the chosen variable: process terms
    // by descending exponent, propagating q*u^k back into the remainder pool
    SparseMultiPoly q;
    q.nvars = p.nvars;
    std::map<SparseMultiPoly::Expo, Rat, std::greater<SparseMultiPoly::Expo>> pool;
    for (const auto& [e, c] : p.terms) {
        // order by exponent in `var` first so reduction terminates
        SparseMultiPoly::Expo key = e;
        std::swap(key[0], key[var]);
        pool[key] = c;
    }
    while (!pool.empty()) {
        auto it = pool.begin();
        SparseMultiPoly::Expo key = it->first;
        Rat c = it->second;
        pool.erase(it);
        if (c == 0) continue;
        if (key[0] >= k) {
            // c*u^a = -c*u^{a-k}*(1-u^k) + c*u^{a-k}; quotient gains -c*u^{a-k}
            SparseMultiPoly::Expo low = key;
            low[0] -= k;
            Rat& pc = pool[low];
            pc += c;
            if (pc == 0) pool.erase(low);
            SparseMultiPoly::Expo qe = low;
            std::swap(qe[0], qe[var]);
            Rat& qc = q.terms[qe];
            qc -= c;
            if (qc == 0) q.terms.erase(qe);
        } else {
            // remainder territory: exponent < k in the division variable
            SparseMultiPoly::Expo qe = key;
            std::swap(qe[0], qe[var]);
            Rat& qc = q.terms[qe];
            qc += c;  // temporarily park; removed below if inexact
            if (qc == 0) q.terms.erase(qe);
            exact = false;
            return q;
        }
    }
    exact = true;
    return q;
}

PolyVariant poly_variant(Variant v) {
    switch (v) {
        case Variant::Plain: return PolyVariant::Plain;
        case Variant::Campana:
        case Variant::StrongCampana:
        case Variant::GeomCampana:
        case Variant::WeakCampana: return PolyVariant::Campana;
        case Variant::Darmon:
        case Variant::StrongDarmon:
        case Variant::GeomDarmon: return PolyVariant::Darmon;
    }
    return PolyVariant::Plain;
}

RFactorShape r_factor_shape(long m, long f, PolyVariant variant) {
    switch (variant) {
        case PolyVariant::Plain: return {f, f};
        case PolyVariant::Campana: return {m * f, f};
        case PolyVariant::Darmon: return {m * f, m * f};
    }
    return {f, f};
}

SparseMultiPoly q_polynomial(const InvariantConeSet& cs, PolyVariant variant) {
    int n = cs.nblocks();
    std::vector<RFactorShape> shape(n);
    for (int b = 0; b < n; ++b) {
        long f = cs.blocks[b].f;
        long m = (variant == PolyVariant::Plain) ? 1 : cs.m[b];
        shape[b] = r_factor_shape(m, f, variant);
    }
    // numerator of sum_cones R over the common denominator prod (1-u^{den}):
    // each cone contributes prod_in u^{num} * prod_out (1-u^{den})
    SparseMultiPoly numer = SparseMultiPoly::constant(n, Rat(0));
    for (const auto& cone : cs.cones) {
        std::vector<bool> in(n, false);
        for (int b : cone) in[b] = true;
        SparseMultiPoly::Expo mono(n, 0);
        for (int b : cone) mono[b] = shape[b].num_exp;
        SparseMultiPoly term = SparseMultiPoly::monomial(n, mono, Rat(1));
        for (int b = 0; b < n; ++b) {
            if (in[b]) continue;
            SparseMultiPoly::Expo e(n, 0);
            e[b] = shape[b].den_exp;
            term = term * (SparseMultiPoly::constant(n, Rat(1)) -
                           SparseMultiPoly::monomial(n, e, Rat(1)));
        }
        numer = numer + term;
    }
    // Q = numer * prod (1-u^{m f}) / prod (1-u^{den}); multiply out the target
    // factors and peel the common denominator off by exact division
    SparseMultiPoly q = numer;
    for (int b = 0; b < n; ++b) {
        long mf = ((variant == PolyVariant::Plain) ? 1 : cs.m[b]) * cs.blocks[b].f;
        SparseMultiPoly::Expo e(n, 0);
        e[b] = mf;
        q = q * (SparseMultiPoly::constant(n, Rat(1)) -
                 SparseMultiPoly::monomial(n, e, Rat(1)));
    }
    for (int b = 0; b < n; ++b) {
        bool exact = false;
        q = divide_one_minus_power(q, b, shape[b].den_exp, exact);
        if (!exact)
            throw std::runtime_error("fan-function division left a remainder");
    }
    if (q.constant_term() != 1)
        throw std::runtime_error("fan-function polynomial has constant term != 1");
    return q;
}

DegreeBoundReport verify_degree_bounds(const SparseMultiPoly& q,
                                       const InvariantConeSet& cs,
                                       PolyVariant variant) {
    DegreeBoundReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.issues.push_back(std::move(msg));
    };
    int n = cs.nblocks();
    SparseMultiPoly rest = q - SparseMultiPoly::constant(n, Rat(1));
    // (m+1)/m decreases in m, so min_i (m_i+1)/m_i is attained at the largest m
    long max_m = 0;
    for (int b = 0; b < n; ++b) max_m = std::max(max_m, cs.m[b]);
    Rat theta_floor = (max_m == 0) ? Rat(0) : make_rat(max_m + 1, max_m);
    std::vector<long> maxdeg(n, 0);
    for (const auto& [e, c] : rest.terms) {
        std::ostringstream mono;
        for (int k = 0; k < n; ++k)
            if (e[k]) mono << " u" << k << "^" << e[k];
        // convergence exponent of the Euler-factor term this monomial yields
        Rat theta = 0;
        for (int k = 0; k < n; ++k) theta += make_rat(e[k], cs.m[k]);
        if (variant != PolyVariant::Plain && theta < theta_floor)
            fail("monomial" + mono.str() + " has convergence exponent " +
                 theta.get_str() + " < " + theta_floor.get_str());
        for (int k = 0; k < n; ++k) maxdeg[k] = std::max(maxdeg[k], e[k]);
        if (variant == PolyVariant::Campana) {
            // single-block monomial with f = 1: degree at least m+1
            int support = 0, blk = -1;
            for (int k = 0; k < n; ++k)
                if (e[k]) {
                    ++support;
                    blk = k;
                }
            if (support == 1 && cs.blocks[blk].f == 1 && cs.m[blk] >= 2 &&
                e[blk] < cs.m[blk] + 1)
                fail("single-block monomial" + mono.str() + " has degree " +
                     std::to_string(e[blk]) + " < m+1");
        }
        if (variant == PolyVariant::Darmon) {
            long vdeg = 0;
            for (int k = 0; k < n; ++k) {
                long unit = cs.m[k] * cs.blocks[k].f;
                if (e[k] % unit != 0) {
                    fail("monomial" + mono.str() +
                         " is not a polynomial in u^{m f}");
                    break;
                }
                vdeg += e[k] / unit;
            }
            if (vdeg > 0 && vdeg < 2)
                fail("monomial" + mono.str() + " has v-degree " +
                     std::to_string(vdeg) + " < 2");
        }
    }
    if (variant == PolyVariant::Campana) {
        // a weight-one block imposes no condition, so it behaves plainly and
        // only the joint convergence bound constrains its degree
        for (int k = 0; k < n; ++k)
            if (maxdeg[k] > 0 && cs.m[k] >= 2 && maxdeg[k] < cs.m[k] + 1)
                fail("block " + std::to_string(k) + " max degree " +
                     std::to_string(maxdeg[k]) + " < m+1");
    }
    if (variant == PolyVariant::Plain || variant == PolyVariant::Darmon) {
        // total degree in v-units at least 2 holds per monomial above; for the
        // plain case check total u-degree >= 2 directly
        if (variant == PolyVariant::Plain)
            for (const auto& [e, c] : rest.terms) {
                long d = 0;
                for (int k = 0; k < n; ++k) d += e[k];
                if (d < 2) fail("plain monomial with total degree < 2");
            }
    }
    return rep;
}

}  // namespace toric

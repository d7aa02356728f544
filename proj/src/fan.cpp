#include "toric/fan.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toric {

OrbifoldWeights OrbifoldWeights::ones(int norbits) {
    OrbifoldWeights o;
    o.w.assign(norbits, Weight{1, false});
    return o;
}

OrbifoldWeights OrbifoldWeights::parse(const std::string& s, int norbits) {
    OrbifoldWeights o;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        // trim
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::runtime_error("empty weight entry");
        tok = tok.substr(a, b - a + 1);
        if (tok == "inf") {
            o.w.push_back(Weight{0, true});
        } else {
            size_t pos = 0;
            long m = std::stol(tok, &pos);
            if (pos != tok.size() || m < 1)
                throw std::runtime_error("bad weight '" + tok + "'");
            o.w.push_back(Weight{m, false});
        }
    }
    if (static_cast<int>(o.w.size()) != norbits)
        throw std::runtime_error("expected " + std::to_string(norbits) +
                                 " weights, got " + std::to_string(o.w.size()));
    return o;
}

std::string OrbifoldWeights::str() const {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += w[i].infinite ? "inf" : std::to_string(w[i].m);
    }
    return s;
}

long OrbifoldWeights::lcm_finite() const {
    long l = 1;
    for (const auto& e : w)
        if (!e.infinite) l = std::lcm(l, e.m);
    return l;
}

bool OrbifoldWeights::all_finite() const {
    for (const auto& e : w)
        if (e.infinite) return false;
    return true;
}

const std::vector<std::vector<int>>& Fan::cones() const {
    if (cones_.empty()) {
        std::set<std::vector<int>> all;
        all.insert(std::vector<int>{});
        for (const auto& mc : max_cones) {
            int k = static_cast<int>(mc.size());
            for (int mask = 1; mask < (1 << k); ++mask) {
                std::vector<int> face;
                for (int j = 0; j < k; ++j)
                    if (mask & (1 << j)) face.push_back(mc[j]);
                all.insert(std::move(face));
            }
        }
        cones_.assign(all.begin(), all.end());
        std::sort(cones_.begin(), cones_.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      if (a.size() != b.size()) return a.size() < b.size();
                      return a < b;
                  });
    }
    return cones_;
}

const QMat& Fan::cone_dual(int mci) const {
    if (duals_.empty()) duals_.resize(max_cones.size());
    QMat& d = duals_[mci];
    if (d.empty()) {
        const auto& mc = max_cones[mci];
        if (static_cast<int>(mc.size()) != dim)
            throw std::runtime_error("maximal cone is not full-dimensional");
        QMat g(dim, QVec(dim));
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) g[r][c] = Rat(rays[mc[c]][r]);
        auto inv = inverse(std::move(g));
        if (!inv) throw std::runtime_error("degenerate maximal cone");
        d = std::move(*inv);
    }
    return d;
}

namespace {

bool is_primitive(const Vec& v) {
    Int g = 0;
    bool nonzero = false;
    for (const auto& e : v) {
        if (e != 0) nonzero = true;
        g = gcd(g, e);
    }
    return nonzero && g == 1;
}

// H-representation of a simplicial cone: equalities cutting out its span and
// in-span dual inequalities
void cone_hrep(const Fan& f, const std::vector<int>& cone,
               std::vector<QVec>& eqs, std::vector<QVec>& ineqs) {
    int d = f.dim;
    int k = static_cast<int>(cone.size());
    ZMat gt;  // generators as rows
    for (int i : cone) gt.push_back(f.rays[i]);
    // span(G)^perp: y with <g_i, y> = 0 for every generator row
    eqs = nullspace(qmat_from(gt));
    // dual vectors w_j = G y with G^T G y = e_j
    QMat gram(k, QVec(k, Rat(0)));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int r = 0; r < d; ++r)
                gram[a][b] += Rat(f.rays[cone[a]][r]) * Rat(f.rays[cone[b]][r]);
    for (int j = 0; j < k; ++j) {
        QVec e(k, Rat(0));
        e[j] = 1;
        auto y = solve(gram, e);
        if (!y) throw std::runtime_error("dependent cone generators");
        QVec w(d, Rat(0));
        for (int a = 0; a < k; ++a)
            for (int r = 0; r < d; ++r) w[r] += (*y)[a] * Rat(f.rays[cone[a]][r]);
        ineqs.push_back(std::move(w));
    }
}

}  // namespace

ValidationReport validate_fan(const Fan& f) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.issues.push_back(std::move(msg));
    };
    if (f.dim < 1) fail("dimension must be positive");
    for (size_t i = 0; i < f.rays.size(); ++i) {
        if (static_cast<int>(f.rays[i].size()) != f.dim)
            fail("ray " + std::to_string(i) + " has wrong length");
        else if (!is_primitive(f.rays[i]))
            fail("ray " + std::to_string(i) + " is zero or not primitive");
    }
    for (size_t i = 0; i < f.rays.size(); ++i)
        for (size_t j = i + 1; j < f.rays.size(); ++j)
            if (f.rays[i] == f.rays[j])
                fail("duplicate rays " + std::to_string(i) + "," + std::to_string(j));
    if (f.max_cones.empty()) fail("no maximal cones");
    bool indep_ok = rep.ok;
    for (size_t c = 0; c < f.max_cones.size(); ++c) {
        const auto& mc = f.max_cones[c];
        for (int i : mc)
            if (i < 0 || i >= f.nrays()) {
                fail("cone " + std::to_string(c) + " references bad ray index");
                indep_ok = false;
            }
        if (!indep_ok) continue;
        ZMat g;
        for (int i : mc) g.push_back(f.rays[i]);
        if (rank(qmat_from(g)) != static_cast<int>(mc.size())) {
            fail("cone " + std::to_string(c) + " has dependent generators");
            indep_ok = false;
        }
    }
    // orbit labels: contiguous 0..num_orbits-1, each used
    if (static_cast<int>(f.orbit_of_ray.size()) != f.nrays()) {
        fail("orbit labels missing for some rays");
    } else {
        std::vector<int> used(std::max(f.num_orbits, 0), 0);
        for (int o : f.orbit_of_ray) {
            if (o < 0 || o >= f.num_orbits)
                fail("orbit label out of range");
            else
                used[o]++;
        }
        for (int o = 0; o < f.num_orbits; ++o)
            if (o < static_cast<int>(used.size()) && used[o] == 0)
                fail("orbit " + std::to_string(o) + " has no rays");
    }
    if (!indep_ok) return rep;
    // pairwise intersections must be spanned by the common rays (for
    // simplicial cones this makes the intersection a common face)
    for (size_t a = 0; a < f.max_cones.size(); ++a) {
        for (size_t b = a + 1; b < f.max_cones.size(); ++b) {
            std::vector<QVec> eqs, ineqs;
            cone_hrep(f, f.max_cones[a], eqs, ineqs);
            {
                std::vector<QVec> e2, i2;
                cone_hrep(f, f.max_cones[b], e2, i2);
                eqs.insert(eqs.end(), e2.begin(), e2.end());
                ineqs.insert(ineqs.end(), i2.begin(), i2.end());
            }
            std::vector<Vec> ext;
            try {
                ext = dual_description(eqs, ineqs, f.dim);
            } catch (const std::exception&) {
                fail("intersection of cones " + std::to_string(a) + "," +
                     std::to_string(b) + " is not pointed");
                continue;
            }
            std::set<int> common;
            for (int i : f.max_cones[a])
                if (std::count(f.max_cones[b].begin(), f.max_cones[b].end(), i))
                    common.insert(i);
            for (const auto& r : ext) {
                bool matches = false;
                for (int i : common)
                    if (f.rays[i] == r) matches = true;
                if (!matches)
                    fail("cones " + std::to_string(a) + "," + std::to_string(b) +
                         " do not meet in a common face");
            }
        }
    }
    return rep;
}

bool is_regular(const Fan& f) {
    for (const auto& mc : f.max_cones) {
        if (static_cast<int>(mc.size()) != f.dim) return false;
        ZMat g;
        for (int i : mc) g.push_back(f.rays[i]);
        auto d = smith_diagonal(std::move(g));
        for (const auto& e : d)
            if (e != 1) return false;
    }
    return true;
}

CompletenessResult is_complete(const Fan& f) {
    CompletenessResult res;
    // facet pairing: every facet of a maximal cone lies in exactly two
    std::map<std::vector<int>, int> facet_count;
    for (const auto& mc : f.max_cones) {
        for (size_t drop = 0; drop < mc.size(); ++drop) {
            std::vector<int> facet;
            for (size_t j = 0; j < mc.size(); ++j)
                if (j != drop) facet.push_back(mc[j]);
            facet_count[facet]++;
        }
    }
    for (const auto& [facet, cnt] : facet_count) {
        if (cnt == 2) continue;
        res.complete = false;
        std::string w = "facet {";
        for (size_t i = 0; i < facet.size(); ++i)
            w += (i ? "," : "") + std::to_string(facet[i]);
        w += "} lies in " + std::to_string(cnt) + " maximal cones";
        res.witness = w;
        return res;
    }
    // deterministic interior probes: each must lie strictly inside exactly
    // one maximal cone; boundary hits are redrawn
    std::mt19937 rng(987654321u);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 97);
    int done = 0, attempts = 0;
    while (done < 100 && attempts < 10000) {
        ++attempts;
        QVec x(f.dim);
        bool zero = true;
        for (int k = 0; k < f.dim; ++k) {
            x[k] = make_rat(num(rng), den(rng));
            if (x[k] != 0) zero = false;
        }
        if (zero) continue;
        int strict = 0;
        bool boundary = false;
        for (size_t c = 0; c < f.max_cones.size(); ++c) {
            const QMat& d = f.cone_dual(static_cast<int>(c));
            bool inside = true, has_zero = false;
            for (int r = 0; r < f.dim; ++r) {
                Rat s = 0;
                for (int k = 0; k < f.dim; ++k) s += d[r][k] * x[k];
                if (s < 0) {
                    inside = false;
                    break;
                }
                if (s == 0) has_zero = true;
            }
            if (!inside) continue;
            if (has_zero)
                boundary = true;
            else
                ++strict;
        }
        if (boundary) continue;
        if (strict != 1) {
            res.complete = false;
            std::string w = "direction (";
            for (int k = 0; k < f.dim; ++k) {
                if (k) w += ",";
                w += x[k].get_str();
            }
            w += ") lies in " + std::to_string(strict) + " maximal cones";
            res.witness = w;
            return res;
        }
        ++done;
    }
    return res;
}

Location locate(const Fan& f, const QVec& x) {
    if (static_cast<int>(x.size()) != f.dim)
        throw std::invalid_argument("vector has wrong dimension");
    for (size_t c = 0; c < f.max_cones.size(); ++c) {
        const QMat& d = f.cone_dual(static_cast<int>(c));
        QVec coeffs(f.dim);
        bool inside = true;
        for (int r = 0; r < f.dim; ++r) {
            Rat s = 0;
            for (int k = 0; k < f.dim; ++k) s += d[r][k] * x[k];
            if (s < 0) {
                inside = false;
                break;
            }
            coeffs[r] = s;
        }
        if (!inside) continue;
        Location loc;
        loc.max_cone = static_cast<int>(c);
        for (int r = 0; r < f.dim; ++r) {
            if (coeffs[r] == 0) continue;
            loc.cone.push_back(f.max_cones[c][r]);
            loc.coeffs.push_back(coeffs[r]);
        }
        // sort by ray index, keeping coefficients aligned
        std::vector<size_t> order(loc.cone.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return loc.cone[a] < loc.cone[b]; });
        std::vector<int> cs;
        QVec qs;
        for (size_t i : order) {
            cs.push_back(loc.cone[i]);
            qs.push_back(loc.coeffs[i]);
        }
        loc.cone = std::move(cs);
        loc.coeffs = std::move(qs);
        return loc;
    }
    throw std::runtime_error("vector lies in no cone (fan not complete?)");
}

Rat evaluate_pl(const Fan& f, const PLFunction& phi, const QVec& x) {
    Location loc = locate(f, x);
    Rat v = 0;
    for (size_t i = 0; i < loc.cone.size(); ++i)
        v += loc.coeffs[i] * phi.ray_values[loc.cone[i]];
    return v;
}

PLFunction log_anticanonical(const Fan& f, const OrbifoldWeights& w) {
    PLFunction phi;
    phi.ray_values.reserve(f.rays.size());
    for (int i = 0; i < f.nrays(); ++i) {
        const Weight& wi = w.w[f.orbit_of_ray[i]];
        phi.ray_values.push_back(wi.infinite ? Rat(0) : make_rat(1, wi.m));
    }
    return phi;
}

namespace {

void finish_split(Fan& f) {
    f.orbit_of_ray.resize(f.rays.size());
    std::iota(f.orbit_of_ray.begin(), f.orbit_of_ray.end(), 0);
    f.num_orbits = f.nrays();
    for (auto& mc : f.max_cones) std::sort(mc.begin(), mc.end());
}

}  // namespace

Fan projective_space(int n) {
    Fan f;
    f.dim = n;
    f.name = "P" + std::to_string(n);
    for (int i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        f.rays.push_back(std::move(e));
    }
    f.rays.push_back(Vec(n, -1));
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<int> mc;
        for (int i = 0; i <= n; ++i)
            if (i != skip) mc.push_back(i);
        f.max_cones.push_back(std::move(mc));
    }
    finish_split(f);
    return f;
}

Fan p1() { return projective_space(1); }
Fan p2() { return projective_space(2); }

Fan product(const Fan& a, const Fan& b) {
    Fan f;
    f.dim = a.dim + b.dim;
    f.name = a.name + "x" + b.name;
    for (const auto& r : a.rays) {
        Vec v = r;
        v.resize(f.dim, 0);
        f.rays.push_back(std::move(v));
    }
    for (const auto& r : b.rays) {
        Vec v(a.dim, 0);
        v.insert(v.end(), r.begin(), r.end());
        f.rays.push_back(std::move(v));
    }
    for (const auto& ca : a.max_cones)
        for (const auto& cb : b.max_cones) {
            std::vector<int> mc = ca;
            for (int i : cb) mc.push_back(i + a.nrays());
            f.max_cones.push_back(std::move(mc));
        }
    finish_split(f);
    return f;
}

Fan p1xp1() {
    Fan f = product(p1(), p1());
    f.name = "P1xP1";
    return f;
}

Fan hirzebruch1() {
    Fan f;
    f.dim = 2;
    f.name = "F1";
    f.rays = {{1, 0}, {0, 1}, {0, -1}, {-1, 1}};
    f.max_cones = {{0, 1}, {0, 2}, {2, 3}, {1, 3}};
    finish_split(f);
    return f;
}

Fan del_pezzo6() {
    Fan f;
    f.dim = 2;
    f.name = "dP6";
    f.rays = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
    for (int i = 0; i < 6; ++i) f.max_cones.push_back({i, (i + 1) % 6});
    finish_split(f);
    return f;
}

std::optional<Fan> library_fan(const std::string& name) {
    if (name == "P1") return p1();
    if (name == "P2") return p2();
    if (name == "P3") return projective_space(3);
    if (name == "P1xP1") return p1xp1();
    if (name == "F1") return hirzebruch1();
    if (name == "dP6") return del_pezzo6();
    if (name.size() > 1 && name[0] == 'P') {
        // PnxPm... handled only for the plain Pn family
        bool digits = true;
        for (size_t i = 1; i < name.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(name[i]))) digits = false;
        if (digits) return projective_space(std::stoi(name.substr(1)));
    }
    return std::nullopt;
}

}  // namespace toric

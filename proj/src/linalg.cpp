#include "toric/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace toric {

QMat qmat_from(const ZMat& m) {
    QMat q(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        q[i].reserve(m[i].size());
        for (const auto& e : m[i]) q[i].emplace_back(e);
    }
    return q;
}

// Gaussian elimination in place; returns pivot column per row used
static std::vector<int> row_reduce(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        Rat inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(QMat m) { return static_cast<int>(row_reduce(m).size()); }

std::optional<QMat> inverse(QMat m) {
    size_t n = m.size();
    if (n == 0 || m[0].size() != n) return std::nullopt;
    for (size_t i = 0; i < n; ++i) {
        m[i].resize(2 * n, Rat(0));
        m[i][n + i] = 1;
    }
    auto piv = row_reduce(m);
    if (piv.size() != n) return std::nullopt;
    QMat out(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
    return out;
}

std::optional<QVec> solve(QMat a, QVec b) {
    size_t rows = a.size();
    if (rows == 0) return std::nullopt;
    size_t cols = a[0].size();
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    auto piv = row_reduce(a);
    // inconsistency: pivot in the augmented column
    if (!piv.empty() && piv.back() == static_cast<int>(cols)) return std::nullopt;
    if (piv.size() != cols) return std::nullopt;  // underdetermined
    QVec x(cols, Rat(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = a[i][cols];
    return x;
}

std::vector<QVec> nullspace(QMat a) {
    if (a.empty()) return {};
    size_t cols = a[0].size();
    auto piv = row_reduce(a);
    std::set<int> pivset(piv.begin(), piv.end());
    std::vector<QVec> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (pivset.count(static_cast<int>(c))) continue;
        QVec v(cols, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

SmithResult smith(ZMat m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    SmithResult res;
    res.u.assign(rows, Vec(rows, 0));
    res.v.assign(cols, Vec(cols, 0));
    for (size_t i = 0; i < rows; ++i) res.u[i][i] = 1;
    for (size_t j = 0; j < cols; ++j) res.v[j][j] = 1;

    auto swap_rows = [&](size_t a, size_t b) {
        std::swap(m[a], m[b]);
        std::swap(res.u[a], res.u[b]);
    };
    auto swap_cols = [&](size_t a, size_t b) {
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
        for (size_t j = 0; j < cols; ++j) std::swap(res.v[j][a], res.v[j][b]);
    };
    auto addmul_row = [&](size_t dst, size_t src, const Int& f) {
        for (size_t j = 0; j < cols; ++j) m[dst][j] += f * m[src][j];
        for (size_t j = 0; j < rows; ++j) res.u[dst][j] += f * res.u[src][j];
    };
    auto addmul_col = [&](size_t dst, size_t src, const Int& f) {
        for (size_t i = 0; i < rows; ++i) m[i][dst] += f * m[i][src];
        for (size_t j = 0; j < cols; ++j) res.v[j][dst] += f * res.v[j][src];
    };
    auto neg_row = [&](size_t r) {
        for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
        for (size_t j = 0; j < rows; ++j) res.u[r][j] = -res.u[r][j];
    };

    size_t t = 0;
    while (t < rows && t < cols) {
        // find a nonzero pivot of minimal absolute value
        size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (!found || abs(m[i][j]) < best)) {
                    best = abs(m[i][j]);
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        if (m[t][t] < 0) neg_row(t);
        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
            if (m[i][t] == 0) continue;
            Int q = m[i][t] / m[t][t];
            addmul_row(i, t, -q);
            if (m[i][t] != 0) clean = false;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (m[t][j] == 0) continue;
            Int q = m[t][j] / m[t][t];
            addmul_col(j, t, -q);
            if (m[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // remainders left; repeat at same t
        ++t;
    }
    // enforce divisibility chain
    for (size_t i = 0; i + 1 < t; ++i) {
        for (size_t j = i + 1; j < t; ++j) {
            if (m[j][j] % m[i][i] == 0) continue;
            // fold entry (j,j) into position (i,i) and re-clear
            addmul_col(i, j, 1);
            size_t save = t;
            t = i;
            while (t < save) {
                size_t pi = t, pj = t;
                bool found = false;
                Int best = 0;
                for (size_t a = t; a < rows; ++a)
                    for (size_t b = t; b < cols; ++b)
                        if (m[a][b] != 0 && (!found || abs(m[a][b]) < best)) {
                            best = abs(m[a][b]);
                            pi = a;
                            pj = b;
                            found = true;
                        }
                if (!found) break;
                swap_rows(t, pi);
                swap_cols(t, pj);
                if (m[t][t] < 0) neg_row(t);
                bool clean = true;
                for (size_t a = t + 1; a < rows; ++a) {
                    if (m[a][t] == 0) continue;
                    Int q = m[a][t] / m[t][t];
                    addmul_row(a, t, -q);
                    if (m[a][t] != 0) clean = false;
                }
                for (size_t b = t + 1; b < cols; ++b) {
                    if (m[t][b] == 0) continue;
                    Int q = m[t][b] / m[t][t];
                    addmul_col(b, t, -q);
                    if (m[t][b] != 0) clean = false;
                }
                if (clean) ++t;
            }
            i = static_cast<size_t>(-1);  // restart divisibility pass
            break;
        }
    }
    res.diag.resize(std::min(rows, cols), Int(0));
    for (size_t i = 0; i < res.diag.size(); ++i) res.diag[i] = m[i][i];
    return res;
}

std::vector<Int> smith_diagonal(ZMat m) { return smith(std::move(m)).diag; }

Vec primitive(const QVec& q) {
    Int l = 1;
    for (const auto& e : q) l = lcm(l, e.get_den());
    Vec v;
    v.reserve(q.size());
    Int g = 0;
    for (const auto& e : q) {
        Int n = e.get_num() * (l / e.get_den());
        g = gcd(g, n);
        v.push_back(std::move(n));
    }
    if (g > 1)
        for (auto& e : v) e /= g;
    return v;
}

namespace {

Rat dot(const QVec& a, const Vec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

}  // namespace

std::vector<Vec> dual_description(const std::vector<QVec>& equalities,
                                  const std::vector<QVec>& inequalities,
                                  int dim) {
    // Incremental double description carrying an explicit lineality basis so
    // intermediate non-pointed cones are handled correctly. The cone is
    // span(lineality) + cone(rays) throughout.
    QMat eqm = equalities;
    if (eqm.empty()) eqm.push_back(QVec(dim, Rat(0)));
    std::vector<QVec> lineality = nullspace(eqm);
    std::vector<Vec> rays;
    std::vector<QVec> active;  // inequalities already inserted
    auto qdot = [](const QVec& a, const QVec& b) {
        Rat s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };
    for (const auto& ineq : inequalities) {
        int split = -1;
        for (size_t i = 0; i < lineality.size(); ++i)
            if (qdot(ineq, lineality[i]) != 0) {
                split = static_cast<int>(i);
                break;
            }
        if (split >= 0) {
            // lineality meets the half-space boundary transversally: one
            // lineality vector becomes a ray, the rest are projected into
            // the hyperplane, and existing rays are shifted into it too
            QVec l0 = lineality[split];
            Rat s0 = qdot(ineq, l0);
            if (s0 < 0)
                for (auto& e : l0) e = -e;
            s0 = abs(s0);
            std::vector<QVec> newlin;
            for (size_t i = 0; i < lineality.size(); ++i) {
                if (static_cast<int>(i) == split) continue;
                Rat f = qdot(ineq, lineality[i]) / s0;
                QVec l = lineality[i];
                for (int k = 0; k < dim; ++k) l[k] -= f * l0[k];
                newlin.push_back(std::move(l));
            }
            std::vector<Vec> newrays{primitive(l0)};
            for (const auto& r : rays) {
                Rat f = dot(ineq, r) / s0;
                QVec q(dim);
                for (int k = 0; k < dim; ++k) q[k] = Rat(r[k]) - f * l0[k];
                bool nonzero = false;
                for (const auto& e : q)
                    if (e != 0) nonzero = true;
                if (nonzero) newrays.push_back(primitive(q));
            }
            lineality = std::move(newlin);
            rays = std::move(newrays);
            active.push_back(ineq);
            continue;
        }
        std::vector<Vec> plus, zero, minus;
        for (auto& r : rays) {
            Rat s = dot(ineq, r);
            if (s > 0)
                plus.push_back(std::move(r));
            else if (s == 0)
                zero.push_back(std::move(r));
            else
                minus.push_back(std::move(r));
        }
        std::vector<Vec> next = plus;
        for (const auto& z : zero) next.push_back(z);
        for (const auto& p : plus)
            for (const auto& n : minus) {
                Rat sp = dot(ineq, p), sn = dot(ineq, n);
                QVec comb(dim);
                for (int k = 0; k < dim; ++k)
                    comb[k] = sp * Rat(n[k]) - sn * Rat(p[k]);
                bool nonzero = false;
                for (const auto& e : comb)
                    if (e != 0) nonzero = true;
                if (nonzero) next.push_back(primitive(comb));
            }
        active.push_back(ineq);
        // dedupe; keep a ray only if its active constraints cut the equality
        // kernel down to lineality plus a single line
        std::set<Vec> seen;
        std::vector<Vec> filtered;
        for (const auto& r : next) {
            if (!seen.insert(r).second) continue;
            QMat at = eqm;
            for (const auto& c : active)
                if (dot(c, r) == 0) at.push_back(c);
            if (nullspace(std::move(at)).size() != lineality.size() + 1) continue;
            filtered.push_back(r);
        }
        rays = std::move(filtered);
    }
    if (!lineality.empty()) throw std::runtime_error("cone is not pointed");
    // final extremality pass (split steps can leave redundant generators)
    std::set<Vec> seen;
    std::vector<Vec> out;
    for (const auto& r : rays) {
        if (!seen.insert(r).second) continue;
        QMat at = eqm;
        for (const auto& c : active)
            if (dot(c, r) == 0) at.push_back(c);
        if (nullspace(std::move(at)).size() != 1) continue;
        out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// cone over boundary: pick the first generator, triangulate every facet not
// containing it, and cone each facet simplex with that generator
std::vector<std::vector<int>> triangulate_subset(const std::vector<Vec>& rays,
                                                 const std::vector<int>& subset) {
    size_t dim = rays.empty() ? 0 : rays[0].size();
    ZMat sub;
    for (int i : subset) sub.push_back(rays[i]);
    int r = rank(qmat_from(sub));
    if (static_cast<int>(subset.size()) == r) return {subset};
    // facet normals = extreme rays of the dual cone inside span(subset)
    std::vector<QVec> eqs;
    for (const auto& n : nullspace(qmat_from(sub))) eqs.push_back(n);
    std::vector<QVec> ineqs;
    for (const auto& v : sub) {
        QVec q;
        q.reserve(dim);
        for (const auto& e : v) q.emplace_back(e);
        ineqs.push_back(std::move(q));
    }
    auto normals = dual_description(eqs, ineqs, static_cast<int>(dim));
    int v0 = subset[0];
    std::vector<std::vector<int>> out;
    for (const auto& a : normals) {
        Rat s0 = 0;
        for (size_t k = 0; k < dim; ++k) s0 += Rat(a[k]) * Rat(rays[v0][k]);
        if (s0 == 0) continue;  // facet contains v0
        std::vector<int> facet;
        for (int i : subset) {
            Rat s = 0;
            for (size_t k = 0; k < dim; ++k) s += Rat(a[k]) * Rat(rays[i][k]);
            if (s == 0) facet.push_back(i);
        }
        for (auto simplex : triangulate_subset(rays, facet)) {
            simplex.push_back(v0);
            std::sort(simplex.begin(), simplex.end());
            out.push_back(std::move(simplex));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<std::vector<int>> triangulate_cone(const std::vector<Vec>& rays) {
    if (rays.empty()) return {};
    std::vector<int> all(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) all[i] = static_cast<int>(i);
    return triangulate_subset(rays, all);
}

}  // namespace toric

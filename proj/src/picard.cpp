#include "toric/picard.hpp"

#include <stdexcept>

namespace toric {

PicardData picard(const Fan& f) {
    int n = f.nrays(), d = f.dim;
    // divisor classes = cokernel of the map M -> Z^rays, m -> (<m, ray_i>)_i
    ZMat a(n, Vec(d, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < d; ++k) a[i][k] = f.rays[i][k];
    SmithResult s = smith(a);
    int nz = 0;
    for (const auto& e : s.diag) {
        if (e == 0) continue;
        if (e != 1) throw std::runtime_error("torsion divisor class group");
        ++nz;
    }
    if (nz != d) throw std::runtime_error("rays do not span the lattice");
    PicardData pic;
    pic.rank = n - d;
    // in the U-coordinates the image is spanned by the first d basis vectors,
    // so the class of divisor i is rows d..n-1 of column i of U
    pic.class_of_ray.assign(n, Vec(pic.rank, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < pic.rank; ++j)
            pic.class_of_ray[i][j] = s.u[d + j][i];
    // extreme rays of the cone spanned by the classes, via its dual
    std::vector<QVec> ineqs;
    for (const auto& c : pic.class_of_ray) {
        QVec q;
        q.reserve(pic.rank);
        for (const auto& e : c) q.emplace_back(e);
        ineqs.push_back(std::move(q));
    }
    auto dual = dual_description({}, ineqs, pic.rank);
    std::vector<QVec> dineqs;
    for (const auto& c : dual) {
        QVec q;
        q.reserve(pic.rank);
        for (const auto& e : c) q.emplace_back(e);
        dineqs.push_back(std::move(q));
    }
    pic.effective_cone_generators = dual_description({}, dineqs, pic.rank);
    return pic;
}

Rat effective_cone_constant(const PicardData& pic, const QVec& v) {
    int b = pic.rank;
    if (static_cast<int>(v.size()) != b)
        throw std::invalid_argument("class has wrong rank");
    // dual of the effective cone
    std::vector<QVec> ineqs;
    for (const auto& c : pic.effective_cone_generators) {
        QVec q;
        q.reserve(b);
        for (const auto& e : c) q.emplace_back(e);
        ineqs.push_back(std::move(q));
    }
    auto dual = dual_description({}, ineqs, b);
    for (const auto& g : dual) {
        Rat s = 0;
        for (int k = 0; k < b; ++k) s += v[k] * Rat(g[k]);
        if (s <= 0)
            throw std::runtime_error(
                "integral diverges: class not strictly positive on the dual cone");
    }
    Rat total = 0;
    for (const auto& simplex : triangulate_cone(dual)) {
        if (static_cast<int>(simplex.size()) != b)
            throw std::runtime_error("dual cone is not full-dimensional");
        QMat g(b, QVec(b));
        for (int r = 0; r < b; ++r)
            for (int c = 0; c < b; ++c) g[r][c] = Rat(dual[simplex[c]][r]);
        // determinant via row reduction with pivot product
        Rat det = 1;
        {
            QMat m = g;
            for (int c = 0; c < b; ++c) {
                int pr = c;
                while (pr < b && m[pr][c] == 0) ++pr;
                if (pr == b) {
                    det = 0;
                    break;
                }
                if (pr != c) {
                    std::swap(m[pr], m[c]);
                    det = -det;
                }
                det *= m[c][c];
                Rat inv = 1 / m[c][c];
                for (int j = c; j < b; ++j) m[c][j] *= inv;
                for (int i = c + 1; i < b; ++i) {
                    if (m[i][c] == 0) continue;
                    Rat fct = m[i][c];
                    for (int j = c; j < b; ++j) m[i][j] -= fct * m[c][j];
                }
            }
        }
        Rat denom = 1;
        for (int j = 0; j < b; ++j) {
            Rat s = 0;
            for (int k = 0; k < b; ++k) s += v[k] * Rat(dual[simplex[j]][k]);
            denom *= s;
        }
        total += abs(det) / denom;
    }
    return total;
}

QVec log_anticanonical_class(const Fan& f, const PicardData& pic,
                             const OrbifoldWeights& w) {
    QVec cls(pic.rank, Rat(0));
    for (int i = 0; i < f.nrays(); ++i) {
        const Weight& wi = w.w[f.orbit_of_ray[i]];
        if (wi.infinite) continue;
        Rat coef = make_rat(1, wi.m);
        for (int j = 0; j < pic.rank; ++j)
            cls[j] += coef * Rat(pic.class_of_ray[i][j]);
    }
    return cls;
}

}  // namespace toric

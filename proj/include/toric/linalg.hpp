#ifndef TORIC_LINALG_HPP
#define TORIC_LINALG_HPP

#include <optional>
#include <vector>
#include "toric/rational.hpp"

namespace toric {

// Dense exact-rational matrix, row-major. All fan-logic linear algebra is
// exact; no floating point enters combinatorial decisions.
using QMat = std::vector<QVec>;
using ZMat = std::vector<Vec>;

QMat qmat_from(const ZMat& m);
int rank(QMat m);
std::optional<QMat> inverse(QMat m);
// solve A x = b; nullopt if inconsistent or underdetermined
std::optional<QVec> solve(QMat a, QVec b);
// basis of the right null space of a (vectors of length cols)
std::vector<QVec> nullspace(QMat a);

// Smith normal form diagonal entries (nonnegative, divisibility chain)
std::vector<Int> smith_diagonal(ZMat m);

// Smith normal form with transforms: U*m*V = diag(d). U is rows x rows,
// V is cols x cols, both unimodular.
struct SmithResult {
    std::vector<Int> diag;
    ZMat u, v;
};
SmithResult smith(ZMat m);

// scale a rational direction to a primitive integer vector
Vec primitive(const QVec& q);

// Double description: extreme rays of {x : <eq_i,x> = 0, <ineq_j,x> >= 0}.
// Returns primitive integer representatives. Throws if the cone has a
// nontrivial lineality space (not pointed).
std::vector<Vec> dual_description(const std::vector<QVec>& equalities,
                                  const std::vector<QVec>& inequalities,
                                  int dim);

// Triangulate a pointed cone given by extreme rays into simplicial cones
// (lists of indices into rays), each of full rank among the rays' span.
std::vector<std::vector<int>> triangulate_cone(const std::vector<Vec>& rays);

}  // namespace toric

#endif

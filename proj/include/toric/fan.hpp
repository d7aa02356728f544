#ifndef TORIC_FAN_HPP
#define TORIC_FAN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>
#include "toric/linalg.hpp"
#include "toric/rational.hpp"

namespace toric {

// weight attached to a boundary orbit; inf marks the "no points at all on
// this divisor" constraint
struct Weight {
    long m = 1;
    bool infinite = false;

    bool operator==(const Weight&) const = default;
};

// one weight per orbit, in orbit order
struct OrbifoldWeights {
    std::vector<Weight> w;

    static OrbifoldWeights ones(int norbits);
    // parse "2,2" or "2,inf"; every entry a positive integer or "inf"
    static OrbifoldWeights parse(const std::string& s, int norbits);
    std::string str() const;
    long lcm_finite() const;  // lcm of the finite weights
    bool all_finite() const;
};

// Complete regular fan in a lattice of rank dim. Rays are primitive; every
// maximal cone is unimodular. Cones are stored as sorted ray-index lists.
class Fan {
  public:
    int dim = 0;
    std::vector<Vec> rays;
    std::vector<std::vector<int>> max_cones;
    std::vector<int> orbit_of_ray;  // galois-orbit label per ray; split case: identity
    int num_orbits = 0;
    std::string name;

    int nrays() const { return static_cast<int>(rays.size()); }
    // all faces of all maximal cones, including the zero cone, deduped
    const std::vector<std::vector<int>>& cones() const;
    // inverse of the ray matrix of a maximal cone (rows = dual basis)
    const QMat& cone_dual(int max_cone_index) const;

  private:
    mutable std::vector<std::vector<int>> cones_;
    mutable std::vector<QMat> duals_;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> issues;
};

// structural checks: primitive distinct nonzero rays, independent cone
// generators, pairwise intersections are common faces, orbit labels sane
ValidationReport validate_fan(const Fan& f);

// every maximal cone full-dimensional and unimodular
bool is_regular(const Fan& f);

struct CompletenessResult {
    bool complete = true;
    std::string witness;  // an uncovered / doubly covered direction if not
};

// deterministic interior-probe check on top of facet pairing
CompletenessResult is_complete(const Fan& f);

// minimal cone containing a vector, with the positive coefficients on its rays
struct Location {
    std::vector<int> cone;  // ray indices, sorted
    QVec coeffs;            // matching positive coefficients
    int max_cone = -1;      // a maximal cone containing it
};

Location locate(const Fan& f, const QVec& x);

// piecewise-linear function determined by its values on the rays
struct PLFunction {
    QVec ray_values;
};

Rat evaluate_pl(const Fan& f, const PLFunction& phi, const QVec& x);

// log-anticanonical function: value 1/m on each ray (0 on infinite weights)
PLFunction log_anticanonical(const Fan& f, const OrbifoldWeights& w);

// library fans
Fan projective_space(int n);
Fan p1();
Fan p2();
Fan p1xp1();
Fan hirzebruch1();
Fan del_pezzo6();
Fan product(const Fan& a, const Fan& b);
// lookup by name: P1, P2, P3, P1xP1, F1, dP6
std::optional<Fan> library_fan(const std::string& name);

}  // namespace toric

#endif

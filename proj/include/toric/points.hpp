#ifndef TORIC_POINTS_HPP
#define TORIC_POINTS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>
#include "toric/fan.hpp"

namespace toric {

// point of the split torus T(Q) = (Q*)^d
struct TorusPoint {
    QVec coords;
};

enum class Variant {
    Plain,  // no condition (rational points)
    Campana,
    Darmon,
    WeakCampana,
    StrongCampana,
    StrongDarmon,
    GeomCampana,
    GeomDarmon,
};

std::optional<Variant> variant_from_string(const std::string& s);
std::string variant_name(Variant v);

// lattice vector of coordinate valuations at p
Vec degree_vector(const TorusPoint& t, const Int& p);

struct LocalProfile {
    std::vector<int> cone;   // ray indices of the located minimal cone
    std::vector<long> lambda;  // matching multiplicities, all > 0
};

struct MultiplicityProfile {
    std::map<Int, LocalProfile> at_prime;  // support primes only
};

MultiplicityProfile multiplicity_profile(const Fan& f, const TorusPoint& t);

// per-hyperplane multiplicities of a projective point with coprime integer
// coordinates: entry i is v_p(x_i)
std::vector<long> crosscheck_projective(std::vector<Int> coords, const Int& p);

struct ClassifyOptions {
    // inertia degrees per orbit for the strong variants; empty = all 1
    std::vector<long> inertia;
};

struct LocalVerdict {
    bool ok = true;
    bool infinite_weight_violation = false;
};

LocalVerdict classify_local(const Fan& f, const OrbifoldWeights& w,
                            const TorusPoint& t, const Int& p, Variant variant,
                            const ClassifyOptions& opt = {});

// same decision applied directly to a precomputed local profile
LocalVerdict classify_profile(const Fan& f, const OrbifoldWeights& w,
                              const LocalProfile& prof, Variant variant,
                              const ClassifyOptions& opt = {});

struct GlobalVerdict {
    bool ok = true;
    std::optional<Int> witness_prime;
    bool infinite_weight_violation = false;
};

GlobalVerdict classify_global(const Fan& f, const OrbifoldWeights& w,
                              const TorusPoint& t, const std::set<Int>& excluded,
                              Variant variant, const ClassifyOptions& opt = {});

}  // namespace toric

#endif

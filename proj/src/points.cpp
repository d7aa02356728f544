#include "toric/points.hpp"

#include <stdexcept>
#include "toric/io.hpp"

namespace toric {

std::optional<Variant> variant_from_string(const std::string& s) {
    if (s == "plain" || s == "rational") return Variant::Plain;
    if (s == "campana") return Variant::Campana;
    if (s == "darmon") return Variant::Darmon;
    if (s == "weak") return Variant::WeakCampana;
    if (s == "strong-campana") return Variant::StrongCampana;
    if (s == "strong-darmon") return Variant::StrongDarmon;
    if (s == "geom-campana") return Variant::GeomCampana;
    if (s == "geom-darmon") return Variant::GeomDarmon;
    return std::nullopt;
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Plain: return "plain";
        case Variant::Campana: return "campana";
        case Variant::Darmon: return "darmon";
        case Variant::WeakCampana: return "weak";
        case Variant::StrongCampana: return "strong-campana";
        case Variant::StrongDarmon: return "strong-darmon";
        case Variant::GeomCampana: return "geom-campana";
        case Variant::GeomDarmon: return "geom-darmon";
    }
    return "?";
}

Vec degree_vector(const TorusPoint& t, const Int& p) {
    Vec v;
    v.reserve(t.coords.size());
    for (const auto& c : t.coords) {
        if (c == 0) throw std::invalid_argument("torus point has a zero coordinate");
        v.push_back(valuation(c, p));
    }
    return v;
}

namespace {

LocalProfile profile_at(const Fan& f, const TorusPoint& t, const Int& p) {
    Vec dv = degree_vector(t, p);
    QVec q;
    q.reserve(dv.size());
    for (const auto& e : dv) q.emplace_back(e);
    Location loc = locate(f, q);
    LocalProfile prof;
    prof.cone = loc.cone;
    for (const auto& c : loc.coeffs) {
        if (c.get_den() != 1)
            throw std::runtime_error("non-integral cone coefficient on a lattice vector");
        prof.lambda.push_back(static_cast<long>(c.get_num().get_si()));
    }
    return prof;
}

}  // namespace

MultiplicityProfile multiplicity_profile(const Fan& f, const TorusPoint& t) {
    MultiplicityProfile mp;
    for (const auto& p : support_primes(t.coords)) {
        LocalProfile prof = profile_at(f, t, p);
        if (!prof.cone.empty()) mp.at_prime.emplace(p, std::move(prof));
    }
    return mp;
}

std::vector<long> crosscheck_projective(std::vector<Int> coords, const Int& p) {
    Int g = 0;
    for (const auto& c : coords) g = gcd(g, c);
    if (g == 0) throw std::invalid_argument("zero projective point");
    if (g > 1)
        for (auto& c : coords) c /= g;
    std::vector<long> out;
    out.reserve(coords.size());
    for (const auto& c : coords) out.push_back(c == 0 ? 0 : valuation(c, p));
    return out;
}

LocalVerdict classify_profile(const Fan& f, const OrbifoldWeights& w,
                              const LocalProfile& prof, Variant variant,
                              const ClassifyOptions& opt) {
    LocalVerdict verdict;
    auto inertia = [&](int orbit) -> long {
        if (opt.inertia.empty()) return 1;
        return opt.inertia[orbit];
    };
    Rat weak_sum = 0;
    for (size_t k = 0; k < prof.cone.size(); ++k) {
        int orbit = f.orbit_of_ray[prof.cone[k]];
        const Weight& wt = w.w[orbit];
        long lam = prof.lambda[k];
        if (wt.infinite) {
            // boundary of an infinite-weight divisor carries no points at all
            verdict.ok = false;
            verdict.infinite_weight_violation = true;
            return verdict;
        }
        long m = wt.m;
        long fdeg = inertia(orbit);
        switch (variant) {
            case Variant::Plain:
                break;
            case Variant::Campana:
            case Variant::GeomCampana:
                if (lam < m) verdict.ok = false;
                break;
            case Variant::Darmon:
            case Variant::GeomDarmon:
                if (lam % m != 0) verdict.ok = false;
                break;
            case Variant::WeakCampana:
                if (m > 1) weak_sum += make_rat(lam, m);
                break;
            case Variant::StrongCampana:
                if (lam * fdeg < m) verdict.ok = false;
                break;
            case Variant::StrongDarmon:
                if ((lam * fdeg) % m != 0) verdict.ok = false;
                break;
        }
        if (!verdict.ok) return verdict;
    }
    if (variant == Variant::WeakCampana && weak_sum > 0 && weak_sum < 1)
        verdict.ok = false;
    return verdict;
}

LocalVerdict classify_local(const Fan& f, const OrbifoldWeights& w,
                            const TorusPoint& t, const Int& p, Variant variant,
                            const ClassifyOptions& opt) {
    return classify_profile(f, w, profile_at(f, t, p), variant, opt);
}

GlobalVerdict classify_global(const Fan& f, const OrbifoldWeights& w,
                              const TorusPoint& t, const std::set<Int>& excluded,
                              Variant variant, const ClassifyOptions& opt) {
    GlobalVerdict g;
    for (const auto& p : support_primes(t.coords)) {
        if (excluded.count(p)) continue;
        LocalVerdict lv = classify_local(f, w, t, p, variant, opt);
        if (!lv.ok) {
            g.ok = false;
            g.witness_prime = p;
            g.infinite_weight_violation = lv.infinite_weight_violation;
            return g;
        }
    }
    return g;
}

}  // namespace toric

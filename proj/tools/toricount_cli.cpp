#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "toric/density.hpp"
#include "toric/enumerate.hpp"
#include "toric/fit.hpp"
#include "toric/heights.hpp"
#include "toric/io.hpp"
#include "toric/picard.hpp"

using namespace toric;

namespace {

struct Options {
    std::string fan;
    std::string weights;
    std::string variant = "plain";
    std::string bound = "100";
    long primes_cutoff = 100000;
    int workers = 1;
    std::string out;
    long seed = 0;
    std::string point;
    long prime = 2;
    std::string s = "1";
    long level = 40;
    long long budget = 50'000'000;
    bool force_fallback = false;
    bool list_points = false;
    bool two_term = false;
    double min_bound = 0;
};

Rat parse_bound(const std::string& s) {
    auto epos = s.find_first_of("eE");
    if (epos == std::string::npos) return parse_rational(s);
    Rat mant = parse_rational(s.substr(0, epos));
    long e = std::stol(s.substr(epos + 1));
    Rat ten = 10;
    Rat scale = 1;
    for (long i = 0; i < std::abs(e); ++i) scale *= ten;
    return e >= 0 ? Rat(mant * scale) : Rat(mant / scale);
}

struct Setup {
    Fan fan;
    OrbifoldWeights w;
    Variant variant = Variant::Plain;
};

Setup setup(const Options& o, bool need_weights) {
    if (o.fan.empty()) throw std::runtime_error("--fan is required");
    FanFile ff = resolve_fan(o.fan);
    Setup s;
    s.fan = ff.fan;
    if (!o.weights.empty())
        s.w = OrbifoldWeights::parse(o.weights, s.fan.num_orbits);
    else if (ff.weights)
        s.w = *ff.weights;
    else if (need_weights)
        s.w = OrbifoldWeights::ones(s.fan.num_orbits);
    auto v = variant_from_string(o.variant);
    if (!v) throw std::runtime_error("unknown variant: " + o.variant);
    s.variant = *v;
    return s;
}

std::ostream& output(const Options& o, std::ofstream& file) {
    if (o.out.empty()) return std::cout;
    file.open(o.out);
    if (!file) throw std::runtime_error("cannot open output file: " + o.out);
    return file;
}

int cmd_check(const Options& o) {
    FanFile ff = resolve_fan(o.fan.empty() ? throw std::runtime_error("--fan is required")
                                           : o.fan);
    const Fan& f = ff.fan;
    ValidationReport rep = validate_fan(f);
    std::ofstream fh;
    std::ostream& os = output(o, fh);
    os << "fan " << f.name << ": dim " << f.dim << ", " << f.nrays()
       << " rays, " << f.max_cones.size() << " maximal cones\n";
    for (const auto& issue : rep.issues) os << "invalid: " << issue << "\n";
    if (!rep.ok) return 2;
    bool reg = is_regular(f);
    CompletenessResult comp = is_complete(f);
    os << "regular: " << (reg ? "yes" : "no") << "\n";
    os << "complete: " << (comp.complete ? "yes" : "no");
    if (!comp.complete) os << "  (" << comp.witness << ")";
    os << "\n";
    if (reg && comp.complete) {
        PicardData pic = picard(f);
        os << "picard rank: " << pic.rank << "\n";
    }
    return (reg && comp.complete) ? 0 : 2;
}

int cmd_locate(const Options& o) {
    Setup s = setup(o, false);
    QVec x = parse_point(o.point);
    if (static_cast<int>(x.size()) != s.fan.dim)
        throw std::runtime_error("point dimension mismatch");
    Location loc = locate(s.fan, x);
    std::ofstream fh;
    std::ostream& os = output(o, fh);
    os << "minimal cone rays:";
    for (int r : loc.cone) os << " " << r;
    os << "\ncoefficients:";
    for (const auto& c : loc.coeffs) os << " " << c;
    os << "\nmaximal cone index: " << loc.max_cone << "\n";
    return 0;
}

int cmd_classify(const Options& o) {
    Setup s = setup(o, true);
    if (o.point.empty()) throw std::runtime_error("--point is required");
    std::ofstream fh;
    std::ostream& os = output(o, fh);
    os << "point,variant,verdict,witness_prime\n";
    TorusPoint t{parse_point(o.point)};
    if (static_cast<int>(t.coords.size()) != s.fan.dim)
        throw std::runtime_error("point dimension mismatch");
    GlobalVerdict v = classify_global(s.fan, s.w, t, {}, s.variant);
    os << o.point << "," << variant_name(s.variant) << ","
       << (v.ok ? "pass" : "fail") << ","
       << (v.witness_prime ? v.witness_prime->get_str() : "") << "\n";
    return 0;
}

int cmd_height(const Options& o) {
    Setup s = setup(o, true);
    if (o.point.empty()) throw std::runtime_error("--point is required");
    TorusPoint t{parse_point(o.point)};
    if (static_cast<int>(t.coords.size()) != s.fan.dim)
        throw std::runtime_error("point dimension mismatch");
    PLFunction phi = log_anticanonical(s.fan, s.w);
    HeightValue h = global_height(s.fan, phi, t);
    std::ofstream fh;
    std::ostream& os = output(o, fh);
    bool first = true;
    for (const auto& [p, e] : h.finite_exponents) {
        if (e == 0) continue;
        if (!first) os << " * ";
        os << p << "^" << e;
        first = false;
    }
    if (!first) os << " * ";
    os << exp(h.archimedean_log).str(12) << " = " << h.total().str(12) << "\n";
    return 0;
}

int cmd_qpoly(const Options& o) {
    Setup s = setup(o, true);
    InvariantConeSet cs = split_cone_set(s.fan, s.w);
    PolyVariant pv = poly_variant(s.variant);
    SparseMultiPoly q = q_polynomial(cs, pv);
    DegreeBoundReport rep = verify_degree_bounds(q, cs, pv);
    std::ofstream fh;
    std::ostream& os = output(o, fh);
    os << "Q = " << q.str(cs.blocks) << "\n";
    os << "degree bounds: " << (rep.ok ? "pass" : "fail") << "\n";
    for (const auto& issue : rep.issues) os << "  " << issue << "\n";
    return rep.ok ? 0 : 2;
}

int cmd_density(const Options& o) {
    Setup s = setup(o, true);
    PolyVariant pv = poly_variant(s.variant);
    Rat sv = parse_rational(o.s);
    DirectDensity dd =
        local_density_direct(s.fan, s.w, pv, o.prime, sv, o.level);
    Real closed = local_density_closed(s.fan, s.w, pv, o.prime, sv);
    std::ofstream fh;
    std::ostream& os = output(o, fh);
    os << "p = " << o.prime << ", s = " << sv << "\n";
    os << "direct = " << dd.value.str(15) << " (tail <= " << dd.tail_bound.str(3)
       << ", level " << dd.level << ")\n";
    os << "closed = " << closed.str(15) << "\n";
    return 0;
}

int cmd_predict(const Options& o) {
    Setup s = setup(o, true);
    ConstantReport rep = predicted_constant(s.fan, s.w, poly_variant(s.variant),
                                            o.primes_cutoff, o.workers);
    std::ofstream fh;
    std::ostream& os = output(o, fh);
    os << rep.key_values() << rep.csv_header() << "\n" << rep.csv_line() << "\n";
    return 0;
}

int cmd_count(const Options& o) {
    Setup s = setup(o, true);
    EnumOptions eo;
    eo.workers = o.workers;
    eo.fallback_budget = o.budget;
    eo.force_fallback = o.force_fallback;
    Rat bound = parse_bound(o.bound);
    std::ofstream fh;
    std::ostream& os = output(o, fh);
    if (o.list_points) {
        std::vector<TorusPoint> pts =
            enumerate_points(s.fan, s.w, s.variant, bound, eo);
        for (const auto& t : pts) {
            for (size_t j = 0; j < t.coords.size(); ++j)
                os << (j ? "," : "") << t.coords[j];
            os << "\n";
        }
        os << "# " << pts.size() << " points\n";
        return 0;
    }
    CountRun run = count_points(s.fan, s.w, s.variant, bound, eo);
    if (run.used_fallback)
        std::cerr << "note: " << run.note << "\n";
    os << run.csv();
    return 0;
}

int cmd_report(const Options& o) {
    Setup s = setup(o, true);
    PicardData pic = picard(s.fan);
    ConstantReport pred = predicted_constant(s.fan, s.w, poly_variant(s.variant),
                                             o.primes_cutoff, o.workers);
    EnumOptions eo;
    eo.workers = o.workers;
    eo.fallback_budget = o.budget;
    eo.force_fallback = o.force_fallback;
    CountRun run = count_points(s.fan, s.w, s.variant, parse_bound(o.bound), eo);
    bool two_term = o.two_term || pic.rank >= 2;
    FitReport rep = fit_and_report(run, pic.rank, pred.c_pred.to_double(),
                                   two_term, o.min_bound);
    std::ofstream fh;
    std::ostream& os = output(o, fh);
    os << run.csv() << "\n" << rep.text() << "\n" << rep.csv();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"counts of semi-integral points on split toric varieties"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--fan", o.fan, "library fan name or .fan file path");
        c->add_option("--weights", o.weights, "orbit weights, e.g. 2,2 or 2,inf");
        c->add_option("--variant", o.variant,
                      "plain|campana|darmon|weak|strong-campana|strong-darmon|"
                      "geom-campana|geom-darmon");
        c->add_option("--bound", o.bound, "height bound B");
        c->add_option("--primes-cutoff", o.primes_cutoff, "Euler product cutoff");
        c->add_option("--workers", o.workers, "worker thread count");
        c->add_option("--out", o.out, "write output to this file");
        c->add_option("--seed", o.seed, "random seed for sampled audits");
        return c;
    };

    auto* c_check = add_common(app.add_subcommand("check", "validate a fan"));
    auto* c_locate =
        add_common(app.add_subcommand("locate", "locate a lattice vector"));
    c_locate->add_option("--point", o.point, "comma-separated coordinates");
    auto* c_classify =
        add_common(app.add_subcommand("classify", "classify a torus point"));
    c_classify->add_option("--point", o.point, "comma-separated rationals");
    auto* c_height =
        add_common(app.add_subcommand("height", "height of a torus point"));
    c_height->add_option("--point", o.point, "comma-separated rationals");
    auto* c_qpoly =
        add_common(app.add_subcommand("qpoly", "numerator polynomial Q"));
    auto* c_density =
        add_common(app.add_subcommand("density", "local p-adic density"));
    c_density->add_option("--prime", o.prime, "prime p");
    c_density->add_option("--s", o.s, "evaluation point s (rational)");
    c_density->add_option("--level", o.level, "direct-sum truncation level");
    auto* c_predict =
        add_common(app.add_subcommand("predict", "predicted leading constant"));
    auto* c_count = add_common(app.add_subcommand("count", "count points up to B"));
    c_count->add_option("--budget", o.budget, "fallback node budget");
    c_count->add_flag("--force-fallback", o.force_fallback,
                      "skip specialized enumerators");
    c_count->add_flag("--list", o.list_points, "emit the points themselves");
    auto* c_report = add_common(
        app.add_subcommand("report", "count, fit, and compare to prediction"));
    c_report->add_option("--budget", o.budget, "fallback node budget");
    c_report->add_flag("--force-fallback", o.force_fallback,
                       "skip specialized enumerators");
    c_report->add_flag("--two-term", o.two_term, "fit a second-order term");
    c_report->add_option("--min-bound", o.min_bound,
                         "smallest checkpoint used in the fit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_check->parsed()) return cmd_check(o);
        if (c_locate->parsed()) return cmd_locate(o);
        if (c_classify->parsed()) return cmd_classify(o);
        if (c_height->parsed()) return cmd_height(o);
        if (c_qpoly->parsed()) return cmd_qpoly(o);
        if (c_density->parsed()) return cmd_density(o);
        if (c_predict->parsed()) return cmd_predict(o);
        if (c_count->parsed()) return cmd_count(o);
        if (c_report->parsed()) return cmd_report(o);
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "toric/density.hpp"
#include "toric/enumerate.hpp"
#include "toric/fit.hpp"
#include "toric/heights.hpp"
#include "toric/io.hpp"
#include "toric/picard.hpp"

namespace py = pybind11;
using namespace toric;

namespace {

Fan get_fan(const std::string& name_or_path) { return resolve_fan(name_or_path).fan; }

OrbifoldWeights get_weights(const Fan& f, const std::string& weights) {
    if (weights.empty()) return OrbifoldWeights::ones(f.num_orbits);
    return OrbifoldWeights::parse(weights, f.num_orbits);
}

Variant get_variant(const std::string& v) {
    auto r = variant_from_string(v);
    if (!r) throw std::invalid_argument("unknown variant: " + v);
    return *r;
}

QVec point_from_strings(const std::vector<std::string>& coords) {
    QVec x;
    for (const auto& c : coords) x.push_back(parse_rational(c));
    return x;
}

}  // namespace

PYBIND11_MODULE(_toricount, mod) {
    mod.doc() = "exact counting of semi-integral points on split toric varieties";

    mod.def("validate", [](const std::string& fan) {
        FanFile ff = resolve_fan(fan);
        ValidationReport rep = validate_fan(ff.fan);
        bool reg = rep.ok && is_regular(ff.fan);
        bool comp = rep.ok && is_complete(ff.fan).complete;
        return py::make_tuple(rep.ok && reg && comp, rep.issues);
    });

    mod.def("picard_rank",
            [](const std::string& fan) { return picard(get_fan(fan)).rank; });

    mod.def("locate", [](const std::string& fan, const std::vector<std::string>& x) {
        Fan f = get_fan(fan);
        Location loc = locate(f, point_from_strings(x));
        std::vector<std::string> coeffs;
        for (const auto& c : loc.coeffs) coeffs.push_back(c.get_str());
        return py::make_tuple(loc.cone, coeffs);
    });

    mod.def("classify",
            [](const std::string& fan, const std::string& weights,
               const std::string& variant, const std::vector<std::string>& x) {
                Fan f = get_fan(fan);
                GlobalVerdict v =
                    classify_global(f, get_weights(f, weights),
                                    TorusPoint{point_from_strings(x)}, {},
                                    get_variant(variant));
                return py::make_tuple(
                    v.ok, v.witness_prime ? v.witness_prime->get_str() : "");
            });

    mod.def("height", [](const std::string& fan, const std::string& weights,
                         const std::vector<std::string>& x) {
        Fan f = get_fan(fan);
        PLFunction phi = log_anticanonical(f, get_weights(f, weights));
        return global_height(f, phi, TorusPoint{point_from_strings(x)})
            .total()
            .to_double();
    });

    mod.def("q_polynomial", [](const std::string& fan, const std::string& weights,
                               const std::string& variant) {
        Fan f = get_fan(fan);
        InvariantConeSet cs = split_cone_set(f, get_weights(f, weights));
        SparseMultiPoly q = q_polynomial(cs, poly_variant(get_variant(variant)));
        return q.str(cs.blocks);
    });

    mod.def("local_density",
            [](const std::string& fan, const std::string& weights,
               const std::string& variant, long p, const std::string& s) {
                Fan f = get_fan(fan);
                return local_density_closed(f, get_weights(f, weights),
                                            poly_variant(get_variant(variant)), p,
                                            parse_rational(s))
                    .to_double();
            });

    mod.def("predict", [](const std::string& fan, const std::string& weights,
                          const std::string& variant, long cutoff, int workers) {
        Fan f = get_fan(fan);
        ConstantReport r =
            predicted_constant(f, get_weights(f, weights),
                               poly_variant(get_variant(variant)), cutoff, workers);
        py::dict d;
        d["alpha_direct"] = r.alpha_direct.to_double();
        d["alpha_paper"] = r.alpha_paper.to_double();
        d["b"] = r.b;
        d["d_inf"] = r.d_inf.to_double();
        d["euler_P"] = r.euler.to_double();
        d["tail"] = r.tail.to_double();
        d["c_pred"] = r.c_pred.to_double();
        return d;
    }, py::arg("fan"), py::arg("weights") = "", py::arg("variant") = "campana",
       py::arg("cutoff") = 100000, py::arg("workers") = 1);

    mod.def("count", [](const std::string& fan, const std::string& weights,
                        const std::string& variant, const std::string& bound,
                        int workers) {
        Fan f = get_fan(fan);
        EnumOptions o;
        o.workers = workers;
        CountRun run = count_points(f, get_weights(f, weights),
                                    get_variant(variant), parse_rational(bound), o);
        py::list rows;
        for (size_t k = 0; k < run.checkpoints.size(); ++k)
            rows.append(
                py::make_tuple(run.checkpoints[k].get_d(), run.counts[k]));
        return rows;
    }, py::arg("fan"), py::arg("weights") = "", py::arg("variant") = "campana",
       py::arg("bound") = "100", py::arg("workers") = 1);

    mod.def("enumerate_points", [](const std::string& fan, const std::string& weights,
                                   const std::string& variant,
                                   const std::string& bound) {
        Fan f = get_fan(fan);
        auto pts = toric::enumerate_points(f, get_weights(f, weights),
                                           get_variant(variant),
                                           parse_rational(bound));
        py::list out;
        for (const auto& t : pts) {
            py::list coords;
            for (const auto& c : t.coords) coords.append(c.get_str());
            out.append(coords);
        }
        return out;
    }, py::arg("fan"), py::arg("weights") = "", py::arg("variant") = "campana",
       py::arg("bound") = "100");

    mod.def("mfull", &enumerate_mfull, py::arg("limit"), py::arg("m"));
}

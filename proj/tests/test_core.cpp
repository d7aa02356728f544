#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <sstream>
#include "doctest.h"
#include "toric/fan.hpp"
#include "toric/io.hpp"
#include "toric/picard.hpp"

using namespace toric;

static Fan bad_fan(std::vector<Vec> rays, std::vector<std::vector<int>> cones) {
    Fan f;
    f.dim = static_cast<int>(rays[0].size());
    f.rays = std::move(rays);
    f.max_cones = std::move(cones);
    f.orbit_of_ray.resize(f.rays.size());
    for (size_t i = 0; i < f.rays.size(); ++i) f.orbit_of_ray[i] = static_cast<int>(i);
    f.num_orbits = static_cast<int>(f.rays.size());
    return f;
}

TEST_CASE("validation of the standard fans") {
    for (const char* name : {"P1", "P2", "P3", "P1xP1", "F1", "dP6"}) {
        Fan f = *library_fan(name);
        CHECK(validate_fan(f).ok);
        CHECK(is_regular(f));
        CHECK(is_complete(f).complete);
    }
}

TEST_CASE("invalid fans are rejected") {
    // non-unimodular cone
    Fan g = bad_fan({{1, 0}, {2, 1}, {0, 1}, {-1, -1}},
                    {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_FALSE(is_regular(g));
    // overlapping cones whose intersection is not a face
    Fan h = bad_fan({{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {0, 2}});
    CHECK_FALSE(validate_fan(h).ok);
    // incomplete fan
    Fan k = bad_fan({{1, 0}, {0, 1}, {-1, -1}}, {{1, 2}, {2, 0}});
    CHECK_FALSE(is_complete(k).complete);
}

TEST_CASE("locate on the plane fan") {
    Fan f = p2();  // rays (1,0), (0,1), (-1,-1)
    auto l1 = locate(f, {Rat(2), Rat(3)});
    CHECK(l1.cone == std::vector<int>{0, 1});
    CHECK(l1.coeffs == QVec{Rat(2), Rat(3)});
    auto l2 = locate(f, {Rat(-1), Rat(-1)});
    CHECK(l2.cone == std::vector<int>{2});
    CHECK(l2.coeffs == QVec{Rat(1)});
    auto l3 = locate(f, {Rat(-2), Rat(1)});
    CHECK(l3.cone == std::vector<int>{1, 2});
    // coefficients follow sorted ray order: 3 on (0,1), 2 on (-1,-1)
    CHECK(l3.coeffs == QVec{Rat(3), Rat(2)});
    auto l0 = locate(f, {Rat(0), Rat(0)});
    CHECK(l0.cone.empty());
}

TEST_CASE("locate partitions the lattice") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> coord(-500, 500);
    for (const char* name : {"P2", "P1xP1", "F1", "dP6"}) {
        Fan f = *library_fan(name);
        for (int trial = 0; trial < 2500; ++trial) {
            QVec x;
            for (int j = 0; j < f.dim; ++j) x.emplace_back(coord(rng));
            Location loc = locate(f, x);
            // reassemble the vector from the expansion
            QVec back(f.dim, Rat(0));
            for (size_t j = 0; j < loc.cone.size(); ++j)
                for (int k = 0; k < f.dim; ++k)
                    back[k] += loc.coeffs[j] * f.rays[loc.cone[j]][k];
            REQUIRE(back == x);
            for (const auto& c : loc.coeffs) REQUIRE(c > 0);
        }
    }
}

TEST_CASE("piecewise-linear evaluation") {
    Fan f = p2();
    PLFunction ones{QVec(3, Rat(1))};
    CHECK(evaluate_pl(f, ones, {Rat(2), Rat(3)}) == 5);
    OrbifoldWeights w = OrbifoldWeights::parse("2,2,2", 3);
    PLFunction phi = log_anticanonical(f, w);
    CHECK(evaluate_pl(f, phi, {Rat(-2), Rat(1)}) == make_rat(5, 2));
    CHECK(evaluate_pl(f, phi, {Rat(0), Rat(0)}) == 0);
    // positive homogeneity and additivity
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> coord(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        QVec x{Rat(coord(rng)), Rat(coord(rng))};
        for (long lam : {2L, 3L})
            CHECK(evaluate_pl(f, phi, {x[0] * lam, x[1] * lam}) ==
                  lam * evaluate_pl(f, phi, x));
        CHECK(evaluate_pl(f, ones, x) + evaluate_pl(f, phi, x) ==
              evaluate_pl(f, PLFunction{{ones.ray_values[0] + phi.ray_values[0],
                                         ones.ray_values[1] + phi.ray_values[1],
                                         ones.ray_values[2] + phi.ray_values[2]}},
                          x));
    }
    // a globally linear function agrees with its dual vector everywhere
    PLFunction lin{QVec{Rat(1), Rat(2), Rat(-3)}};  // <u,.> with u = (1,2)
    for (int trial = 0; trial < 200; ++trial) {
        QVec x{Rat(coord(rng)), Rat(coord(rng))};
        CHECK(evaluate_pl(f, lin, x) == x[0] + 2 * x[1]);
    }
}

TEST_CASE("divisor class groups") {
    CHECK(picard(p1()).rank == 1);
    PicardData pic2 = picard(p2());
    CHECK(pic2.rank == 1);
    for (int i = 0; i < 3; ++i) CHECK(pic2.class_of_ray[i] == Vec{Int(1)});
    PicardData picq = picard(p1xp1());
    CHECK(picq.rank == 2);
    for (const char* name : {"P1", "P2", "P3", "P1xP1", "F1", "dP6"}) {
        Fan f = *library_fan(name);
        CHECK(picard(f).rank == f.nrays() - f.dim);
    }
}

TEST_CASE("effective cone integrals") {
    PicardData p = picard(p2());
    CHECK(effective_cone_constant(p, {Rat(3)}) == make_rat(1, 3));
    PicardData q = picard(p1xp1());
    CHECK(effective_cone_constant(q, {Rat(2), Rat(2)}) == make_rat(1, 4));
    PicardData l = picard(p1());
    CHECK(effective_cone_constant(l, {Rat(2)}) == make_rat(1, 2));
    // homogeneity of degree -b
    for (const char* name : {"P1", "P2", "P1xP1", "F1", "dP6"}) {
        Fan f = *library_fan(name);
        PicardData pic = picard(f);
        QVec v = log_anticanonical_class(f, pic, OrbifoldWeights::ones(f.num_orbits));
        Rat base = effective_cone_constant(pic, v);
        for (long lam : {2L, 3L}) {
            QVec vs = v;
            for (auto& c : vs) c *= lam;
            Rat scaled = effective_cone_constant(pic, vs);
            Rat expect = base;
            for (int i = 0; i < pic.rank; ++i) expect /= lam;
            CHECK(scaled == expect);
        }
    }
}

TEST_CASE("fan file round trip") {
    Fan f = hirzebruch1();
    FanFile ff{f, OrbifoldWeights::parse("2,1,3,1", 4)};
    std::string text = format_fan(ff);
    std::istringstream in(text);
    FanFile back = parse_fan(in, "F1");
    CHECK(back.fan.rays == f.rays);
    CHECK(back.fan.dim == f.dim);
    REQUIRE(back.weights.has_value());
    CHECK(back.weights->str() == "2,1,3,1");
    CHECK(validate_fan(back.fan).ok);
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "flowforms/builtin_models.hpp"
#include "flowforms/sl2_numeric.hpp"

using namespace flowforms;

TEST_CASE("bracket relations of the standard basis") {
    auto b = AlgebraBasis::standard();
    auto r = bracket_check(b);
    CHECK(r.max_deviation < 1e-14);
    CHECK(r.pass);

    // doubled nilpotent scale: [E+, E-] = 2 E0
    auto bad = b;
    bad.Em = 2.0 * bad.Em;
    CHECK_FALSE(bracket_check(bad).pass);

    AlgebraBasis zeros;
    CHECK_FALSE(bracket_check(zeros).pass);
}

TEST_CASE("closed-form flows") {
    auto b = AlgebraBasis::standard();
    auto id = Mat2::identity();
    CHECK((flow(id, b, FlowKind::geodesic, 0.0) - id).max_abs() == 0.0);
    auto g2 = flow(id, b, FlowKind::geodesic, 2.0);
    CHECK(g2.a == Catch::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(g2.d == Catch::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(g2.b == 0.0);
    // the horocycle-(+) flow is unipotent with off-diagonal t * scale
    auto h = flow(id, b, FlowKind::horocycle_plus, 3.0);
    CHECK(h.a == 1.0);
    CHECK(h.d == 1.0);
    CHECK(h.c == Catch::Approx(3.0 * 0.5));
    CHECK(std::abs(h.det() - 1.0) < 1e-15);
}

TEST_CASE("one-parameter group law over |s|,|t| <= 5") {
    auto r = one_parameter_group_check(7, 50);
    CHECK(r.max_deviation < 1e-12);
    CHECK(r.pass);
}

TEST_CASE("frame duality at random points") {
    auto r = duality_check(11, 100);
    CHECK(r.max_deviation < 1e-12);
    CHECK(r.pass);
}

TEST_CASE("the flow velocities pair correctly with the frame") {
    auto b = AlgebraBasis::standard();
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        Mat2 g = random_group_point(rng);
        Mat2 geod_vel = b.E0 * g;
        CHECK(eval_form(0, g, geod_vel) == Catch::Approx(1.0).margin(1e-12));
        CHECK(eval_form(1, g, geod_vel) == Catch::Approx(0.0).margin(1e-12));
        CHECK(eval_form(2, g, geod_vel) == Catch::Approx(0.0).margin(1e-12));
        // horocycle-(+) velocity is e_-: it pairs to 1 with omega_-
        Mat2 hp_vel = b.Em * g;
        CHECK(eval_form(2, g, hp_vel) == Catch::Approx(1.0).margin(1e-12));
        CHECK(eval_form(0, g, hp_vel) == Catch::Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("finite-difference Lie derivatives match the symbolic tables") {
    auto geo = make_sl2(Sl2Flow::geodesic);
    for (int k = 1; k <= 3; ++k) {
        auto r = numeric_lie_check(geo, FlowKind::geodesic, k, 13);
        INFO("degree " << k);
        CHECK(r.max_deviation < 1e-6);
        CHECK(r.pass);
    }
    auto hp = make_sl2(Sl2Flow::horocycle_plus);
    for (int k = 1; k <= 3; ++k) {
        auto r = numeric_lie_check(hp, FlowKind::horocycle_plus, k, 13);
        CHECK(r.max_deviation < 1e-6);
    }
    auto hm = make_sl2(Sl2Flow::horocycle_minus);
    CHECK(numeric_lie_check(hm, FlowKind::horocycle_minus, 1, 13).max_deviation < 1e-6);
}

TEST_CASE("finite differences converge at second order") {
    // on forms with nonvanishing third Lie power the halved-step error shrinks
    // by about 4
    auto geo = make_sl2(Sl2Flow::geodesic);
    auto r = numeric_lie_check(geo, FlowKind::geodesic, 1, 17);
    REQUIRE(r.ratio_samples > 0);
    CHECK(r.min_ratio > 3.5);
    CHECK(r.max_ratio < 4.5);
}

TEST_CASE("Maurer-Cartan pairing against the numeric field brackets") {
    for (auto flow : {Sl2Flow::geodesic, Sl2Flow::horocycle_plus}) {
        auto m = make_sl2(flow);
        auto r = maurer_cartan_check(m, 19);
        CHECK(r.max_deviation < 1e-8);
        CHECK(r.pass);
    }
}

TEST_CASE("closed geodesic periods equal translation lengths") {
    auto p = closed_geodesic_period(Mat2::diag(std::exp(1.0), std::exp(-1.0)));
    CHECK(p.length == Catch::Approx(2.0).epsilon(1e-14));
    CHECK(p.deviation < 1e-9);

    auto p2 = closed_geodesic_period(Mat2::diag(std::exp(2.0), std::exp(-2.0)));
    CHECK(p2.length == Catch::Approx(4.0).epsilon(1e-13));
    CHECK(p2.deviation < 1e-9);

    // a conjugated hyperbolic element has the same period data
    auto b = AlgebraBasis::standard();
    Mat2 s = (Mat2::identity() + 0.7 * b.Ep) * (Mat2::identity() + (-0.3) * b.Em);
    Mat2 h = s * Mat2::diag(std::exp(1.5), std::exp(-1.5)) * s.inverse();
    auto p3 = closed_geodesic_period(h);
    CHECK(p3.length == Catch::Approx(3.0).epsilon(1e-12));
    CHECK(p3.deviation < 1e-9);

    // trace below 2: rotations are not hyperbolic
    Mat2 rot{std::cos(0.5), -std::sin(0.5), std::sin(0.5), std::cos(0.5)};
    CHECK_THROWS_AS(closed_geodesic_period(rot), NotHyperbolicError);

    // negative trace representative of the same PSL2 element
    auto p4 = closed_geodesic_period(-1.0 * Mat2::diag(std::exp(1.0), std::exp(-1.0)));
    CHECK(p4.length == Catch::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("renormalization restores unit determinant") {
    Mat2 g = Mat2::diag(2.0, 2.0);
    CHECK(std::abs(renormalize(g).det() - 1.0) < 1e-15);
}

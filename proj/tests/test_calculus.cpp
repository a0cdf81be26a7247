#include <catch2/catch_amalgamated.hpp>

#include "flowforms/builtin_models.hpp"

using namespace flowforms;

namespace {

FormElement gen(const FormModel& m, std::size_t i) { return FormElement::generator(m.field, i); }

}  // namespace

TEST_CASE("sl2 structure data: d on generators") {
    auto m = make_sl2(Sl2Flow::geodesic);
    auto w0 = gen(m, 0), wp = gen(m, 1), wm = gen(m, 2);
    CHECK(m.calc.apply_d(w0) == wedge(wp, wm));
    CHECK(m.calc.apply_d(wp) == wedge(w0, wp));
    CHECK(m.calc.apply_d(wm) == -wedge(w0, wm));
    // d of a scalar is zero
    CHECK(m.calc.apply_d(FormElement::scalar(m.field, Scalar::from_int(5, 0))).is_zero());
}

TEST_CASE("d(w+^w-) vanishes, via the Leibniz route and via apply_d") {
    auto m = make_sl2(Sl2Flow::geodesic);
    auto w0 = gen(m, 0), wp = gen(m, 1), wm = gen(m, 2);
    // independent route: d(a^b) = da^b - a^db with the generator table
    FormElement leibniz = wedge(wedge(w0, wp), wm) - wedge(wp, -wedge(w0, wm));
    CHECK(leibniz.is_zero());
    CHECK(m.calc.apply_d(wedge(wp, wm)) == leibniz);
}

TEST_CASE("contraction values of the geodesic flow") {
    auto m = make_sl2(Sl2Flow::geodesic);
    auto w0 = gen(m, 0), wp = gen(m, 1), wm = gen(m, 2);
    auto one = FormElement::scalar(m.field, Scalar::from_int(1, 0));
    CHECK(m.calc.contract(w0) == one);
    CHECK(m.calc.contract(wp).is_zero());
    CHECK(m.calc.contract(wedge(w0, wedge(wp, wm))) == wedge(wp, wm));
    // degree-0 forms contract to zero
    CHECK(m.calc.contract(one).is_zero());
}

TEST_CASE("Lie derivative values") {
    auto geo = make_sl2(Sl2Flow::geodesic);
    auto w0 = gen(geo, 0), wp = gen(geo, 1), wm = gen(geo, 2);
    CHECK(geo.calc.lie(wp) == wp);
    CHECK(geo.calc.lie(wm) == -wm);
    CHECK(geo.calc.lie(w0).is_zero());
    CHECK(geo.calc.lie(wedge(wp, wm)).is_zero());
    CHECK(geo.calc.lie(wedge(w0, wedge(wp, wm))).is_zero());

    auto hp = make_sl2(Sl2Flow::horocycle_plus);
    CHECK(hp.calc.lie(gen(hp, 1)).is_zero());
    CHECK(hp.calc.lie(gen(hp, 2)) == gen(hp, 0));
    CHECK(hp.calc.lie(gen(hp, 0)) == -gen(hp, 1));
}

TEST_CASE("operator matrices") {
    auto m = make_sl2(Sl2Flow::geodesic);
    // d at top degree is the zero map into the empty basis
    auto top = m.calc.operator_matrix(OperatorKind::d, 3);
    CHECK(top.mat.rows() == 0);
    CHECK(top.mat.cols() == 1);
    CHECK(top.rank() == 0);

    auto hp = make_sl2(Sl2Flow::horocycle_plus);
    auto lie1 = hp.calc.operator_matrix(OperatorKind::lie, 1);
    CHECK(lie1.mat.rows() == 3);
    CHECK(lie1.rank() == 2);
    CHECK((lie1.mat * lie1.mat * lie1.mat).is_zero());  // nilpotent, index 3

    auto t = make_torus(2);
    auto row = t.calc.operator_matrix(OperatorKind::contract, 1);
    REQUIRE(row.mat.rows() == 1);
    CHECK(row.mat(0, 0) == Scalar::symbol(0, 2));
    CHECK(row.mat(0, 1) == Scalar::symbol(1, 2));

    CHECK_THROWS_AS(m.calc.operator_matrix(OperatorKind::d, 4), DegreeError);
    CHECK_THROWS_AS(m.calc.operator_matrix(OperatorKind::d, -1), DegreeError);
}

TEST_CASE("matrix composition mirrors operator composition") {
    for (auto model : {make_sl2(Sl2Flow::geodesic), make_torus(3)}) {
        const int n = model.dimension();
        for (int k = 0; k <= n; ++k) {
            Matrix lie = model.calc.operator_matrix(OperatorKind::lie, k).mat;
            Matrix cartan(lie.rows(), lie.cols(), model.nvars());
            if (k >= 1) {
                Matrix a = model.calc.operator_matrix(OperatorKind::d, k - 1).mat *
                           model.calc.operator_matrix(OperatorKind::contract, k).mat;
                cartan = a;
            }
            if (k + 1 <= n) {
                Matrix b = model.calc.operator_matrix(OperatorKind::contract, k + 1).mat *
                           model.calc.operator_matrix(OperatorKind::d, k).mat;
                for (std::size_t i = 0; i < cartan.rows(); ++i)
                    for (std::size_t j = 0; j < cartan.cols(); ++j) cartan(i, j) += b(i, j);
            }
            CHECK((lie - cartan).is_zero());
            if (k + 1 <= n) {
                Matrix dd = model.calc.operator_matrix(OperatorKind::d, k + 1).mat *
                            model.calc.operator_matrix(OperatorKind::d, k).mat;
                CHECK(dd.is_zero());
            }
        }
    }
}

TEST_CASE("d-squared validation rejects inconsistent generator data") {
    auto f = make_field({});
    auto a = FormElement::generator(f, 0);
    auto b = FormElement::generator(f, 1);
    auto c = FormElement::generator(f, 2);
    // d(a) = b^c, d(b) = a^b: then d(d(a)) = d(b)^c = a^b^c != 0
    std::vector<FormElement> d_values = {wedge(b, c), wedge(a, b), FormElement::zero(f)};
    std::vector<Scalar> iX(3, Scalar(0));
    GeneratorCalculus calc(f, d_values, iX);
    CHECK_THROWS_AS(calc.validate_d_squared({"a", "b", "c"}), ValidationError);
}

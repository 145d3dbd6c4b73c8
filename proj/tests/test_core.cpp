#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <synaptica/core.hpp>

using namespace synaptica;

namespace {
Element diag(std::vector<double> d) {
    return Element::matrix(Matrix::diag(std::move(d)));
}
} // namespace

TEST_CASE("vector-space operations") {
    const Element a = diag({1.0, 2.0});
    const Element b = diag({3.0, -1.0});
    CHECK(approx_equal(a + b, diag({4.0, 1.0})));
    CHECK(approx_equal(a - b, diag({-2.0, 3.0})));
    CHECK(approx_equal(2.0 * a, diag({2.0, 4.0})));
    CHECK(approx_equal(a * 2.0, 2.0 * a));
    CHECK(approx_equal(-a, diag({-1.0, -2.0})));
}

TEST_CASE("scalars embed as multiples of the unit") {
    const Element a = diag({1.0, 2.0});
    CHECK(approx_equal(a + 1.0, diag({2.0, 3.0})));
    CHECK(approx_equal(1.0 + a, a + 1.0));
    CHECK(approx_equal(a - 0.5, diag({0.5, 1.5})));
    CHECK(approx_equal(3.0 - a, diag({2.0, 1.0})));
    CHECK(approx_equal(scalar_like(a, 2.0), diag({2.0, 2.0})));
}

TEST_CASE("order and norm") {
    const Element a = diag({-3.0, 2.0});
    CHECK(order_unit_norm(a) == doctest::Approx(3.0));
    CHECK(is_positive(diag({0.0, 1.0})));
    CHECK(!is_positive(a));
    CHECK(leq(diag({0.0, 1.0}), diag({1.0, 1.0})));
    CHECK(!leq(diag({2.0, 0.0}), diag({1.0, 1.0})));
    CHECK(leq(-3.0, a));
    CHECK(leq(a, 3.0));
    CHECK(!leq(a, 1.0));
}

TEST_CASE("products and commutation") {
    const Element a = Element::matrix(Matrix{{0.0, 1.0}, {1.0, 0.0}});
    const Element b = diag({1.0, -1.0});
    // ab is not symmetric: a and b do not commute.
    CHECK(!commutes(a, b));
    CHECK(commutes(a, a));
    // The Jordan product is symmetric by construction.
    const Element j = jordan_product(a, b);
    CHECK(j.as_matrix().asymmetry() == doctest::Approx(0.0));
    CHECK(approx_equal(j, zero_like(a)));
    CHECK_THROWS_AS((void)into_algebra(mul(a, b)), std::invalid_argument);
    // For commuting operands the raw product already lies in A.
    CHECK(approx_equal(into_algebra(mul(b, b)), unit_like(b)));
}

TEST_CASE("projections and effects") {
    CHECK(is_projection(diag({1.0, 0.0})));
    CHECK(!is_projection(diag({0.5, 0.0})));
    CHECK(is_effect(diag({0.5, 1.0})));
    CHECK(!is_effect(diag({1.5, 0.0})));
    CHECK(!is_effect(diag({-0.1, 0.0})));
    CHECK(is_zero(diag({0.0, 0.0})));
    CHECK(!is_zero(diag({0.0, 1e-3})));
}

TEST_CASE("model and instance mismatches are rejected") {
    const Element a = diag({1.0, 2.0});
    const Element c = diag({1.0, 2.0, 3.0});
    const Element f = Element::setfn(field_generate(2, {1}), {1.0, 2.0});
    CHECK_THROWS_AS((void)(a + f), ModelMismatch);
    CHECK_THROWS_AS((void)(a + c), ModelMismatch);
    CHECK_THROWS_AS((void)Element::matrix(Matrix{{0.0, 1.0}, {0.0, 0.0}}),
                    std::invalid_argument);
}

TEST_CASE("bicommutant membership") {
    const Element a = diag({1.0, 1.0, 2.0});
    // Constant on the eigenspaces of a.
    CHECK(in_bicommutant(diag({3.0, 3.0, 5.0}), a));
    // Commutes with a but distinguishes points inside the degenerate space.
    CHECK(!in_bicommutant(diag({1.0, 2.0, 3.0}), a));
}

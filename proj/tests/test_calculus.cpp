#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <synaptica/calculus.hpp>

using namespace synaptica;

namespace {
Element diag(std::vector<double> d) {
    return Element::matrix(Matrix::diag(std::move(d)));
}
} // namespace

TEST_CASE("absolute value and positive/negative parts") {
    const Element a = diag({-2.0, 0.0, 3.0});
    CHECK(approx_equal(abs_value(a), diag({2.0, 0.0, 3.0})));
    CHECK(approx_equal(pos_part(a), diag({0.0, 0.0, 3.0})));
    CHECK(approx_equal(neg_part(a), diag({2.0, 0.0, 0.0})));
    CHECK(approx_equal(pos_part(a) - neg_part(a), a));
    // The two parts are orthogonal.
    CHECK(order_unit_norm(mul(pos_part(a), neg_part(a))) < 1e-9);
}

TEST_CASE("polar decomposition on a rotated element") {
    const Element a = Element::matrix(random_symmetric(5, 21, -2.0, 2.0));
    const PolarForm pf = polar(a);
    const double bound = 1e-7 * (1.0 + order_unit_norm(a));
    CHECK(order_unit_norm(into_algebra(mul(pf.signum, pf.absolute)) - a) <
          bound);
    CHECK(order_unit_norm(into_algebra(mul(pf.signum, a)) - pf.absolute) <
          bound);
    CHECK(order_unit_norm(into_algebra(mul(pf.signum, pf.signum)) -
                          carrier(a)) < bound);
}

TEST_CASE("signum on a diagonal element") {
    const Element a = diag({-2.0, 0.0, 3.0});
    CHECK(approx_equal(signum(a), diag({-1.0, 0.0, 1.0})));
}

TEST_CASE("quadratic map is linear and order preserving") {
    const Element a = Element::matrix(random_symmetric(4, 8, -1.0, 1.0));
    const Element b = Element::matrix(random_symmetric(4, 9, -1.0, 1.0));
    const Element c = Element::matrix(random_symmetric(4, 10, 0.0, 1.0));
    CHECK(approx_equal(quadratic_map(a, b + 2.0 * c),
                       quadratic_map(a, b) + 2.0 * quadratic_map(a, c)));
    CHECK(is_positive(quadratic_map(a, c)));
}

TEST_CASE("inverse and pseudo-inverse") {
    const Element a = diag({2.0, -4.0});
    CHECK(is_invertible(a));
    CHECK(approx_equal(inverse(a), diag({0.5, -0.25})));
    const Element s = diag({0.0, 2.0, -0.5});
    CHECK(!is_invertible(s));
    CHECK_THROWS_AS((void)inverse(s), std::domain_error);
    CHECK(is_regular(s));
    const Element r = pseudo_inverse(s);
    CHECK(approx_equal(into_algebra(mul(s, r)), carrier(s)));
    CHECK(approx_equal(pseudo_inverse(zero_like(s)), zero_like(s)));
}

TEST_CASE("corner algebra vAv") {
    const Element v = diag({1.0, 1.0, 0.0});
    const CornerAlgebra c(v);
    CHECK(approx_equal(c.unit(), v));
    const Element inside = diag({2.0, 0.5, 0.0});
    const Element outside = diag({2.0, 0.5, 1.0});
    CHECK(c.contains(inside));
    CHECK(!c.contains(outside));
    CHECK(approx_equal(c.project(outside), inside));
    CHECK(approx_equal(c.inverse_in_corner(inside), diag({0.5, 2.0, 0.0})));
    // Not invertible inside the corner: carrier smaller than the focus.
    CHECK_THROWS_AS((void)c.inverse_in_corner(diag({2.0, 0.0, 0.0})),
                    std::domain_error);
    CHECK_THROWS_AS((void)c.inverse_in_corner(outside), std::domain_error);
    CHECK_THROWS_AS(CornerAlgebra(diag({0.5, 0.0, 0.0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(CornerAlgebra(diag({0.0, 0.0, 0.0})),
                    std::invalid_argument);
}

TEST_CASE("corner compression preserves the norm") {
    // A rank-2 focus in a rotated basis; the compressed 2x2 block carries
    // the same order-unit norm as the compressed parent element.
    Rng rng(17);
    const Matrix q = random_orthogonal(4, rng);
    const Element v = Element::matrix(
        (q * Matrix::diag({1.0, 1.0, 0.0, 0.0}) * q.transpose()).symmetrized());
    const Element b = Element::matrix(random_symmetric(4, 33, -2.0, 2.0));
    const Element vbv = quadratic_map(v, b);
    const Matrix block = corner_compress(v, b);
    CHECK(block.dim() == 2);
    const double block_norm =
        order_unit_norm(Element::matrix(block));
    CHECK(block_norm == doctest::Approx(order_unit_norm(vbv)).epsilon(1e-9));
    // Embedding the block back reproduces vbv.
    CHECK(order_unit_norm(corner_embed(v, block) - vbv) < 1e-9);
}

TEST_CASE("calculus works unchanged in the function model") {
    const FieldPtr f = boolean_realize(3);
    const Element a = Element::setfn(f, {-2.0, 0.0, 3.0});
    CHECK(approx_equal(abs_value(a), Element::setfn(f, {2.0, 0.0, 3.0})));
    CHECK(approx_equal(signum(a), Element::setfn(f, {-1.0, 0.0, 1.0})));
    CHECK(approx_equal(pseudo_inverse(a), Element::setfn(f, {-0.5, 0.0, 1.0 / 3.0})));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <synaptica/lattice.hpp>

using namespace synaptica;

namespace {
Element diag(std::vector<double> d) {
    return Element::matrix(Matrix::diag(std::move(d)));
}
std::size_t rank(const Element& p) {
    return static_cast<std::size_t>(p.as_matrix().trace() + 0.5);
}
} // namespace

TEST_CASE("meet and join on trivial pairs") {
    const Element p = diag({1.0, 0.0});
    CHECK(approx_equal(meet(p, p), p));
    CHECK(approx_equal(join(p, p), p));
    CHECK(approx_equal(meet(p, unit_like(p)), p));
    CHECK(approx_equal(join(p, zero_like(p)), p));
    CHECK(approx_equal(ortho(ortho(p)), p));
}

TEST_CASE("skew pair: meet rank 0, join rank 2") {
    const Element p = diag({1.0, 0.0});
    const Element q =
        Element::matrix(Matrix{{0.5, 0.5}, {0.5, 0.5}});
    CHECK(rank(meet(p, q)) == 0);
    CHECK(rank(join(p, q)) == 2);
    CHECK(order_unit_norm(meet(p, q)) < 1e-9);
}

TEST_CASE("orthomodular law on a nested pair") {
    Rng rng(4);
    const Matrix b = random_orthogonal(4, rng);
    auto col_proj = [&](std::size_t count) {
        std::vector<double> d(4, 0.0);
        for (std::size_t i = 0; i < count; ++i) d[i] = 1.0;
        return Element::matrix(
            (b * Matrix::diag(d) * b.transpose()).symmetrized());
    };
    const Element p = col_proj(1), q = col_proj(3);
    REQUIRE(leq(p, q));
    CHECK(approx_equal(join(p, meet(ortho(p), q)), q));
}

TEST_CASE("De Morgan duality") {
    const Element p = Element::matrix(random_projection_matrix(5, 2, 1));
    const Element q = Element::matrix(random_projection_matrix(5, 3, 2));
    CHECK(approx_equal(ortho(join(p, q)), meet(ortho(p), ortho(q))));
    CHECK(approx_equal(ortho(meet(p, q)), join(ortho(p), ortho(q))));
}

TEST_CASE("Sasaki projection identity") {
    const Element p = Element::matrix(random_projection_matrix(5, 3, 5));
    const Element q = Element::matrix(random_projection_matrix(5, 2, 6));
    CHECK(approx_equal(sasaki_projection(p, q), meet(p, join(ortho(p), q))));
    // Sasaki fixes everything below the focus.
    const Element r = meet(p, q);
    CHECK(approx_equal(sasaki_projection(p, r), r));
}

TEST_CASE("orthogonality and compatibility") {
    const Element p = diag({1.0, 0.0, 0.0});
    const Element q = diag({0.0, 1.0, 0.0});
    CHECK(orthogonal(p, q));
    CHECK(compatible(p, q));
    CHECK(approx_equal(join(p, q), p + q));
    const Element skew =
        Element::matrix(Matrix{{0.5, 0.5, 0.0}, {0.5, 0.5, 0.0}, {0.0, 0.0, 0.0}});
    CHECK(!orthogonal(p, skew));
    CHECK(!compatible(p, skew));
    CHECK(compatible_decomposition_holds(p, q));
}

TEST_CASE("non-projection operands are rejected") {
    const Element e = diag({0.5, 0.0});
    const Element p = diag({1.0, 0.0});
    CHECK_THROWS_AS((void)meet(e, p), std::invalid_argument);
    CHECK_THROWS_AS((void)ortho(e), std::invalid_argument);
    CHECK_THROWS_AS((void)compatible(p, e), std::invalid_argument);
}

TEST_CASE("reproject restores idempotence after drift") {
    Matrix m = Matrix::diag({1.0, 0.0, 1.0});
    m(0, 0) = 1.0 + 3e-10; // drift beyond a tenth of the equality tolerance
    const Element q = Element::matrix(m);
    const Element r = reproject(q);
    CHECK(order_unit_norm(into_algebra(mul(r, r)) - r) < 1e-15);
}

TEST_CASE("lattice operations in the function model") {
    const FieldPtr f = boolean_realize(3);
    const Element p = Element::setfn(f, {1.0, 1.0, 0.0});
    const Element q = Element::setfn(f, {0.0, 1.0, 1.0});
    CHECK(approx_equal(meet(p, q), Element::setfn(f, {0.0, 1.0, 0.0})));
    CHECK(approx_equal(join(p, q), Element::setfn(f, {1.0, 1.0, 1.0})));
    CHECK(compatible(p, q));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <synaptica/spectral.hpp>

using namespace synaptica;

namespace {
Element diag(std::vector<double> d) {
    return Element::matrix(Matrix::diag(std::move(d)));
}
std::size_t rank(const Element& p) {
    return static_cast<std::size_t>(p.as_matrix().trace() + 0.5);
}
} // namespace

TEST_CASE("bounds, spectrum, breakpoints of diag(1,2,2,5)") {
    const Element a = diag({1.0, 2.0, 2.0, 5.0});
    const auto b = spectral_bounds(a);
    CHECK(b.lower == doctest::Approx(1.0));
    CHECK(b.upper == doctest::Approx(5.0));
    const auto r = spectral_resolution(a);
    REQUIRE(r.breakpoints.size() == 3);
    CHECK(r.breakpoints[0] == doctest::Approx(1.0));
    CHECK(r.breakpoints[1] == doctest::Approx(2.0));
    CHECK(r.breakpoints[2] == doctest::Approx(5.0));
    CHECK(rank(r.projections_at[0]) == 1);
    CHECK(rank(r.projections_at[1]) == 3);
    CHECK(rank(r.projections_at[2]) == 4);
    CHECK(rank(r.eigenprojections_at[0]) == 1);
    CHECK(rank(r.eigenprojections_at[1]) == 2);
    CHECK(rank(r.eigenprojections_at[2]) == 1);
}

TEST_CASE("zero and scalar elements") {
    const Element z = diag({0.0, 0.0});
    CHECK(spectrum(z) == std::vector<double>{0.0});
    CHECK(rank(carrier(z)) == 0);
    const Element u = unit_like(z);
    const auto b = spectral_bounds(u);
    CHECK(b.lower == b.upper);
    CHECK(approx_equal(resolution_at(u, 1.0), u));
    CHECK(order_unit_norm(resolution_at(u, 0.5)) < 1e-12);
}

TEST_CASE("resolution is right-continuous and monotone") {
    const Element a = diag({1.0, 2.0, 5.0});
    // At lambda the eigenspace is included...
    CHECK(rank(resolution_at(a, 2.0)) == 2);
    // ...and just below it is not.
    CHECK(rank(resolution_at(a, 2.0 - 1e-3)) == 1);
    CHECK(leq(resolution_at(a, 1.5), resolution_at(a, 2.5)));
    // d_lambda detects eigenvalues.
    CHECK(rank(eigenprojection_at(a, 2.0)) == 1);
    CHECK(rank(eigenprojection_at(a, 3.0)) == 0);
}

TEST_CASE("simple decomposition round-trips") {
    const Element a = Element::matrix(random_symmetric(6, 12, -2.0, 2.0));
    const auto dec = simple_decompose(a);
    Element rebuilt = zero_like(a);
    Element total = zero_like(a);
    for (std::size_t i = 0; i < dec.coefficients.size(); ++i) {
        rebuilt = rebuilt + dec.coefficients[i] * dec.projections[i];
        total = total + dec.projections[i];
        if (i > 0) {
            CHECK(dec.coefficients[i - 1] < dec.coefficients[i]);
            CHECK(order_unit_norm(
                      mul(dec.projections[i - 1], dec.projections[i])) < 1e-9);
        }
    }
    CHECK(order_unit_norm(rebuilt - a) < 1e-9 * (1.0 + order_unit_norm(a)));
    CHECK(approx_equal(total, unit_like(a)));
}

TEST_CASE("riemann approximation error is certified by the mesh") {
    const Element a = Element::matrix(random_symmetric(6, 77, -2.0, 2.0));
    const auto b = spectral_bounds(a);
    const double span = b.upper - b.lower;
    for (std::size_t cells : {2, 4, 8}) {
        std::vector<double> part{b.lower - 0.5};
        std::vector<double> tags;
        for (std::size_t i = 1; i <= cells; ++i)
            part.push_back(b.lower +
                           span * static_cast<double>(i) /
                               static_cast<double>(cells));
        for (std::size_t i = 0; i + 1 < part.size(); ++i)
            tags.push_back(0.5 * (part[i] + part[i + 1]));
        tags.front() = std::max(tags.front(), b.lower); // keep the tag sane
        const auto sum = riemann_approx(a, part, tags);
        CHECK(order_unit_norm(a - sum.approximation) <=
              sum.certified_error + 1e-9);
        Element total = zero_like(a);
        for (const auto& u : sum.projections) total = total + u;
        CHECK(approx_equal(total, unit_like(a)));
    }
    CHECK_THROWS_AS((void)riemann_approx(a, {b.lower, b.upper}, {b.lower}),
                    std::invalid_argument);
}

TEST_CASE("ascending approximations increase toward a") {
    const Element a = Element::matrix(random_symmetric(6, 31, -2.0, 2.0));
    const auto b = spectral_bounds(a);
    const double span = b.upper - b.lower;
    const auto chain = ascending_approx(a, 8);
    REQUIRE(chain.size() == 8);
    for (std::size_t k = 0; k < chain.size(); ++k) {
        CHECK(leq(chain[k], a));
        CHECK(in_bicommutant(chain[k], a));
        if (k > 0) CHECK(leq(chain[k - 1], chain[k]));
        const double err = order_unit_norm(a - chain[k]);
        CHECK(err <= span / std::pow(2.0, static_cast<double>(k + 1)) + 1e-9);
    }
}

TEST_CASE("spectral commutation agrees with commutation") {
    const auto fam = random_commuting_family(5, 2, 3, -2.0, 2.0);
    const Element a = Element::matrix(fam[0]);
    const Element b = Element::matrix(fam[1]);
    CHECK(spectrally_commutes(b, a));
    const Element c = Element::matrix(random_symmetric(5, 91, -2.0, 2.0));
    CHECK(spectrally_commutes(c, a) == commutes(c, a));
}

TEST_CASE("spectral ops in the function model are exact") {
    const FieldPtr f = boolean_realize(4);
    const Element a = Element::setfn(f, {0.25, 0.25, 1.0, -0.5});
    const auto dec = simple_decompose(a);
    CHECK(dec.coefficients == std::vector<double>{-0.5, 0.25, 1.0});
    Element rebuilt = zero_like(a);
    for (std::size_t i = 0; i < dec.coefficients.size(); ++i)
        rebuilt = rebuilt + dec.coefficients[i] * dec.projections[i];
    CHECK(order_unit_norm(rebuilt - a) == 0.0);
    const auto chain = ascending_approx(a, 6);
    for (std::size_t k = 1; k < chain.size(); ++k)
        CHECK(leq(chain[k - 1], chain[k]));
}

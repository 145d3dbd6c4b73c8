#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <synaptica/core.hpp>

using namespace synaptica;

TEST_CASE("field_generate closes under complement and union") {
    // Universe {0,1,2}, generator {0}: closure is {∅,{0},{1,2},X}.
    const FieldPtr f = field_generate(3, {0b001});
    CHECK(f->members() == std::vector<std::uint64_t>{0b000, 0b001, 0b110,
                                                     0b111});
    for (std::uint64_t a : f->members()) {
        CHECK(f->contains(f->universe_mask() & ~a));
        for (std::uint64_t b : f->members()) CHECK(f->contains(a | b));
    }
    CHECK(f->atoms() == std::vector<std::uint64_t>{0b001, 0b110});
}

TEST_CASE("boolean_realize is the power set") {
    for (std::size_t k = 1; k <= 6; ++k) {
        const FieldPtr f = boolean_realize(k);
        CHECK(f->members().size() == (std::size_t{1} << k));
        CHECK(f->universe_size() == k);
    }
    CHECK_THROWS_AS((void)boolean_realize(0), std::invalid_argument);
}

TEST_CASE("measurability is enforced") {
    const FieldPtr f = field_generate(3, {0b001});
    CHECK_NOTHROW(SetFn(f, {1.0, 2.0, 2.0}));
    // Distinguishes points 1 and 2, which no field member separates.
    CHECK_THROWS_AS(SetFn(f, {1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("pointwise arithmetic is exact") {
    const FieldPtr f = boolean_realize(3);
    const SetFn a(f, {1.0, -2.0, 0.25});
    const SetFn b(f, {0.5, 4.0, 0.25});
    CHECK(model_equal(model_add(a, b), SetFn(f, {1.5, 2.0, 0.5})));
    CHECK(model_equal(model_mul(a, b), SetFn(f, {0.5, -8.0, 0.0625})));
    CHECK(model_equal(model_scale(a, -2.0), SetFn(f, {-2.0, 4.0, -0.5})));
    CHECK(model_norm(a) == 2.0);
    CHECK(model_is_positive(b));
    CHECK(!model_is_positive(a));
    CHECK(model_leq(a, b) == false);
    CHECK(model_leq(SetFn(f, {0.0, -2.0, 0.25}), a));
}

TEST_CASE("sqrt and carrier are pointwise") {
    const FieldPtr f = boolean_realize(3);
    const SetFn a(f, {0.0, 4.0, 0.25});
    CHECK(model_equal(model_sqrt_positive(a), SetFn(f, {0.0, 2.0, 0.5})));
    CHECK(model_equal(model_carrier(a), SetFn(f, {0.0, 1.0, 1.0})));
    CHECK(model_equal(model_support_reciprocal(a), SetFn(f, {0.0, 0.25, 4.0})));
    CHECK_THROWS_AS((void)model_sqrt_positive(SetFn(f, {-1.0, 0.0, 0.0})),
                    std::domain_error);
}

TEST_CASE("bicommutant = functions of a") {
    const FieldPtr f = boolean_realize(3);
    const SetFn a(f, {1.0, 1.0, 2.0});
    CHECK(model_in_bicommutant(SetFn(f, {5.0, 5.0, 7.0}), a));
    CHECK(!model_in_bicommutant(SetFn(f, {5.0, 6.0, 7.0}), a));
}

TEST_CASE("indicator requires a field member") {
    const FieldPtr f = field_generate(3, {0b001});
    CHECK_NOTHROW((void)indicator(f, 0b110));
    CHECK_THROWS_AS((void)indicator(f, 0b010), std::invalid_argument);
}

TEST_CASE("operands must share a field") {
    const FieldPtr f = field_generate(3, {0b001});
    const FieldPtr g = boolean_realize(3);
    CHECK_THROWS_AS((void)model_add(SetFn(f, {1.0, 0.0, 0.0}),
                                    SetFn(g, {1.0, 0.0, 0.0})),
                    std::invalid_argument);
    // Structurally equal fields are interchangeable.
    const FieldPtr g2 = boolean_realize(3);
    CHECK_NOTHROW((void)model_add(SetFn(g, {1.0, 0.0, 0.0}),
                                  SetFn(g2, {0.0, 1.0, 0.0})));
}

TEST_CASE("random generators respect the field") {
    Rng rng(5);
    const FieldPtr f = random_field(6, rng, 2);
    for (int i = 0; i < 10; ++i) {
        const SetFn a = random_setfn(f, rng, -2.0, 2.0);
        CHECK(a.measurable());
    }
}

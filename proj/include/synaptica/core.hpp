#ifndef SYNAPTICA_CORE_HPP
#define SYNAPTICA_CORE_HPP

#include <concepts>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "synaptica/matrix_model.hpp"
#include "synaptica/setfn_model.hpp"
#include "synaptica/tolerances.hpp"

namespace synaptica {

/// The primitive operation set a model must supply. Everything above the
/// models (calculus, lattice, spectral, audit) is written against this
/// contract only.
template <class T>
concept ModelContract = requires(const T& a, const T& b, double s) {
    { model_add(a, b) } -> std::same_as<T>;
    { model_scale(a, s) } -> std::same_as<T>;
    { model_mul(a, b) } -> std::same_as<T>;
    { model_is_positive(a) } -> std::same_as<bool>;
    { model_unit_like(a) } -> std::same_as<T>;
    { model_zero_like(a) } -> std::same_as<T>;
    { model_sqrt_positive(a) } -> std::same_as<T>;
    { model_carrier(a) } -> std::same_as<T>;
    { model_norm(a) } -> std::same_as<double>;
    { model_equal(a, b) } -> std::same_as<bool>;
    { model_same_instance(a, b) } -> std::same_as<bool>;
    { model_raw_spectrum(a) } -> std::same_as<std::vector<double>>;
    { model_support_reciprocal(a) } -> std::same_as<T>;
    { model_in_bicommutant(b, a) } -> std::same_as<bool>;
};

static_assert(ModelContract<MatrixElement>);
static_assert(ModelContract<SetFn>);

struct ModelMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A member of a concrete synaptic-algebra model. Immutable value; every
/// operation is pure, so elements may be freely shared between threads.
class Element {
public:
    static Element matrix(Matrix m) {
        MatrixElement p(std::move(m));
        if (!p.in_algebra())
            throw std::invalid_argument("Element: matrix is not symmetric");
        return Element(std::move(p));
    }

    static Element setfn(FieldPtr field, std::vector<double> values) {
        return Element(SetFn(std::move(field), std::move(values)));
    }

    static Element wrap(MatrixElement p) { return Element(std::move(p)); }
    static Element wrap(SetFn p) { return Element(std::move(p)); }

    bool is_matrix() const { return std::holds_alternative<MatrixElement>(payload_); }
    bool is_setfn() const { return std::holds_alternative<SetFn>(payload_); }
    std::string model_tag() const { return is_matrix() ? "matrix" : "setfn"; }

    const Matrix& as_matrix() const {
        if (!is_matrix()) throw std::logic_error("Element: not a matrix element");
        return std::get<MatrixElement>(payload_).m;
    }
    const SetFn& as_setfn() const {
        if (!is_setfn()) throw std::logic_error("Element: not a function element");
        return std::get<SetFn>(payload_);
    }

    template <class F>
    auto visit(F&& f) const {
        return std::visit(std::forward<F>(f), payload_);
    }

    template <class F>
    friend auto visit2(F&& f, const Element& a, const Element& b) {
        if (a.payload_.index() != b.payload_.index())
            throw ModelMismatch("elements belong to different models");
        return std::visit(
            [&]<class T>(const T& x) {
                if constexpr (std::same_as<T, MatrixElement>)
                    return f(x, std::get<MatrixElement>(b.payload_));
                else
                    return f(x, std::get<SetFn>(b.payload_));
            },
            a.payload_);
    }

private:
    explicit Element(MatrixElement p) : payload_(std::move(p)) {}
    explicit Element(SetFn p) : payload_(std::move(p)) {}

    std::variant<MatrixElement, SetFn> payload_;
};

inline void check_same_model(const Element& a, const Element& b) {
    const bool ok = visit2(
        [](const auto& x, const auto& y) { return model_same_instance(x, y); },
        a, b);
    if (!ok) throw ModelMismatch("elements belong to different model instances");
}

// --- vector-space operations ---

inline Element operator+(const Element& a, const Element& b) {
    check_same_model(a, b);
    return visit2([](const auto& x, const auto& y) {
        return Element::wrap(model_add(x, y));
    }, a, b);
}

inline Element operator*(double s, const Element& a) {
    return a.visit([s](const auto& x) { return Element::wrap(model_scale(x, s)); });
}
inline Element operator*(const Element& a, double s) { return s * a; }
inline Element operator-(const Element& a) { return -1.0 * a; }
inline Element operator-(const Element& a, const Element& b) { return a + (-b); }

/// Product in the enveloping algebra. For the matrix model the result can
/// fall outside A; it is still representable (norm and residual tests work),
/// but order-theoretic operations on it will reject asymmetry.
inline Element mul(const Element& a, const Element& b) {
    check_same_model(a, b);
    return visit2([](const auto& x, const auto& y) {
        return Element::wrap(model_mul(x, y));
    }, a, b);
}

inline Element unit_like(const Element& a) {
    return a.visit([](const auto& x) { return Element::wrap(model_unit_like(x)); });
}
inline Element zero_like(const Element& a) {
    return a.visit([](const auto& x) { return Element::wrap(model_zero_like(x)); });
}

/// Scalars are identified with multiples of the unit at the API boundary.
inline Element scalar_like(const Element& a, double s) {
    return s * unit_like(a);
}
inline Element operator+(const Element& a, double s) { return a + scalar_like(a, s); }
inline Element operator+(double s, const Element& a) { return a + s; }
inline Element operator-(const Element& a, double s) { return a + (-s); }
inline Element operator-(double s, const Element& a) { return scalar_like(a, s) - a; }

// --- order, norm, commutation ---

inline double order_unit_norm(const Element& a) {
    return a.visit([](const auto& x) { return model_norm(x); });
}

inline bool is_positive(const Element& a) {
    return a.visit([](const auto& x) { return model_is_positive(x); });
}

inline bool leq(const Element& a, const Element& b) {
    check_same_model(a, b);
    return is_positive(b - a);
}
inline bool leq(double s, const Element& b) { return leq(scalar_like(b, s), b); }
inline bool leq(const Element& a, double s) { return leq(a, scalar_like(a, s)); }

inline bool approx_equal(const Element& a, const Element& b) {
    check_same_model(a, b);
    return visit2([](const auto& x, const auto& y) { return model_equal(x, y); },
                  a, b);
}

inline Element jordan_product(const Element& a, const Element& b) {
    check_same_model(a, b);
    return 0.5 * (mul(a, b) + mul(b, a));
}

inline bool commutes(const Element& a, const Element& b) {
    check_same_model(a, b);
    const double bound =
        tol::comm() * (1.0 + order_unit_norm(a) * order_unit_norm(b));
    return order_unit_norm(mul(a, b) - mul(b, a)) <= bound;
}

inline bool in_bicommutant(const Element& b, const Element& a) {
    check_same_model(a, b);
    return visit2(
        [](const auto& x, const auto& y) { return model_in_bicommutant(x, y); },
        b, a);
}

inline Element sqrt_psd(const Element& a) {
    return a.visit([](const auto& x) { return Element::wrap(model_sqrt_positive(x)); });
}

inline Element carrier(const Element& a) {
    return a.visit([](const auto& x) { return Element::wrap(model_carrier(x)); });
}

inline std::vector<double> raw_spectrum(const Element& a) {
    return a.visit([](const auto& x) { return model_raw_spectrum(x); });
}

inline Element support_reciprocal(const Element& a) {
    return a.visit(
        [](const auto& x) { return Element::wrap(model_support_reciprocal(x)); });
}

/// Snap a raw enveloping product back into A. Matrix payloads that are
/// symmetric only up to roundoff (e.g. aba computed by two multiplications)
/// are symmetrized; a genuinely asymmetric payload is rejected.
inline Element into_algebra(const Element& a) {
    if (!a.is_matrix()) return a;
    const Matrix& m = a.as_matrix();
    const double bound = 1e-8 * (1.0 + m.max_abs());
    if (m.asymmetry() > bound)
        throw std::invalid_argument("into_algebra: payload is not in A");
    return Element::matrix(m.symmetrized());
}

inline bool is_zero(const Element& a) {
    return order_unit_norm(a) <= tol::eq(0.0);
}

inline bool is_projection(const Element& p) {
    return approx_equal(mul(p, p), p);
}

inline bool is_effect(const Element& e) {
    return is_positive(e) && leq(e, 1.0);
}

} // namespace synaptica

#endif

#ifndef SYNAPTICA_CALCULUS_HPP
#define SYNAPTICA_CALCULUS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

#include "synaptica/core.hpp"

namespace synaptica {

/// |a| := (a^2)^{1/2}.
inline Element abs_value(const Element& a) {
    return sqrt_psd(into_algebra(mul(a, a)));
}

/// a+ := (|a|+a)/2.
inline Element pos_part(const Element& a) {
    return 0.5 * (abs_value(a) + a);
}

/// a- := (|a|-a)/2.
inline Element neg_part(const Element& a) {
    return 0.5 * (abs_value(a) - a);
}

/// sgn(a) := (a+)° - (a-)°.
inline Element signum(const Element& a) {
    const Element p = carrier(pos_part(a));
    if (faults::active("calculus.signum_drop_negative")) return p;
    return p - carrier(neg_part(a));
}

/// Polar decomposition a = sgn(a)|a| = |a|sgn(a), with sgn(a)^2 = a°.
struct PolarForm {
    Element signum;
    Element absolute;
    Element original;
};

inline PolarForm polar(const Element& a) {
    return PolarForm{signum(a), abs_value(a), a};
}

/// Quadratic map J_a(b) := aba; linear and order preserving in b. For a
/// projection focus this is the compression with that focus.
inline Element quadratic_map(const Element& a, const Element& b) {
    check_same_model(a, b);
    return into_algebra(mul(mul(a, b), a));
}

/// Sasaki map phi_a(b) := (aba)°.
inline Element sasaki_map(const Element& a, const Element& b) {
    return carrier(quadratic_map(a, b));
}

inline bool is_invertible(const Element& a) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (double v : raw_spectrum(a)) {
        lo = std::min(lo, std::abs(v));
        hi = std::max(hi, std::abs(v));
    }
    return lo > tol::rank(hi);
}

inline Element inverse(const Element& a) {
    if (!is_invertible(a))
        throw std::domain_error("inverse: element is not invertible");
    return support_reciprocal(a);
}

/// Regularity decision by the finite-spectrum criterion: every eigenvalue is
/// either below the rank cut (treated as zero) or safely above it. In the
/// two finite models every element is regular, matching the theory of
/// simple elements.
inline bool is_regular(const Element& a) {
    // With the rank cut itself defining which spectral values count as
    // nonzero, every well-formed element of a finite model is regular,
    // matching the theory of simple elements. The check guards NaN payloads.
    for (double v : raw_spectrum(a))
        if (std::isnan(v)) return false;
    return true;
}

/// Pseudo-inverse: the inverse of a inside the corner algebra a°Aa°;
/// pseudo_inverse(0) = 0. Spectral values below the rank cut are treated as
/// zero, consistently with the carrier.
inline Element pseudo_inverse(const Element& a) {
    if (!is_regular(a))
        throw std::domain_error("pseudo_inverse: element is not regular");
    return support_reciprocal(a);
}

/// The corner algebra vAv: a synaptic algebra with unit v, represented by
/// the focus projection plus delegation to the parent model.
class CornerAlgebra {
public:
    explicit CornerAlgebra(Element focus) : v_(std::move(focus)) {
        if (!is_projection(v_))
            throw std::invalid_argument("corner: focus is not a projection");
        if (is_zero(v_))
            throw std::invalid_argument("corner: focus must be nonzero");
    }

    const Element& unit() const { return v_; }

    /// Membership: b = vb = bv.
    bool contains(const Element& b) const {
        return approx_equal(into_algebra(mul(v_, b)), b) &&
               approx_equal(into_algebra(mul(b, v_)), b);
    }

    /// Project an arbitrary parent element into the corner: b -> vbv.
    Element project(const Element& b) const { return quadratic_map(v_, b); }

    /// Inverse of b inside vAv; exists iff the carrier of b equals v and b
    /// is bounded away from zero on it.
    Element inverse_in_corner(const Element& b) const {
        if (!contains(b))
            throw std::domain_error("corner inverse: element not in vAv");
        if (!approx_equal(carrier(b), v_))
            throw std::domain_error("corner inverse: element not invertible in vAv");
        return pseudo_inverse(b);
    }

private:
    Element v_;
};

inline CornerAlgebra corner(const Element& v) { return CornerAlgebra(v); }

/// Explicit block-compression view for the matrix model: an orthonormal
/// basis of range(v) as columns, and the compressed r x r block of b.
inline std::vector<std::vector<double>> corner_basis(const Element& v) {
    const auto e = eig(v.as_matrix());
    std::vector<std::vector<double>> cols;
    const std::size_t n = v.as_matrix().dim();
    for (std::size_t k = 0; k < n; ++k) {
        if (e.values[k] <= 0.5) continue;
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = e.vectors(i, k);
        cols.push_back(std::move(col));
    }
    return cols;
}

inline Matrix corner_compress(const Element& v, const Element& b) {
    const auto w = corner_basis(v);
    if (w.empty()) throw std::domain_error("corner_compress: zero focus");
    const Matrix& bm = b.as_matrix();
    const std::size_t r = w.size(), n = bm.dim();
    Matrix c(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            double s = 0.0;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y)
                    s += w[i][x] * bm(x, y) * w[j][y];
            c(i, j) = s;
        }
    return c.symmetrized();
}

inline Element corner_embed(const Element& v, const Matrix& block) {
    const auto w = corner_basis(v);
    if (block.dim() != w.size())
        throw std::invalid_argument("corner_embed: block size != corner rank");
    const std::size_t n = v.as_matrix().dim(), r = w.size();
    Matrix m(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            double s = 0.0;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    s += w[i][x] * block(i, j) * w[j][y];
            m(x, y) = s;
        }
    return Element::matrix(m.symmetrized());
}

} // namespace synaptica

#endif

#ifndef SYNAPTICA_MATRIX_MODEL_HPP
#define SYNAPTICA_MATRIX_MODEL_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "synaptica/eig.hpp"
#include "synaptica/faults.hpp"
#include "synaptica/matrix.hpp"
#include "synaptica/rng.hpp"
#include "synaptica/tolerances.hpp"

namespace synaptica {

/// Element payload of the prototype model: real symmetric matrices ordered
/// by the positive-semidefinite cone. Enveloping products (which may be
/// momentarily non-symmetric) are carried in the same type; order-theoretic
/// operations insist on symmetry.
struct MatrixElement {
    Matrix m;

    explicit MatrixElement(Matrix mat) : m(std::move(mat)) {}

    bool in_algebra() const {
        return m.is_symmetric(tol::sym() * (1.0 + m.max_abs()));
    }
};

inline void check_symmetric(const MatrixElement& a, const char* what) {
    if (!a.in_algebra())
        throw std::invalid_argument(std::string(what) +
                                    ": matrix is not symmetric");
}

inline MatrixElement model_add(const MatrixElement& a, const MatrixElement& b) {
    return MatrixElement(a.m + b.m);
}

inline MatrixElement model_scale(const MatrixElement& a, double s) {
    return MatrixElement(a.m * s);
}

/// Product in the enveloping algebra. The result need not lie in A.
inline MatrixElement model_mul(const MatrixElement& a, const MatrixElement& b) {
    return MatrixElement(a.m * b.m);
}

inline MatrixElement model_unit_like(const MatrixElement& a) {
    return MatrixElement(Matrix::identity(a.m.dim()));
}

inline MatrixElement model_zero_like(const MatrixElement& a) {
    return MatrixElement(Matrix(a.m.dim()));
}

/// Order-unit norm: spectral radius for symmetric input; for a raw
/// enveloping product the operator 2-norm (largest singular value), which
/// agrees with the spectral radius on A.
inline double model_norm(const MatrixElement& a) {
    if (faults::active("core.norm_frobenius")) return a.m.frobenius();
    if (a.m.dim() == 1) return std::abs(a.m(0, 0));
    if (a.in_algebra()) {
        const auto e = eig(a.m);
        double r = 0.0;
        for (double v : e.values) r = std::max(r, std::abs(v));
        return r;
    }
    const auto e = eig((a.m.transpose() * a.m).symmetrized());
    return std::sqrt(std::max(0.0, e.values.back()));
}

inline bool model_is_positive(const MatrixElement& a) {
    check_symmetric(a, "order test");
    const double norm = model_norm(a);
    if (faults::active("core.leq_trace"))
        return a.m.trace() >= -tol::psd(norm);
    const auto e = eig(a.m);
    return e.values.front() >= -tol::psd(norm);
}

inline bool model_equal(const MatrixElement& a, const MatrixElement& b) {
    const MatrixElement d(a.m - b.m);
    const double ref = std::max(model_norm(a), model_norm(b));
    return model_norm(d) <= tol::eq(ref);
}

inline bool model_same_instance(const MatrixElement& a, const MatrixElement& b) {
    return a.m.dim() == b.m.dim();
}

inline std::vector<double> model_raw_spectrum(const MatrixElement& a) {
    check_symmetric(a, "spectrum");
    return eig(a.m).values;
}

/// Unique positive square root of a positive element, computed in the
/// eigenbasis with sub-tolerance negatives clamped to zero.
inline MatrixElement model_sqrt_positive(const MatrixElement& a) {
    check_symmetric(a, "sqrt");
    const auto e = eig(a.m);
    double norm = 0.0;
    for (double v : e.values) norm = std::max(norm, std::abs(v));
    if (e.values.front() < -tol::psd(norm))
        throw std::domain_error("sqrt: element is not order-positive");
    if (faults::active("sqrt.no_clamp"))
        return MatrixElement(e.apply([](double v) { return std::sqrt(v); }));
    // Eigenvalues inside the solver-noise band are numerically zero; the
    // square root would amplify them to sqrt(eps)-sized junk well above
    // the rank cut, so clamp the whole band, not just the negatives. The
    // band must stay far below psd_tol or genuine squared spectral values
    // (|lambda|^2 for small |lambda|) get swallowed.
    const double cut = tol::sqrt_clamp(norm);
    return MatrixElement(
        e.apply([cut](double v) { return v <= cut ? 0.0 : std::sqrt(v); }));
}

/// Carrier projection: the orthogonal projection onto range(a). Eigenvalues
/// below the rank cut are treated as zero.
inline MatrixElement model_carrier(const MatrixElement& a) {
    check_symmetric(a, "carrier");
    const auto e = eig(a.m);
    double norm = 0.0;
    for (double v : e.values) norm = std::max(norm, std::abs(v));
    // An element below the equality tolerance is the zero element, and its
    // carrier is 0. Without this guard, solver noise in a positive part
    // that should vanish exactly can straddle the rank-cut floor.
    if (!faults::active("carrier.zero_rank_tol") && norm <= tol::eq(0.0))
        return model_zero_like(a);
    const double cut =
        faults::active("carrier.zero_rank_tol") ? 0.0 : tol::rank(norm);
    return MatrixElement(
        e.apply([cut](double v) { return std::abs(v) > cut ? 1.0 : 0.0; }));
}

/// Spectral reciprocal on the support: 1/lambda above the rank cut, 0 below.
inline MatrixElement model_support_reciprocal(const MatrixElement& a) {
    check_symmetric(a, "support reciprocal");
    const auto e = eig(a.m);
    double norm = 0.0;
    for (double v : e.values) norm = std::max(norm, std::abs(v));
    const double cut = tol::rank(norm);
    return MatrixElement(e.apply(
        [cut](double v) { return std::abs(v) > cut ? 1.0 / v : 0.0; }));
}

/// Eigenvalue clusters of a symmetric matrix: (mean value, projection) per
/// group of eigenvalues closer than the cluster tolerance. The projections
/// are orthogonal and sum to the identity.
struct SpectralCluster {
    double value;
    Matrix projection;
    std::size_t multiplicity;
};

inline std::vector<SpectralCluster> spectral_clusters(const Matrix& a) {
    const auto e = eig(a);
    const std::size_t n = a.dim();
    double norm = 0.0;
    for (double v : e.values) norm = std::max(norm, std::abs(v));
    const double gap = tol::cluster(norm);

    std::vector<SpectralCluster> out;
    std::size_t k = 0;
    while (k < n) {
        std::size_t end = k + 1;
        while (end < n && e.values[end] - e.values[end - 1] < gap) ++end;
        double mean = 0.0;
        Matrix proj(n);
        for (std::size_t c = k; c < end; ++c) {
            mean += e.values[c];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    proj(i, j) += e.vectors(i, c) * e.vectors(j, c);
        }
        mean /= static_cast<double>(end - k);
        out.push_back({mean, proj.symmetrized(), end - k});
        k = end;
    }
    return out;
}

/// Bicommutant membership: inside the symmetric matrices, CC(a) is exactly
/// the span of the eigenprojections of a, so b is in CC(a) iff b is a scalar
/// on each eigenspace cluster of a.
inline bool model_in_bicommutant(const MatrixElement& b, const MatrixElement& a) {
    check_symmetric(b, "bicommutant");
    check_symmetric(a, "bicommutant");
    Matrix approx(a.m.dim());
    for (const auto& c : spectral_clusters(a.m)) {
        const double mu =
            (c.projection * b.m).trace() / static_cast<double>(c.multiplicity);
        approx += c.projection * mu;
    }
    const double bound = 1e-7 * (1.0 + model_norm(b));
    return model_norm(MatrixElement(b.m - approx)) <= bound;
}

// --- seed-deterministic generators (audit plumbing) ---

/// Random orthogonal matrix: modified Gram-Schmidt on a uniform random
/// matrix, deterministic for a fixed stream.
inline Matrix random_orthogonal(std::size_t dim, Rng& rng) {
    while (true) {
        Matrix q(dim);
        for (auto& v : q.entries()) v = rng.uniform(-1.0, 1.0);
        bool ok = true;
        for (std::size_t j = 0; j < dim && ok; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                double dot = 0.0;
                for (std::size_t i = 0; i < dim; ++i) dot += q(i, j) * q(i, k);
                for (std::size_t i = 0; i < dim; ++i) q(i, j) -= dot * q(i, k);
            }
            double len = 0.0;
            for (std::size_t i = 0; i < dim; ++i) len += q(i, j) * q(i, j);
            len = std::sqrt(len);
            if (len < 1e-8) {
                ok = false;
                break;
            }
            for (std::size_t i = 0; i < dim; ++i) q(i, j) /= len;
        }
        if (ok) return q;
    }
}

/// Random symmetric matrix with spectrum drawn uniformly from [lo, hi] in a
/// random orthonormal basis. Deterministic for fixed (dim, seed, range).
inline Matrix random_symmetric(std::size_t dim, std::uint64_t seed,
                               double lo, double hi) {
    if (dim == 0) throw std::invalid_argument("random_symmetric: dim >= 1");
    Rng rng(seed);
    const Matrix q = random_orthogonal(dim, rng);
    std::vector<double> d(dim);
    for (auto& v : d) v = rng.uniform(lo, hi);
    return (q * Matrix::diag(d) * q.transpose()).symmetrized();
}

inline Matrix random_projection_matrix(std::size_t dim, std::size_t rank,
                                       std::uint64_t seed) {
    if (dim == 0) throw std::invalid_argument("random_projection: dim >= 1");
    if (rank > dim) throw std::invalid_argument("random_projection: rank > dim");
    Rng rng(seed);
    const Matrix q = random_orthogonal(dim, rng);
    std::vector<double> d(dim, 0.0);
    for (std::size_t i = 0; i < rank; ++i) d[i] = 1.0;
    return (q * Matrix::diag(d) * q.transpose()).symmetrized();
}

/// Pairwise commuting family: simultaneous diagonals in one random basis.
inline std::vector<Matrix> random_commuting_family(std::size_t dim,
                                                   std::size_t count,
                                                   std::uint64_t seed,
                                                   double lo = -1.0,
                                                   double hi = 1.0) {
    if (dim == 0) throw std::invalid_argument("random_commuting_family: dim >= 1");
    Rng rng(seed);
    const Matrix q = random_orthogonal(dim, rng);
    std::vector<Matrix> out;
    for (std::size_t c = 0; c < count; ++c) {
        std::vector<double> d(dim);
        for (auto& v : d) v = rng.uniform(lo, hi);
        out.push_back((q * Matrix::diag(d) * q.transpose()).symmetrized());
    }
    return out;
}

} // namespace synaptica

#endif

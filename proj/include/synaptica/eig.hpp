#ifndef SYNAPTICA_EIG_HPP
#define SYNAPTICA_EIG_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "synaptica/matrix.hpp"
#include "synaptica/tolerances.hpp"

namespace synaptica {

/// Eigendecomposition of a real symmetric matrix: a = Q diag(values) Q^T
/// with ascending eigenvalues and orthonormal eigenvector columns.
struct EigenDecomposition {
    std::vector<double> values; // ascending
    Matrix vectors;             // columns are eigenvectors

    Matrix reconstruct() const {
        const std::size_t n = values.size();
        Matrix r(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    s += vectors(i, k) * values[k] * vectors(j, k);
                r(i, j) = s;
            }
        return r;
    }

    /// Q f(diag) Q^T for a scalar map applied to the eigenvalues.
    template <class F>
    Matrix apply(F&& f) const {
        const std::size_t n = values.size();
        Matrix r(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double fk = f(values[k]);
            if (fk == 0.0) continue;
            for (std::size_t i = 0; i < n; ++i) {
                const double qik = vectors(i, k);
                if (qik == 0.0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    r(i, j) += fk * qik * vectors(j, k);
            }
        }
        return r.symmetrized();
    }
};

/// Symmetric eigensolver: cyclic-by-row Jacobi sweeps until the off-diagonal
/// max drops to machine precision relative to the input scale, then a stable
/// ascending sort. Deterministic for fixed input. O(n^3) per sweep, fine for
/// dim <= 64.
inline EigenDecomposition eig(const Matrix& a) {
    const std::size_t n = a.dim();
    if (!a.is_symmetric(tol::sym() * (1.0 + a.max_abs())))
        throw std::invalid_argument("eig: matrix is not symmetric");

    Matrix d = a.symmetrized();
    Matrix q = Matrix::identity(n);
    // Converge the off-diagonal down to machine precision: derived
    // quantities (positive parts, carriers) sit against a 1e-14 rank-cut
    // floor, so a looser stop would leak solver noise past that cut.
    const double scale = 1.0 + d.max_abs();
    const double stop = 5e-16 * scale;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                off = std::max(off, std::abs(d(i, j)));
        if (off <= stop) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t r = p + 1; r < n; ++r) {
                const double apq = d(p, r);
                if (apq == 0.0) continue;
                const double app = d(p, p), aqq = d(r, r);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0)
                    ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                    : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double dkp = d(k, p), dkq = d(k, r);
                    d(k, p) = c * dkp - s * dkq;
                    d(k, r) = s * dkp + c * dkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double dpk = d(p, k), dqk = d(r, k);
                    d(p, k) = c * dpk - s * dqk;
                    d(r, k) = s * dpk + c * dqk;
                }
                d(p, r) = 0.0;
                d(r, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double qkp = q(k, p), qkq = q(k, r);
                    q(k, p) = c * qkp - s * qkq;
                    q(k, r) = s * qkp + c * qkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return d(i, i) < d(j, j); });

    EigenDecomposition e;
    e.values.resize(n);
    e.vectors = Matrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        e.values[k] = d(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i)
            e.vectors(i, k) = q(i, order[k]);
    }
    return e;
}

} // namespace synaptica

#endif

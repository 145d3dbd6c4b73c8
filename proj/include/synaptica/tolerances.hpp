#ifndef SYNAPTICA_TOLERANCES_HPP
#define SYNAPTICA_TOLERANCES_HPP

#include <algorithm>
#include <cstdlib>

namespace synaptica::tol {

// Global multiplier for all tolerances (set from SYNAPTICA_TOL_SCALE by the
// CLI; never touched by library code). Audit runs keep it at 1 unless
// explicitly allowed.
inline double& scale() {
    static double s = 1.0;
    return s;
}

// Tolerance hierarchy: one decade of slack per composed operation over a
// 1e-12 eigensolver.
inline double sym() { return 1e-10 * scale(); }
inline double comm() { return 1e-9 * scale(); }
inline double psd(double norm) { return 1e-9 * (1.0 + norm) * scale(); }
inline double eq(double norm) { return 1e-9 * (1.0 + norm) * scale(); }
inline double rank(double norm) {
    return std::max(1e-8 * norm * scale(), 1e-14);
}
// Clamp band for eigenvalues entering a square root: wide enough to absorb
// eigensolver noise on a positive input (~1e-13 * norm), narrow enough not
// to swallow genuine small spectral values (|lambda| >= ~1e-6 survive).
inline double sqrt_clamp(double norm) { return 1e-12 * (1.0 + norm) * scale(); }
inline double cluster(double norm) { return 1e-7 * (1.0 + norm) * scale(); }

} // namespace synaptica::tol

#endif

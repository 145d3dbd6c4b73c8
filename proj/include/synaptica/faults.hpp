#ifndef SYNAPTICA_FAULTS_HPP
#define SYNAPTICA_FAULTS_HPP

#include <array>
#include <string>
#include <string_view>

namespace synaptica::faults {

// Seeded faults used to prove the audit laws are not vacuous. Each id names
// a concrete, plausible implementation mistake; injecting it must make at
// least one audit law fail. Injection is process-global and off by default.
inline constexpr std::array<std::string_view, 10> known = {
    "sqrt.no_clamp",               // sqrt of slightly negative eigenvalues
    "carrier.zero_rank_tol",       // carrier counts noise eigenvalues as rank
    "lattice.meet_product",        // meet(p,q) = pq unconditionally
    "calculus.signum_drop_negative", // sgn(a) = (a+)° only
    "core.norm_frobenius",         // Frobenius norm instead of order-unit norm
    "spectral.resolution_eigen",   // p_lambda = 1-(a-lambda)° instead of the a+ form
    "lattice.join_sum",            // join(p,q) = p+q unconditionally
    "spectral.riemann_cumulative", // u_i = p_{lambda_i} instead of differences
    "core.leq_trace",              // order test via trace sign
    "setfn.field_skip_complement", // field closure forgets complements
};

inline std::string& slot() {
    static std::string s;
    return s;
}

inline bool is_known(std::string_view id) {
    for (auto k : known)
        if (k == id) return true;
    return false;
}

inline void inject(std::string_view id) { slot() = std::string(id); }
inline void clear() { slot().clear(); }
inline bool active(std::string_view id) { return slot() == id; }

} // namespace synaptica::faults

#endif

#ifndef SYNAPTICA_LATTICE_HPP
#define SYNAPTICA_LATTICE_HPP

#include <stdexcept>

#include "synaptica/calculus.hpp"
#include "synaptica/core.hpp"

namespace synaptica {

inline void check_projection(const Element& p, const char* what) {
    if (!is_projection(p))
        throw std::invalid_argument(std::string(what) +
                                    ": operand is not a projection");
}

/// Projections emerging from carrier chains can drift off idempotence by a
/// few ulps; one Newton step q <- 3q^2 - 2q^3 restores it when the drift
/// exceeds a tenth of the equality tolerance.
inline Element reproject(const Element& q) {
    const Element q2 = into_algebra(mul(q, q));
    if (order_unit_norm(q2 - q) <= tol::eq(1.0) / 10.0) return q;
    const Element q3 = into_algebra(mul(q2, q));
    return 3.0 * q2 - 2.0 * q3;
}

/// Orthocomplement p^perp := 1 - p.
inline Element ortho(const Element& p) {
    check_projection(p, "ortho");
    return unit_like(p) - p;
}

/// Meet by the Sasaki construction: p AND q = p - phi_p(q^perp).
inline Element meet(const Element& p, const Element& q) {
    check_same_model(p, q);
    check_projection(p, "meet");
    check_projection(q, "meet");
    if (faults::active("lattice.meet_product")) {
        const Element pq = mul(p, q);
        if (pq.is_matrix()) return Element::matrix(pq.as_matrix().symmetrized());
        return pq;
    }
    return reproject(p - sasaki_map(p, ortho(q)));
}

/// Join by De Morgan duality: p OR q = (p^perp AND q^perp)^perp.
inline Element join(const Element& p, const Element& q) {
    if (faults::active("lattice.join_sum")) return p + q;
    return ortho(meet(ortho(p), ortho(q)));
}

inline bool orthogonal(const Element& p, const Element& q) {
    check_projection(p, "orthogonal");
    check_projection(q, "orthogonal");
    return order_unit_norm(mul(p, q)) <=
           tol::eq(order_unit_norm(p) * order_unit_norm(q));
}

/// Sasaki projection restricted to P, with the lattice identity
/// phi_p(q) = p AND (p^perp OR q) available as a cross-check.
inline Element sasaki_projection(const Element& p, const Element& q) {
    check_projection(p, "sasaki");
    check_projection(q, "sasaki");
    return sasaki_map(p, q);
}

inline bool compatible_decomposition_holds(const Element& p, const Element& q) {
    return approx_equal(p, join(meet(p, q), meet(p, ortho(q))));
}

/// Compatibility in the OML sense; equals commutation in a synaptic algebra.
inline bool compatible(const Element& p, const Element& q) {
    check_projection(p, "compatible");
    check_projection(q, "compatible");
    return commutes(p, q);
}

} // namespace synaptica

#endif

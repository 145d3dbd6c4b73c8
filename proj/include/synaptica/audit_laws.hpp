#ifndef SYNAPTICA_AUDIT_LAWS_HPP
#define SYNAPTICA_AUDIT_LAWS_HPP

// Law registry for the audit harness. Each law draws a raw random payload,
// performs its own constructions from it, and reports a normalized residual;
// identity laws normalize by (1 + natural scale), order/membership claims are
// encoded as 0/1 booleans. On the exact function model every registered law
// evaluates to residual exactly 0.

namespace synaptica::audit {

namespace laws_detail {

inline Element square(const Element& a) { return into_algebra(mul(a, a)); }

inline double norm(const Element& a) { return order_unit_norm(a); }

/// Positive element orthogonal to a: J_{1-a°}(c^2).
inline Element orthogonal_positive(const Element& a, const Element& c) {
    return quadratic_map(unit_like(a) - carrier(a), square(c));
}

} // namespace laws_detail

inline std::vector<Law> law_registry() {
    using laws_detail::norm;
    using laws_detail::orthogonal_positive;
    using laws_detail::square;
    using P = std::vector<Element>;

    std::vector<Law> L;
    auto add = [&](Law l) { L.push_back(std::move(l)); };

    // ---------------------------------------------------------------- SA1
    add({"SA1", "order-unit space: 1 is an order unit and ||.|| is its norm",
         1e-7, "e",
         [](const P& x) {
             const Element& a = x[0];
             const double n = norm(a);
             return worst({
                 ok(leq(a, n) && leq(-n, a)),
                 ok(leq(a, std::ceil(n) + 1.0)),
                 std::abs(norm(unit_like(a)) - 1.0),
                 std::abs(norm(2.0 * a) - 2.0 * n) / (1.0 + n),
                 ok(norm(a + unit_like(a)) <= n + 1.0 + 1e-12 * (1.0 + n)),
             });
         }});

    // ---------------------------------------------------------------- SA2
    add({"SA2", "product of commuting positives is positive",
         1e-7, "+c",
         [](const P& x) {
             return worst({ok(commutes(x[0], x[1])),
                           ok(is_positive(into_algebra(mul(x[0], x[1]))))});
         },
         false, false,
         [](Gen& g, Rng& rng) {
             auto [a, b] = g.commuting(rng, 0.0, 2.0);
             return P{a, b};
         }});

    // ---------------------------------------------------------------- SA3
    add({"SA3", "squares are positive", 1e-7, "e", [](const P& x) {
             return ok(is_positive(square(x[0])));
         }});

    // ---------------------------------------------------------------- SA4
    add({"SA4", "compressions preserve positivity: b >= 0 => aba >= 0",
         1e-7, "e+", [](const P& x) {
             return ok(is_positive(quadratic_map(x[0], x[1])));
         }});

    // ---------------------------------------------------------------- SA5
    add({"SA5", "b >= 0 and aba = 0 imply ab = 0", 1e-7, "ee",
         [](const P& x) {
             const Element& a = x[0];
             const Element b = orthogonal_positive(a, x[1]);
             const double scale = norm(a) * (1.0 + norm(b));
             return worst({resid(quadratic_map(a, b), scale),
                           resid(mul(a, b), scale)});
         }});

    // ---------------------------------------------------------------- SA6
    add({"SA6", "positive square root exists in the bicommutant",
         1e-7, "+", [](const P& x) {
             const Element& a = x[0];
             const Element r = sqrt_psd(a);
             return worst({resid(square(r) - a, norm(a)),
                           ok(is_positive(r)),
                           ok(in_bicommutant(r, a))});
         }});

    // ---------------------------------------------------------------- SA7
    add({"SA7", "carrier projection: ab = 0 iff a°b = 0, and a a° = a",
         1e-7, "ee", [](const P& x) {
             const Element& a = x[0];
             const Element p = carrier(a);
             const Element b = orthogonal_positive(a, x[1]);
             const double scale = norm(a) * (1.0 + norm(b));
             return worst({resid(into_algebra(mul(a, p)) - a, norm(a)),
                           resid(mul(a, b), scale),
                           resid(mul(p, b), 1.0 + norm(b))});
         }});

    // ---------------------------------------------------------------- SA8
    add({"SA8", "elements above the unit are invertible", 1e-7, "+",
         [](const P& x) {
             const Element a = unit_like(x[0]) + x[0];
             const Element r = inverse(a);
             return worst({
                 resid(into_algebra(mul(a, r)) - unit_like(a), 1.0),
                 resid(into_algebra(mul(r, a)) - unit_like(a), 1.0),
             });
         }});

    // ---------------------------------------------------------------- SA9
    add({"SA9", "monotone limits stay in the commutant", 1e-7, "ec",
         [](const P& x) {
             Element a = x[0];
             const Element& b = x[1];
             if (a.is_matrix()) {
                 // Perturb the limit within the commutation tolerance, the
                 // way a norm limit of the ascending chain would arrive.
                 const std::size_t n = a.as_matrix().dim();
                 Matrix xi(n);
                 for (std::size_t i = 0; i < n; ++i)
                     for (std::size_t j = 0; j < n; ++j)
                         xi(i, j) = 1e-12 *
                             (static_cast<double>(((i + 1) * (j + 1)) % 5) -
                              2.0);
                 a = a + Element::matrix(xi.symmetrized());
             }
             double r = ok(commutes(a, b));
             // The chain itself: a - 1/k ascending with supremum a.
             for (int k = 1; k < 4; ++k)
                 r = worst({r, ok(leq(a - 1.0 / k, a - 1.0 / (k + 1))),
                            ok(leq(a - 1.0 / k, a))});
             return r;
         },
         false, false,
         [](Gen& g, Rng& rng) {
             auto [a, b] = g.commuting(rng);
             return P{a, b};
         }});

    // ---------------------------------------------------------------- L1.5
    add({"L1.5", "norm laws: ||a^2|| = ||a||^2, ||a o b|| <= ||a|| ||b||, "
         "monotone on positives, a^2 <= l^2 iff -l <= a <= l",
         1e-7, "ee++", [](const P& x) {
             const Element &a = x[0], &b = x[1], &c = x[2], &e = x[3];
             const double na = norm(a), nb = norm(b);
             double r = worst({
                 std::abs(norm(square(a)) - na * na) / (1.0 + na * na),
                 std::max(0.0, (norm(jordan_product(a, b)) - na * nb) /
                                   (1.0 + na * nb)),
                 ok(norm(c) <= norm(c + e) + 1e-12),
             });
             if (na >= 0.5) {
                 for (double f : {1.1, 0.9}) {
                     const double lam = f * na;
                     const bool sq = leq(square(a), lam * lam);
                     const bool band = leq(-lam, a) && leq(a, lam);
                     r = worst({r, ok(sq == band)});
                 }
             }
             return r;
         }});

    // ---------------------------------------------------------------- T2.4
    add({"T2.4", "e <= p iff e = ep = pe = pep, for effects under a projection",
         1e-7, "pff", [](const P& x) {
             const Element& p = x[0];
             const Element e = quadratic_map(p, x[1]);
             const Element& g = x[2];
             const bool below = leq(g, p);
             const bool absorbed = approx_equal(mul(g, p), g);
             return worst({
                 ok(leq(e, p)),
                 resid(into_algebra(mul(e, p)) - e, 1.0),
                 resid(into_algebra(mul(p, e)) - e, 1.0),
                 resid(quadratic_map(p, e) - e, 1.0),
                 ok(below == absorbed),
             });
         }});

    // ---------------------------------------------------------------- L2.5
    add({"L2.5", "effect algebra of e: e^2, 2e - e^2 in E; e - e^2 <= e, 1-e",
         1e-7, "f", [](const P& x) {
             const Element& e = x[0];
             const Element e2 = square(e);
             const Element d = e - e2;
             return worst({
                 ok(is_effect(e2)),
                 ok(leq(e2, e)),
                 ok(is_effect(2.0 * e - e2)),
                 ok(is_positive(d)),
                 ok(leq(d, e)),
                 ok(leq(d, unit_like(e) - e)),
             });
         }});

    // ---------------------------------------------------------------- T2.6
    add({"T2.6", "projections are extreme: le <= p iff e <= p (0 < l <= 1); "
         "sums of compressed halves stay under p",
         1e-7, "pff", [](const P& x) {
             const Element &p = x[0], &e = x[1];
             const bool below = leq(e, p);
             double r = 0.0;
             for (double lam : {0.25, 0.5, 0.75, 1.0})
                 r = worst({r, ok(leq(lam * e, p) == below)});
             const Element f1 = 0.5 * quadratic_map(p, e);
             const Element f2 = 0.5 * quadratic_map(p, x[2]);
             return worst({r, ok(leq(f1 + f2, p))});
         }});

    // ---------------------------------------------------------------- T2.11
    add({"T2.11", "carrier laws: 0° = 0, p° = p, (a^2)° = a°, monotone on "
         "positives, a° in CC(a), a a° = a",
         1e-7, "e+p+", [](const P& x) {
             const Element &a = x[0], &a1 = x[1], &p = x[2], &c = x[3];
             return worst({
                 resid(carrier(zero_like(a)), 1.0),
                 resid(carrier(p) - p, 1.0),
                 resid(carrier(square(a)) - carrier(a), 1.0),
                 ok(leq(carrier(a1), carrier(a1 + c))),
                 ok(in_bicommutant(carrier(a), a)),
                 resid(into_algebra(mul(a, carrier(a))) - a, norm(a)),
             });
         }});

    // ---------------------------------------------------------------- T3.2
    add({"T3.2", "polar projections p = (a+)°, q = (a-)°: pa = a+, qa = -a-, "
         "pq = 0, p + q = a°",
         1e-7, "e", [](const P& x) {
             const Element& a = x[0];
             const Element p = carrier(pos_part(a));
             const Element q = carrier(neg_part(a));
             return worst({
                 resid(into_algebra(mul(p, a)) - pos_part(a), norm(a)),
                 resid(into_algebra(mul(q, a)) + neg_part(a), norm(a)),
                 resid(mul(p, q), 1.0),
                 resid(p + q - carrier(a), 1.0),
                 resid(into_algebra(mul(p, abs_value(a))) - pos_part(a),
                       norm(a)),
             });
         }});

    // ---------------------------------------------------------------- C3.3
    add({"C3.3", "monotone square roots: a^2 <= b^2 iff a <= b on commuting "
         "positives",
         1e-7, "+c",
         [](const P& x) {
             const bool lin = leq(x[0], x[1]);
             const bool sq = leq(square(x[0]), square(x[1]));
             return ok(lin == sq);
         },
         false, false,
         [](Gen& g, Rng& rng) {
             auto [a, b] = g.commuting(rng, 0.0, 2.0);
             return P{a, b};
         }});

    // ---------------------------------------------------------------- T3.5
    add({"T3.5", "polar decomposition: sgn(a) a = |a|, sgn(a)^2 = a°, "
         "sgn(a)|a| = a, sgn(a) in CC(a)",
         1e-7, "e", [](const P& x) {
             const Element& a = x[0];
             const Element s = signum(a);
             return worst({
                 resid(into_algebra(mul(s, a)) - abs_value(a), norm(a)),
                 resid(square(s) - carrier(a), 1.0),
                 resid(into_algebra(mul(s, abs_value(a))) - a, norm(a)),
                 ok(in_bicommutant(s, a)),
             });
         }});

    // ---------------------------------------------------------------- C3.6
    add({"C3.6", "|a|° = a°; ab = 0 iff |a||b| = 0", 1e-7, "ee",
         [](const P& x) {
             const Element &a = x[0], &c = x[1];
             const Element b = orthogonal_positive(a, c);
             const double tau = 1e-7 * (1.0 + norm(a) * norm(c));
             const bool prod_zero = norm(mul(a, c)) <= tau;
             const bool abs_zero = norm(mul(abs_value(a), abs_value(c))) <= tau;
             return worst({
                 resid(carrier(abs_value(a)) - carrier(a), 1.0),
                 resid(mul(abs_value(a), abs_value(b)),
                       norm(a) * (1.0 + norm(b))),
                 ok(prod_zero == abs_zero),
             });
         }});

    // ---------------------------------------------------------------- T4.1
    add({"T4.1", "compressions J_a are linear and order preserving",
         1e-7, "eee", [](const P& x) {
             const Element &a = x[0], &b = x[1], &c = x[2];
             const Element lin = quadratic_map(a, 2.0 * b - 3.0 * c) -
                                 2.0 * quadratic_map(a, b) +
                                 3.0 * quadratic_map(a, c);
             const double scale =
                 norm(a) * norm(a) * (norm(b) + norm(c));
             return worst({
                 resid(lin, scale),
                 ok(leq(quadratic_map(a, b), quadratic_map(a, b + square(c)))),
             });
         }});

    // ---------------------------------------------------------------- L4.2
    add({"L4.2", "norm bounds: ||aba|| <= ||a||^2 ||b||, ||p|| = 1 for "
         "nonzero projections, ||pap|| <= ||a||",
         1e-7, "eeP", [](const P& x) {
             const Element &a = x[0], &b = x[1], &p = x[2];
             const double na = norm(a), nb = norm(b);
             return worst({
                 std::max(0.0, (norm(quadratic_map(a, b)) - na * na * nb) /
                                   (1.0 + na * na * nb)),
                 std::abs(norm(p) - 1.0),
                 std::max(0.0, (norm(quadratic_map(p, a)) - na) / (1.0 + na)),
             });
         }});

    // ---------------------------------------------------------------- T4.6
    add({"T4.6", "ascending bounded sequences have suprema; the dyadic "
         "chain of a is ascending with supremum a",
         1e-7, "e", [](const P& x) {
             const Element& a = x[0];
             const auto seq = ascending_approx(a, 4);
             double r = ok(leq(seq.back(), a));
             for (std::size_t k = 1; k < seq.size(); ++k)
                 r = worst({r, ok(leq(seq[k - 1], seq[k]))});
             return worst({r, ok(is_positive(pos_part(a)))});
         }});

    // ---------------------------------------------------------------- T4.8
    add({"T4.8", "Sasaki maps: phi_a(b) <= a° = phi_a(1), monotone, "
         "phi_a(b) = phi_a(b°), phi_a(b)c = 0 iff phi_a(c)b = 0",
         1e-7, "e++e", [](const P& x) {
             const Element &a = x[0], &b = x[1], &c = x[2], &d = x[3];
             const Element sab = sasaki_map(a, b);
             const Element e = quadratic_map(unit_like(a) - sab, square(d));
             return worst({
                 ok(leq(sab, carrier(a))),
                 resid(sasaki_map(a, unit_like(a)) - carrier(a), 1.0),
                 ok(leq(sab, sasaki_map(a, b + c))),
                 resid(sab - sasaki_map(a, carrier(b)), 1.0),
                 resid(mul(sasaki_map(a, e), b), 1.0 + norm(b)),
             });
         }});

    // ---------------------------------------------------------------- T4.10
    add({"T4.10", "corner algebra vAv: unit v, closed under J_v, inverses "
         "above v exist",
         1e-7, "Pe", [](const P& x) {
             const Element &v = x[0], &y = x[1];
             const CornerAlgebra C(v);
             const Element b = quadratic_map(v, y);
             const Element c = v + quadratic_map(v, square(y));
             const Element inv = C.inverse_in_corner(c);
             return worst({
                 ok(C.contains(b)),
                 resid(jordan_product(v, b) - b, norm(b)),
                 ok(C.contains(c)),
                 ok(C.contains(inv)),
                 resid(into_algebra(mul(c, inv)) - v, 1.0),
             });
         }});

    // ---------------------------------------------------------------- L5.2
    add({"L5.2", "projection lattice: commuting meet is the product, "
         "orthogonal join is the sum, relative complement, orthomodular law",
         1e-7, "pcppe",
         [](const P& x) {
             const Element &p = x[0], &q = x[1], &r = x[2], &s = x[3],
                           &w = x[4];
             const bool under_ortho = leq(r, ortho(s));
             const bool prod_zero = norm(mul(r, s)) <= 1e-7;
             const Element s2 =
                 carrier(quadratic_map(ortho(r), square(w)));
             const Element q2 = join(r, s);
             return worst({
                 resid(meet(p, q) - into_algebra(mul(p, q)), 1.0),
                 ok(under_ortho == prod_zero),
                 resid(join(r, s2) - (r + s2), 1.0),
                 resid((q2 - r) - meet(ortho(r), q2), 1.0),
                 resid(q2 - join(r, meet(ortho(r), q2)), 1.0),
             });
         },
         false, false,
         [](Gen& g, Rng& rng) {
             auto [p, q] = g.commuting_projections(rng);
             return P{p, q, g.projection(rng), g.projection(rng),
                      g.element(rng)};
         }});

    // ---------------------------------------------------------------- L5.4
    add({"L5.4", "Sasaki projection onto p: fixes r <= p, kills r <= p-perp, "
         "meet is a lower bound and commutative",
         1e-7, "ppe", [](const P& x) {
             const Element &p = x[0], &q = x[1], &w = x[2];
             const Element r = carrier(quadratic_map(p, square(w)));
             const Element r2 = carrier(quadratic_map(ortho(p), square(w)));
             const Element m = meet(p, q);
             double extra = 0.0;
             if (leq(r, q)) extra = ok(leq(r, m));
             return worst({
                 ok(leq(sasaki_projection(p, q), p)),
                 resid(sasaki_projection(p, r) - r, 1.0),
                 resid(sasaki_map(p, r2), 1.0),
                 ok(leq(m, p)),
                 ok(leq(m, q)),
                 resid(meet(q, p) - m, 1.0),
                 extra,
             });
         }});

    // ---------------------------------------------------------------- T5.3
    add({"T5.3", "Sasaki maps preserve suprema of projections",
         1e-7, "epp", [](const P& x) {
             const Element &a = x[0], &p = x[1], &q = x[2];
             const Element lhs = sasaki_map(a, join(p, q));
             const Element rhs = join(sasaki_map(a, p), sasaki_map(a, q));
             return resid(lhs - rhs, 1.0);
         }});

    // ---------------------------------------------------------------- T5.5
    add({"T5.5", "Sasaki identity phi_p(q) = p AND (p-perp OR q); De Morgan "
         "duality; compatibility is commutation",
         1e-7, "pp", [](const P& x) {
             const Element &p = x[0], &q = x[1];
             return worst({
                 resid(sasaki_projection(p, q) -
                           meet(p, join(ortho(p), q)), 1.0),
                 resid(ortho(join(p, q)) - meet(ortho(p), ortho(q)), 1.0),
                 ok(compatible(p, q) == compatible_decomposition_holds(p, q)),
             });
         }});

    // ---------------------------------------------------------------- T7.5
    add({"T7.5", "pseudo-inverse: ar = ra = a°, r in CC(a), 0^- = 0",
         1e-7, "e", [](const P& x) {
             const Element& a = x[0];
             const Element r = pseudo_inverse(a);
             return worst({
                 ok(is_regular(a)),
                 resid(into_algebra(mul(a, r)) - carrier(a), 1.0),
                 resid(into_algebra(mul(r, a)) - carrier(a), 1.0),
                 ok(in_bicommutant(r, a)),
                 resid(pseudo_inverse(zero_like(a)), 1.0),
             });
         }});

    // ---------------------------------------------------------------- T8.1
    add({"T8.1", "normal sub-effects are projections; carrier is the "
         "projection cover; J_p separates a around (a+)°",
         1e-7, "pcfe",
         [](const P& x) {
             const Element &p = x[0], &q = x[1], &e = x[2], &a = x[3];
             const Element d = into_algebra(mul(p, q));
             const Element e1 = p - d;
             const Element f1 = q - d;
             const Element e2 = quadratic_map(p, e);
             const Element pp = carrier(pos_part(a));
             return worst({
                 ok(is_projection(d)),
                 ok(is_effect(e1) && is_effect(f1)),
                 ok(leq(d + e1 + f1, unit_like(p))),
                 ok(leq(e, carrier(e))),
                 ok(leq(carrier(e2), p)),
                 ok(is_positive(quadratic_map(pp, a))),
                 ok(is_positive(-quadratic_map(ortho(pp), a))),
             });
         },
         false, false,
         [](Gen& g, Rng& rng) {
             auto [p, q] = g.commuting_projections(rng);
             return P{p, q, g.effect(rng), g.element(rng)};
         }});

    // ---------------------------------------------------------------- T8.3
    add({"T8.3", "spectral resolution: p_l in CC(a) and P, monotone and "
         "right continuous in l, splits a around l, hits 0 below L and 1 "
         "at U, eigenprojections fill the jumps",
         1e-7, "e", [](const P& x) {
             const Element& a = x[0];
             const auto b = spectral_bounds(a);
             const double span = b.upper - b.lower;
             const double l1 = b.lower + 0.3 * span;
             const double l2 = b.lower + 0.7 * span;
             const Element p1 = resolution_at(a, l1);
             const Element p2 = resolution_at(a, l2);
             double r = worst({
                 ok(is_projection(p1)),
                 ok(in_bicommutant(p1, a)),
                 ok(leq(p1, p2)),
                 ok(is_positive(-quadratic_map(p1, a - l1))),
                 ok(is_positive(
                     quadratic_map(unit_like(a) - p1, a - l1))),
                 resid(resolution_at(a, b.upper) - unit_like(a), 1.0),
                 resid(resolution_at(a, b.upper + 1.0) - unit_like(a), 1.0),
                 resid(resolution_at(a, b.lower - 0.5), 1.0),
                 ok(leq(eigenprojection_at(a, l1), p1)),
             });
             // Right continuity: constant up to the next spectral value.
             // The midpoint guard avoids rounding onto either endpoint when
             // the next spectral value is within an ulp of l1.
             const auto spec = spectrum(a);
             double next = l1 + 1.0;
             for (double s : spec)
                 if (s > l1) {
                     const double mid = l1 + (s - l1) / 2.0;
                     next = (mid > l1 && mid < s) ? mid : l1;
                     break;
                 }
             r = worst({r, resid(p1 - resolution_at(a, next), 1.0)});
             // Jumps: p_{a_i} - d_{a_i} equals the resolution at the
             // previous spectral value.
             const double last = spec.back();
             const Element jump = resolution_at(a, last) -
                                  eigenprojection_at(a, last);
             if (spec.size() >= 2)
                 r = worst({r, resid(jump - resolution_at(
                                                a, spec[spec.size() - 2]),
                                     1.0)});
             else
                 r = worst({r, resid(jump, 1.0)});
             if (l2 - l1 > 1e-6)
                 r = worst({r, ok(norm(mul(eigenprojection_at(a, l1),
                                           eigenprojection_at(a, l2))) <=
                                  1e-7)});
             return r;
         }});

    // ---------------------------------------------------------------- T8.5
    add({"T8.5", "Riemann-Stieltjes reconstruction: error <= mesh, the cell "
         "projections are orthogonal members of CC(a) summing to 1",
         1e-7, "e", [](const P& x) {
             const Element& a = x[0];
             const auto b = spectral_bounds(a);
             const double l0 = b.lower - 0.5;
             const double h = (b.upper - l0) / 4.0;
             std::vector<double> part{l0, l0 + h, l0 + 2 * h, l0 + 3 * h,
                                      b.upper};
             std::vector<double> tags;
             for (std::size_t i = 1; i < part.size(); ++i)
                 tags.push_back(0.5 * (part[i - 1] + part[i]));
             const auto rs = riemann_approx(a, part, tags);
             Element sum = zero_like(a);
             double r = 0.0;
             for (const auto& u : rs.projections) {
                 r = worst({r, ok(is_projection(u)),
                            ok(in_bicommutant(u, a))});
                 sum = sum + u;
             }
             return worst({
                 r,
                 ok(norm(a - rs.approximation) <=
                    rs.certified_error + 1e-9 * (1.0 + norm(a))),
                 resid(sum - unit_like(a), 1.0),
             });
         }});

    // ---------------------------------------------------------------- C8.6
    add({"C8.6", "dyadic ascending approximation: monotone, below a, in "
         "CC(a), error <= (U-L)/2^k",
         1e-7, "e", [](const P& x) {
             const Element& a = x[0];
             const auto b = spectral_bounds(a);
             const double span = b.upper - b.lower;
             const auto seq = ascending_approx(a, 5);
             const double slack =
                 tol::cluster(norm(a)) + 1e-12 * (1.0 + norm(a));
             double r = ok(in_bicommutant(seq[0], a));
             for (std::size_t k = 0; k < seq.size(); ++k) {
                 const double budget =
                     span / std::pow(2.0, static_cast<double>(k + 1));
                 r = worst({r, ok(leq(seq[k], a)),
                            ok(norm(a - seq[k]) <= budget + slack)});
                 if (k + 1 < seq.size())
                     r = worst({r, ok(leq(seq[k], seq[k + 1]))});
             }
             return r;
         }});

    // ---------------------------------------------------------------- T8.10
    add({"T8.10", "simple decomposition: strictly ascending coefficients on "
         "orthogonal nonzero projections summing to 1; recovers a, ||a|| "
         "and a°; projections are the eigenprojections",
         1e-6, "e", [](const P& x) {
             const Element& a = x[0];
             const auto dec = simple_decompose(a);
             const double cut = tol::rank(norm(a));
             Element sum = zero_like(a);
             Element reco = zero_like(a);
             Element supp = zero_like(a);
             double maxabs = 0.0;
             double r = 0.0;
             for (std::size_t i = 0; i < dec.coefficients.size(); ++i) {
                 const double c = dec.coefficients[i];
                 const Element& u = dec.projections[i];
                 r = worst({r, ok(is_projection(u)), ok(!is_zero(u))});
                 if (i > 0)
                     r = worst({r, ok(c > dec.coefficients[i - 1]),
                                resid(mul(dec.projections[i - 1], u), 1.0)});
                 sum = sum + u;
                 reco = reco + c * u;
                 if (std::abs(c) > cut) supp = supp + u;
                 maxabs = std::max(maxabs, std::abs(c));
             }
             const std::size_t m = dec.projections.size();
             if (m >= 3)
                 r = worst({r, resid(mul(dec.projections[0],
                                         dec.projections[m - 1]), 1.0)});
             return worst({
                 r,
                 resid(sum - unit_like(a), 1.0),
                 resid(reco - a, norm(a)),
                 std::abs(maxabs - norm(a)) / (1.0 + norm(a)),
                 resid(supp - carrier(a), 1.0),
                 resid(dec.projections[0] -
                           eigenprojection_at(a, dec.coefficients[0]), 1.0),
                 resid(dec.projections[m - 1] -
                           eigenprojection_at(a, dec.coefficients[m - 1]),
                       1.0),
             });
         }});

    // ---------------------------------------------------------------- T8.11
    add({"T8.11", "bCa iff b commutes with the spectral resolution of a",
         1e-7, "ece",
         [](const P& x) {
             const Element &a = x[0], &b = x[1], &c = x[2];
             return worst({
                 ok(spectrally_commutes(b, a)),
                 ok(spectrally_commutes(c, a) == commutes(c, a)),
             });
         },
         false, false,
         [](Gen& g, Rng& rng) {
             auto [a, b] = g.commuting(rng);
             return P{a, b, g.element(rng)};
         }});

    // ---------------------------------------------------------------- T8.12
    add({"T8.12", "the commutant C(a) is norm closed", 1e-7, "ec",
         [](const P& x) {
             const Element &a = x[0], &b = x[1];
             // The sequence b + b^2/k lies in C(a) and converges to b.
             const Element limit_probe = b + 0.25 * square(b);
             return worst({
                 ok(commutes(b, a)),
                 ok(spectrally_commutes(limit_probe, a)),
             });
         },
         false, false,
         [](Gen& g, Rng& rng) {
             auto [a, b] = g.commuting(rng);
             return P{a, b};
         }});

    // ---------------------------------------------------------------- EX1.2
    {
        Law ex;
        ex.id = "EX1.2";
        ex.anchor = "function model: the field is closed under complement "
                    "and union, and all level sets are members";
        ex.bound = 1e-7;
        ex.kinds = "ee";
        ex.setfn_only = true;
        ex.check = [](const P& x) {
            const SetFn& f = x[0].as_setfn();
            const auto& field = *f.field;
            const std::uint64_t full =
                field.universe_size() == 64
                    ? ~std::uint64_t{0}
                    : ((std::uint64_t{1} << field.universe_size()) - 1);
            const auto& members = field.members();
            double r = ok(field.contains(0) && field.contains(full));
            for (std::uint64_t m : members)
                r = worst({r, ok(field.contains(full & ~m))});
            std::size_t checked = 0;
            for (std::size_t i = 0; i < members.size() && checked < 4096; ++i)
                for (std::size_t j = i; j < members.size() && checked < 4096;
                     ++j, ++checked)
                    r = worst({r, ok(field.contains(members[i] | members[j]))});
            const SetFn prod = model_mul(f, x[1].as_setfn());
            return worst({r, ok(prod.measurable()), ok(f.measurable())});
        };
        add(std::move(ex));
    }

    return L;
}

} // namespace synaptica::audit

#endif

#ifndef SYNAPTICA_AUDIT_HPP
#define SYNAPTICA_AUDIT_HPP

#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "synaptica/calculus.hpp"
#include "synaptica/core.hpp"
#include "synaptica/io.hpp"
#include "synaptica/lattice.hpp"
#include "synaptica/spectral.hpp"

namespace synaptica::audit {

// ---------------------------------------------------------------------------
// Payload generation
// ---------------------------------------------------------------------------

/// Per-trial element factory. Spectra are snapped to a quarter grid so that
/// exact zeros, exact ties and (in the function model) exact arithmetic
/// actually occur in random trials.
class Gen {
public:
    Gen(std::string model, std::vector<std::size_t> dims)
        : model_(std::move(model)), dims_(std::move(dims)) {
        if (dims_.empty()) dims_.push_back(model_ == "matrix" ? 4 : 5);
    }

    const std::string& model() const { return model_; }

    void begin_trial(Rng& rng, std::size_t trial_index) {
        dim_ = dims_[trial_index % dims_.size()];
        if (model_ == "setfn") {
            // Sweep field sizes from coarse two-generator fields up to the
            // full power set (singleton generators).
            if (trial_index % 4 == 3) {
                std::vector<std::uint64_t> singletons;
                for (std::size_t x = 0; x < dim_; ++x)
                    singletons.push_back(std::uint64_t{1} << x);
                field_ = field_generate(dim_, singletons);
            } else {
                field_ = random_field(dim_, rng, 1 + trial_index % 3);
            }
        }
    }

    Element element(Rng& rng, double lo = -2.0, double hi = 2.0) {
        if (model_ == "matrix") {
            const Matrix q = random_orthogonal(dim_, rng);
            return Element::matrix(
                (q * Matrix::diag(snapped(rng, lo, hi)) * q.transpose())
                    .symmetrized());
        }
        return Element::wrap(random_setfn(field_, rng, lo, hi));
    }

    /// Positive element. In the function model the values are squares of
    /// grid points, so square roots (and hence every derived identity) stay
    /// exact in IEEE arithmetic.
    Element positive(Rng& rng, double hi = 2.0) {
        if (model_ == "matrix") return element(rng, 0.0, hi);
        const SetFn f = random_setfn(field_, rng, 0.0, std::sqrt(hi));
        return Element::wrap(model_mul(f, f));
    }

    Element effect(Rng& rng) {
        if (model_ == "matrix") return element(rng, 0.0, 1.0);
        const SetFn f = random_setfn(field_, rng, 0.0, 1.0);
        return Element::wrap(model_mul(f, f));
    }

    Element projection(Rng& rng) {
        if (model_ == "matrix") {
            const Matrix q = random_orthogonal(dim_, rng);
            std::vector<double> d(dim_);
            for (auto& v : d) v = rng.coin() ? 1.0 : 0.0;
            return Element::matrix((q * Matrix::diag(d) * q.transpose()).symmetrized());
        }
        const auto& members = field_->members();
        return Element::wrap(indicator(field_, members[rng.index(members.size())]));
    }

    Element nonzero_projection(Rng& rng) {
        for (int tries = 0; tries < 64; ++tries) {
            Element p = projection(rng);
            if (!is_zero(p)) return p;
        }
        return unit_like(element(rng));
    }

    /// Pair drawn from one eigenbasis (matrix) or one field (setfn): commutes
    /// exactly up to the orthogonal-similarity roundoff.
    std::pair<Element, Element> commuting(Rng& rng, double lo = -2.0,
                                          double hi = 2.0) {
        if (model_ == "matrix") {
            const Matrix q = random_orthogonal(dim_, rng);
            auto make = [&] {
                return Element::matrix(
                    (q * Matrix::diag(snapped(rng, lo, hi)) * q.transpose())
                        .symmetrized());
            };
            Element a = make();
            Element b = make();
            return {a, b};
        }
        return {element(rng, lo, hi), element(rng, lo, hi)};
    }

    /// Exactly commuting projection pair: simultaneous 0/1 diagonals in a
    /// shared basis (matrix), or two field-member indicators (setfn).
    std::pair<Element, Element> commuting_projections(Rng& rng) {
        if (model_ == "matrix") {
            const Matrix q = random_orthogonal(dim_, rng);
            auto make = [&] {
                std::vector<double> d(dim_);
                for (auto& v : d) v = rng.coin() ? 1.0 : 0.0;
                return Element::matrix(
                    (q * Matrix::diag(d) * q.transpose()).symmetrized());
            };
            Element a = make();
            Element b = make();
            return {a, b};
        }
        return {projection(rng), projection(rng)};
    }

private:
    std::vector<double> snapped(Rng& rng, double lo, double hi) {
        std::vector<double> d(dim_);
        for (auto& v : d) v = std::round(rng.uniform(lo, hi) * 4.0) / 4.0;
        return d;
    }

    std::string model_;
    std::vector<std::size_t> dims_;
    std::size_t dim_ = 1;
    FieldPtr field_;
};

// ---------------------------------------------------------------------------
// Laws
// ---------------------------------------------------------------------------

/// One audited law. `check` maps a raw payload to a normalized residual;
/// the law passes a trial iff residual <= bound. Booleans are encoded as
/// residual 0/1 against a small bound. `kinds` gives one character per
/// payload slot, used to repair shrunk payloads:
///   e generic, + positive, f effect, p projection, P nonzero projection,
///   c commutes-with-slot-0.
struct Law {
    std::string id;
    std::string anchor;
    double bound;
    std::string kinds;
    std::function<double(const std::vector<Element>&)> check;
    bool matrix_only = false;
    bool setfn_only = false;
    /// Optional custom payload generator (e.g. commuting pairs); when unset
    /// the payload is drawn slot-by-slot from `kinds`.
    std::function<std::vector<Element>(Gen&, Rng&)> generate;
};

inline double ok(bool b) { return b ? 0.0 : 1.0; }

inline double resid(const Element& x, double scale) {
    return order_unit_norm(x) / (1.0 + scale);
}

inline double worst(std::initializer_list<double> rs) {
    double w = 0.0;
    for (double r : rs) {
        if (std::isnan(r)) return std::numeric_limits<double>::infinity();
        w = std::max(w, r);
    }
    return w;
}

std::vector<Law> law_registry();

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct LawReport {
    std::string id;
    std::string anchor;
    double bound = 0.0;
    std::size_t pass = 0;
    std::size_t fail = 0;
    double worst_residual = 0.0;
    std::optional<std::vector<Element>> counterexample;
};

struct AuditReport {
    std::string model;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<LawReport> laws;

    bool all_passed() const {
        for (const auto& l : laws)
            if (l.fail > 0) return false;
        return true;
    }

    Json to_json() const {
        Json j;
        j["model"] = model;
        j["seed"] = seed;
        j["trials"] = trials;
        j["laws"] = Json::array();
        for (const auto& l : laws) {
            Json lj;
            lj["id"] = l.id;
            lj["anchor"] = l.anchor;
            lj["bound"] = l.bound;
            lj["pass"] = l.pass;
            lj["fail"] = l.fail;
            lj["worst_residual"] =
                std::isfinite(l.worst_residual)
                    ? Json(l.worst_residual)
                    : Json("inf");
            if (l.counterexample) {
                Json ce = Json::array();
                for (const auto& e : *l.counterexample)
                    ce.push_back(element_to_json(e));
                lj["counterexample"] = ce;
            }
            j["laws"].push_back(lj);
        }
        return j;
    }
};

// ---------------------------------------------------------------------------
// Shrinking
// ---------------------------------------------------------------------------

namespace detail {

inline Element repair_slot(char kind, const Element& e,
                           const std::vector<Element>& payload) {
    if (!e.is_matrix()) return e;
    auto respectrum = [&](auto&& f) {
        const auto d = eig(e.as_matrix());
        return Element::matrix(d.apply(f));
    };
    switch (kind) {
    case 'p':
    case 'P':
        return respectrum([](double v) { return v > 0.5 ? 1.0 : 0.0; });
    case '+':
        return respectrum([](double v) { return std::max(0.0, v); });
    case 'f':
        return respectrum([](double v) { return std::clamp(v, 0.0, 1.0); });
    case 'c': {
        // Project onto the commutant block structure of slot 0.
        Matrix out(e.as_matrix().dim());
        for (const auto& c : spectral_clusters(payload[0].as_matrix()))
            out += c.projection * e.as_matrix() * c.projection;
        return Element::matrix(out.symmetrized());
    }
    default:
        return Element::matrix(e.as_matrix().symmetrized());
    }
}

inline std::vector<Element> repair(const Law& law, std::vector<Element> payload) {
    for (std::size_t i = 0; i < payload.size() && i < law.kinds.size(); ++i)
        payload[i] = repair_slot(law.kinds[i], payload[i], payload);
    return payload;
}

inline bool fails(const Law& law, const std::vector<Element>& payload,
                  double* residual = nullptr) {
    try {
        const double r = law.check(payload);
        if (residual) *residual = r;
        return !(r <= law.bound);
    } catch (const std::exception&) {
        if (residual) *residual = std::numeric_limits<double>::infinity();
        return true;
    }
}

inline std::vector<Element> drop_coordinate(const std::vector<Element>& payload,
                                            std::size_t coord) {
    std::vector<Element> out;
    for (const auto& e : payload) {
        const Matrix& m = e.as_matrix();
        const std::size_t n = m.dim();
        Matrix s(n - 1);
        std::size_t si = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == coord) continue;
            std::size_t sj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == coord) continue;
                s(si, sj) = m(i, j);
                ++sj;
            }
            ++si;
        }
        out.push_back(Element::matrix(std::move(s)));
    }
    return out;
}

inline std::vector<Element> round_entries(const std::vector<Element>& payload,
                                          double grid) {
    std::vector<Element> out;
    for (const auto& e : payload) {
        Matrix m = e.as_matrix();
        for (auto& v : m.entries()) v = std::round(v / grid) * grid;
        out.push_back(Element::matrix(m.symmetrized()));
    }
    return out;
}

/// FNV-1a over the entry bit patterns; used to detect revisited payloads.
inline std::size_t payload_fingerprint(const std::vector<Element>& payload) {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& e : payload)
        for (double v : e.as_matrix().entries()) {
            std::uint64_t bits;
            std::memcpy(&bits, &v, sizeof bits);
            h = (h ^ bits) * 1099511628211ull;
        }
    return static_cast<std::size_t>(h);
}

} // namespace detail

/// Greedy deterministic counterexample reduction: principal-coordinate
/// deletion, then entry rounding, keeping only moves that preserve the
/// failure. Passing payloads are returned unchanged. A visited set plus a
/// move budget guarantees termination: rounding followed by slot repair can
/// otherwise alternate between two distinct failing states forever.
inline std::vector<Element> counterexample_shrink(const Law& law,
                                                  std::vector<Element> payload) {
    if (!detail::fails(law, payload)) return payload;
    if (payload.empty() || !payload[0].is_matrix()) return payload;

    std::unordered_set<std::size_t> seen{detail::payload_fingerprint(payload)};
    auto accept = [&](std::vector<Element>& cand) {
        return seen.insert(detail::payload_fingerprint(cand)).second &&
               detail::fails(law, cand);
    };

    bool changed = true;
    for (int moves = 0; changed && moves < 64; ++moves) {
        changed = false;
        const std::size_t n = payload[0].as_matrix().dim();
        for (std::size_t coord = 0; n > 1 && coord < n; ++coord) {
            auto cand = detail::repair(law, detail::drop_coordinate(payload, coord));
            if (accept(cand)) {
                payload = std::move(cand);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        for (double grid : {1.0, 0.5, 0.25, 0.125}) {
            auto cand = detail::repair(law, detail::round_entries(payload, grid));
            if (accept(cand)) {
                payload = std::move(cand);
                changed = true;
                break;
            }
        }
    }
    return payload;
}

// ---------------------------------------------------------------------------
// Runner
// ---------------------------------------------------------------------------

struct AuditConfig {
    std::string model = "matrix";       // "matrix" | "setfn"
    std::vector<std::size_t> dims;      // matrix dims or setfn universe sizes
    std::size_t trials = 100;
    std::uint64_t seed = 0;
};

inline Element payload_slot(Gen& gen, Rng& rng, char kind) {
    switch (kind) {
    case '+': return gen.positive(rng);
    case 'f': return gen.effect(rng);
    case 'p': return gen.projection(rng);
    case 'P': return gen.nonzero_projection(rng);
    default: return gen.element(rng);
    }
}

inline std::vector<Element> generate_payload(const Law& law, Gen& gen, Rng& rng) {
    std::vector<Element> payload;
    for (char kind : law.kinds) payload.push_back(payload_slot(gen, rng, kind));
    return payload;
}

inline AuditReport run_laws(const std::vector<Law>& laws, const AuditConfig& cfg) {
    AuditReport report;
    report.model = cfg.model;
    report.seed = cfg.seed;
    report.trials = cfg.trials;

    std::uint64_t law_index = 0;
    for (const auto& law : laws) {
        ++law_index;
        if (law.matrix_only && cfg.model != "matrix") continue;
        if (law.setfn_only && cfg.model != "setfn") continue;

        LawReport lr;
        lr.id = law.id;
        lr.anchor = law.anchor;
        lr.bound = law.bound;

        Gen gen(cfg.model, cfg.dims);
        Rng rng(cfg.seed * 0x9E3779B97F4A7C15ull + law_index);
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            gen.begin_trial(rng, t);
            std::vector<Element> payload;
            double residual = 0.0;
            bool failed;
            try {
                payload = law.generate ? law.generate(gen, rng)
                                       : generate_payload(law, gen, rng);
                failed = detail::fails(law, payload, &residual);
            } catch (const std::exception&) {
                residual = std::numeric_limits<double>::infinity();
                failed = true;
            }
            lr.worst_residual = std::isnan(residual)
                ? std::numeric_limits<double>::infinity()
                : std::max(lr.worst_residual, residual);
            if (failed) {
                ++lr.fail;
                if (!lr.counterexample && !payload.empty())
                    lr.counterexample = counterexample_shrink(law, payload);
            } else {
                ++lr.pass;
            }
        }
        report.laws.push_back(std::move(lr));
    }
    return report;
}

/// SA1-SA9 on the given model.
inline AuditReport audit_axioms(const AuditConfig& cfg) {
    std::vector<Law> axioms;
    for (const auto& law : law_registry())
        if (law.id.rfind("SA", 0) == 0) axioms.push_back(law);
    return run_laws(axioms, cfg);
}

/// The theorem suite.
inline AuditReport audit_theorems(const AuditConfig& cfg) {
    std::vector<Law> thms;
    for (const auto& law : law_registry())
        if (law.id.rfind("SA", 0) != 0) thms.push_back(law);
    return run_laws(thms, cfg);
}

/// Everything.
inline AuditReport audit_all(const AuditConfig& cfg) {
    return run_laws(law_registry(), cfg);
}

} // namespace synaptica::audit

#include "synaptica/audit_laws.hpp"

#endif

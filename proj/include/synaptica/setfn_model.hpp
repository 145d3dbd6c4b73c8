#ifndef SYNAPTICA_SETFN_MODEL_HPP
#define SYNAPTICA_SETFN_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "synaptica/field_of_sets.hpp"
#include "synaptica/rng.hpp"
#include "synaptica/tolerances.hpp"

namespace synaptica {

/// A finite-range function on a finite universe, measurable with respect to
/// a field of sets: every level set f^{-1}(v) belongs to the field. This is
/// the commutative model with its pointwise operations; all arithmetic and
/// comparisons here are exact.
struct SetFn {
    FieldPtr field;
    std::vector<double> values;

    SetFn(FieldPtr f, std::vector<double> v)
        : field(std::move(f)), values(std::move(v)) {
        if (!field)
            throw std::invalid_argument("SetFn: null field");
        if (values.size() != field->universe_size())
            throw std::invalid_argument("SetFn: value count != universe size");
        if (!measurable())
            throw std::invalid_argument("SetFn: not measurable w.r.t. the field");
    }

    bool measurable() const {
        for (std::uint64_t ls : level_sets())
            if (!field->contains(ls)) return false;
        return true;
    }

    /// Bitmask per distinct value, exact comparison.
    std::vector<std::uint64_t> level_sets() const {
        std::vector<double> distinct = values;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()),
                       distinct.end());
        std::vector<std::uint64_t> out;
        for (double v : distinct) {
            std::uint64_t mask = 0;
            for (std::size_t x = 0; x < values.size(); ++x)
                if (values[x] == v) mask |= std::uint64_t{1} << x;
            out.push_back(mask);
        }
        return out;
    }
};

inline void check_same_field(const SetFn& a, const SetFn& b) {
    if (a.field != b.field && !(*a.field == *b.field))
        throw std::invalid_argument("SetFn: operands belong to different fields");
}

inline SetFn model_add(const SetFn& a, const SetFn& b) {
    check_same_field(a, b);
    std::vector<double> v(a.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values[i] + b.values[i];
    return SetFn(a.field, std::move(v));
}

inline SetFn model_scale(const SetFn& a, double s) {
    std::vector<double> v(a.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * a.values[i];
    return SetFn(a.field, std::move(v));
}

inline SetFn model_mul(const SetFn& a, const SetFn& b) {
    check_same_field(a, b);
    std::vector<double> v(a.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values[i] * b.values[i];
    return SetFn(a.field, std::move(v));
}

inline bool model_is_positive(const SetFn& a) {
    for (double v : a.values)
        if (!(v >= 0.0)) return false;
    return true;
}

inline SetFn model_unit_like(const SetFn& a) {
    return SetFn(a.field, std::vector<double>(a.values.size(), 1.0));
}

inline SetFn model_zero_like(const SetFn& a) {
    return SetFn(a.field, std::vector<double>(a.values.size(), 0.0));
}

inline SetFn model_sqrt_positive(const SetFn& a) {
    std::vector<double> v(a.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (a.values[i] < 0.0)
            throw std::domain_error("SetFn sqrt: function takes a negative value");
        v[i] = std::sqrt(a.values[i]);
    }
    return SetFn(a.field, std::move(v));
}

inline SetFn model_carrier(const SetFn& a) {
    std::vector<double> v(a.values.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.values[i] != 0.0 ? 1.0 : 0.0;
    return SetFn(a.field, std::move(v));
}

inline double model_norm(const SetFn& a) {
    double m = 0.0;
    for (double v : a.values) m = std::max(m, std::abs(v));
    return m;
}

inline bool model_equal(const SetFn& a, const SetFn& b) {
    check_same_field(a, b);
    return a.values == b.values;
}

inline bool model_leq(const SetFn& a, const SetFn& b) {
    check_same_field(a, b);
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (!(a.values[i] <= b.values[i])) return false;
    return true;
}

inline bool model_same_instance(const SetFn& a, const SetFn& b) {
    return a.field == b.field || *a.field == *b.field;
}

inline std::vector<double> model_raw_spectrum(const SetFn& a) {
    std::vector<double> v = a.values;
    std::sort(v.begin(), v.end());
    return v;
}

/// Pointwise reciprocal on the support; values at or below the rank cut are
/// treated as zero (consistency with the carrier).
inline SetFn model_support_reciprocal(const SetFn& a) {
    const double cut = tol::rank(model_norm(a));
    std::vector<double> v(a.values.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = std::abs(a.values[i]) > cut ? 1.0 / a.values[i] : 0.0;
    return SetFn(a.field, std::move(v));
}

/// Bicommutant membership in the function model: b is constant on the level
/// sets of a (i.e. b is a function of a). Exact test.
inline bool model_in_bicommutant(const SetFn& b, const SetFn& a) {
    check_same_field(a, b);
    for (std::uint64_t ls : a.level_sets()) {
        double first = 0.0;
        bool seen = false;
        for (std::size_t x = 0; x < b.values.size(); ++x) {
            if (!(ls & (std::uint64_t{1} << x))) continue;
            if (!seen) {
                first = b.values[x];
                seen = true;
            } else if (b.values[x] != first) {
                return false;
            }
        }
    }
    return true;
}

/// Indicator function of a field member.
inline SetFn indicator(const FieldPtr& field, std::uint64_t member) {
    if (!field->contains(member))
        throw std::invalid_argument("indicator: set is not a field member");
    std::vector<double> v(field->universe_size(), 0.0);
    for (std::size_t x = 0; x < v.size(); ++x)
        if (member & (std::uint64_t{1} << x)) v[x] = 1.0;
    return SetFn(field, std::move(v));
}

/// Random measurable function: constant on the atoms of the field, atom
/// values uniform in [lo, hi). Seed-deterministic through the caller's Rng.
inline SetFn random_setfn(const FieldPtr& field, Rng& rng, double lo, double hi) {
    const auto atoms = field->atoms();
    std::vector<double> v(field->universe_size(), 0.0);
    for (std::uint64_t atom : atoms) {
        // Snap to a coarse grid so exact coincidences (shared level sets,
        // exact zeros) actually occur in audit trials.
        double val = std::round(rng.uniform(lo, hi) * 4.0) / 4.0;
        for (std::size_t x = 0; x < v.size(); ++x)
            if (atom & (std::uint64_t{1} << x)) v[x] = val;
    }
    return SetFn(field, std::move(v));
}

/// Random field over the given universe generated from a few random subsets.
inline FieldPtr random_field(std::size_t universe_size, Rng& rng,
                             std::size_t generator_count = 2) {
    const std::uint64_t full =
        universe_size == 64 ? ~std::uint64_t{0}
                            : ((std::uint64_t{1} << universe_size) - 1);
    std::vector<std::uint64_t> gens;
    for (std::size_t g = 0; g < generator_count; ++g)
        gens.push_back(rng.next_u64() & full);
    return field_generate(universe_size, gens);
}

} // namespace synaptica

#endif

#ifndef SYNAPTICA_FIELD_OF_SETS_HPP
#define SYNAPTICA_FIELD_OF_SETS_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "synaptica/faults.hpp"

namespace synaptica {

/// A field of subsets of a finite universe {0..n-1}, n <= 64. Subsets are
/// bitmasks. Members are kept sorted, so structural equality is cheap.
class FieldOfSets {
public:
    FieldOfSets(std::size_t universe_size, std::vector<std::uint64_t> members)
        : n_(universe_size), members_(std::move(members)) {
        if (n_ == 0 || n_ > 64)
            throw std::invalid_argument("FieldOfSets: universe size must be in [1,64]");
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()),
                       members_.end());
    }

    std::size_t universe_size() const { return n_; }
    std::uint64_t universe_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    }
    const std::vector<std::uint64_t>& members() const { return members_; }

    bool contains(std::uint64_t s) const {
        return std::binary_search(members_.begin(), members_.end(), s);
    }

    /// Minimal nonzero members; every member is a union of atoms.
    std::vector<std::uint64_t> atoms() const {
        std::vector<std::uint64_t> out;
        for (std::size_t x = 0; x < n_; ++x) {
            std::uint64_t atom = universe_mask();
            for (std::uint64_t m : members_)
                if (m & (std::uint64_t{1} << x)) atom &= m;
            if (std::find(out.begin(), out.end(), atom) == out.end())
                out.push_back(atom);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const FieldOfSets& a, const FieldOfSets& b) {
        return a.n_ == b.n_ && a.members_ == b.members_;
    }

private:
    std::size_t n_;
    std::vector<std::uint64_t> members_; // sorted, unique
};

using FieldPtr = std::shared_ptr<const FieldOfSets>;

/// Smallest field of subsets of {0..universe_size-1} containing the
/// generators: closure under complement and pairwise union. Idempotent.
inline FieldPtr field_generate(std::size_t universe_size,
                               const std::vector<std::uint64_t>& generators) {
    if (universe_size == 0 || universe_size > 64)
        throw std::invalid_argument("field_generate: universe size must be in [1,64]");
    const std::uint64_t full =
        universe_size == 64 ? ~std::uint64_t{0}
                            : ((std::uint64_t{1} << universe_size) - 1);

    std::vector<std::uint64_t> sets = {0, full};
    for (std::uint64_t g : generators) {
        if (g & ~full)
            throw std::invalid_argument("field_generate: generator outside universe");
        sets.push_back(g);
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    const bool skip_complement = faults::active("setfn.field_skip_complement");

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint64_t> fresh;
        auto add = [&](std::uint64_t s) {
            if (!std::binary_search(sets.begin(), sets.end(), s) &&
                std::find(fresh.begin(), fresh.end(), s) == fresh.end())
                fresh.push_back(s);
        };
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (!skip_complement) add(full & ~sets[i]);
            for (std::size_t j = i + 1; j < sets.size(); ++j)
                add(sets[i] | sets[j]);
        }
        if (!fresh.empty()) {
            grew = true;
            sets.insert(sets.end(), fresh.begin(), fresh.end());
            std::sort(sets.begin(), sets.end());
        }
    }
    return std::make_shared<FieldOfSets>(universe_size, std::move(sets));
}

/// Power set of a k-point universe: realizes the Boolean algebra with k
/// atoms as the projection lattice of the function model. Returns the field;
/// atom i maps to the indicator of {i}.
inline FieldPtr boolean_realize(std::size_t atom_count) {
    if (atom_count == 0)
        throw std::invalid_argument("boolean_realize: atom count must be >= 1");
    if (atom_count > 20)
        throw std::invalid_argument("boolean_realize: atom count too large");
    std::vector<std::uint64_t> members;
    members.reserve(std::size_t{1} << atom_count);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << atom_count); ++s)
        members.push_back(s);
    return std::make_shared<FieldOfSets>(atom_count, std::move(members));
}

} // namespace synaptica

#endif

#pragma once

// Finitely supported integer combinations with exact, overflow-checked
// arithmetic.  Zero coefficients are never stored and iteration follows the
// key order.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "qschub/perms.hpp"
#include "qschub/shapes.hpp"

namespace qschub {

using coeff_t = std::int64_t;

inline coeff_t checked_add(coeff_t a, coeff_t b) {
    coeff_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow in addition");
    return out;
}

inline coeff_t checked_mul(coeff_t a, coeff_t b) {
    coeff_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow in multiplication");
    return out;
}

template <class Key>
class CoeffTable {
public:
    using map_type = std::map<Key, coeff_t>;
    using const_iterator = typename map_type::const_iterator;

    void add(const Key& key, coeff_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (inserted) return;
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }

    /// this += scale * other
    void add_scaled(const CoeffTable& other, coeff_t scale) {
        if (scale == 0) return;
        for (const auto& [k, c] : other.terms_) add(k, checked_mul(c, scale));
    }

    coeff_t get(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? 0 : it->second;
    }

    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }
    const map_type& terms() const noexcept { return terms_; }

    bool operator==(const CoeffTable&) const = default;

private:
    map_type terms_;
};

/// q^d sigma_nu in QH*(Gr(m, n)).
struct GrTerm {
    Partition nu;
    int d = 0;
    auto operator<=>(const GrTerm&) const = default;
    bool operator==(const GrTerm&) const = default;
};

/// q^d sigma_w in QH*(Fl_n).
struct FlTerm {
    Permutation w;
    DegreeVector d;
    auto operator<=>(const FlTerm&) const = default;
    bool operator==(const FlTerm&) const = default;
};

using GrTable = CoeffTable<GrTerm>;
using FlTable = CoeffTable<FlTerm>;

}  // namespace qschub

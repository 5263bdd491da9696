#pragma once

// Structure constants of QH*(Fl_n) for small n: quantum Schubert
// polynomials obtained by quantizing the standard elementary monomial
// expansion of Schubert polynomials, folded onto the quantum Monk rule.

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "qschub/maps.hpp"
#include "qschub/oracle/coeff_table.hpp"

namespace qschub {

/// Largest n handled by the flag oracle.  The elementary-monomial change of
/// basis is an n! x n! system, which sets the practical limit.
inline constexpr int kMaxFlagN = 6;

using Exponents = std::array<std::int8_t, 8>;

struct QMonomial {
    Exponents x{};
    Exponents q{};
    auto operator<=>(const QMonomial&) const = default;
    bool operator==(const QMonomial&) const = default;
};

using XPoly = CoeffTable<Exponents>;
using QPoly = CoeffTable<QMonomial>;

XPoly multiply(const XPoly& a, const XPoly& b);
QPoly multiply(const QPoly& a, const QPoly& b);

/// (f - s_i f) / (x_i - x_{i+1}).
XPoly divided_difference(const XPoly& f, int i);

/// Classical Schubert polynomial, memoized.
const XPoly& schubert_poly(const Permutation& w);

/// Coefficients of f on e_{i_1}(x_1) e_{i_2}(x_1,x_2) ... e_{i_{n-1}}(x_1..x_{n-1}),
/// keyed by (i_1, ..., i_{n-1}).  f must be supported on x^a with a_j <= n - j.
std::map<std::vector<int>, coeff_t> elementary_expansion(const XPoly& f, int n);

/// Quantum elementary polynomial E_i^k in x_1..x_k, q_1..q_{k-1}.
const QPoly& quantum_elementary(int i, int k);

/// Quantum Schubert polynomial, memoized.
const QPoly& quantum_schubert_poly(const Permutation& w);

/// sigma_{s_i} * sigma_w.
FlTable quantum_monk_fl(int i, const Permutation& w);

/// Full expansion of sigma_u * sigma_v, memoized.
const FlTable& quantum_product_fl(const Permutation& u, const Permutation& v);

coeff_t quantum_lr_fl(const FlIndex& x);

/// Classical expansion of S_u S_v in H*(Fl_n): the coefficient of sigma_w is
/// the constant term of the divided difference of S_u S_v along w.
FlTable classical_product_fl(const Permutation& u, const Permutation& v);

/// Drops every term with a nonzero q-degree.
FlTable specialize_q_zero(const FlTable& table);

}  // namespace qschub

#pragma once

// Permutations in one-line notation, degree vectors, and the statistics and
// bijections linking permutations with few descents to partitions.
//
// Windows are 1-based: w(i) for i in [n].  Composition is
// (uv)(i) = u(v(i)).

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qschub/shapes.hpp"

namespace qschub {

class Permutation {
public:
    Permutation() = default;
    Permutation(std::initializer_list<int> window);
    /// Throws DomainError unless window is a bijection of [n].
    explicit Permutation(std::vector<int> window);

    static Permutation identity(int n);

    int n() const noexcept { return static_cast<int>(window_.size()); }
    int operator()(int i) const { return window_[i - 1]; }
    const std::vector<int>& window() const noexcept { return window_; }
    /// Inversion count.
    int length() const noexcept;
    bool is_identity() const noexcept;

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> window_;
};

/// Integer vector indexed by [k], k = n - 1.  Entries outside [k] read as 0.
class DegreeVector {
public:
    DegreeVector() = default;
    DegreeVector(std::initializer_list<int> entries) : entries_(entries) {}
    explicit DegreeVector(std::vector<int> entries) : entries_(std::move(entries)) {}

    static DegreeVector zero(int k) { return DegreeVector(std::vector<int>(k, 0)); }
    /// epsilon_i in length k; i = 0 or i = k + 1 gives the zero vector.
    static DegreeVector unit(int k, int i);
    /// Entry i is max(0, height - |i - center|).
    static DegreeVector palindromic(int k, int center, int height);

    int k() const noexcept { return static_cast<int>(entries_.size()); }
    int entry(int i) const noexcept { return (i >= 1 && i <= k()) ? entries_[i - 1] : 0; }
    const std::vector<int>& entries() const noexcept { return entries_; }
    int total() const noexcept;
    bool nonnegative() const noexcept;
    bool is_zero() const noexcept;
    DegreeVector reversed() const;

    DegreeVector operator+(const DegreeVector& o) const;
    DegreeVector operator-(const DegreeVector& o) const;

    auto operator<=>(const DegreeVector&) const = default;
    bool operator==(const DegreeVector&) const = default;

private:
    std::vector<int> entries_;
};

std::string to_string(const Permutation& w);
std::string to_string(const DegreeVector& d);

/// Inv_i(w) = #{j > i : w_i > w_j}, length n.
std::vector<int> inv_sequence(const Permutation& w);
/// Descent positions in [n-1], increasing.
std::vector<int> descents(const Permutation& w);
DegreeVector descent_vector(const Permutation& w);

Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& w);
/// w t_ab: swaps the entries in positions a and b.
Permutation times_transposition(const Permutation& w, int a, int b);
/// w s_i.
Permutation times_simple(const Permutation& w, int i);

Permutation w0(int n);
Permutation w0_P(int m, int n);
/// [1 .. i-1 | j+1 .. i | j+2 .. n]: reverses the block of positions
/// i..j+1; the identity when i > j.
Permutation w0_interval(int i, int j, int n);
/// Longest element of the parabolic generated by all simple reflections
/// except s_{m-d}, s_m, s_{m+d}.
Permutation w0_P_prime(int m, int n, int d);

/// The permutation with at most one descent, at j, attached to lambda
/// inside the j x (n-j) rectangle: w(i) = lambda_{j-i+1} + i for i <= j.
Permutation grassmann_window(const Partition& lambda, int j, int n);
/// Inverse of grassmann_window for the same j.
Partition grassmann_partition(const Permutation& w, int j);

Permutation grassmann_from_partition(const Partition& lambda, const RectContext& ctx);
Partition partition_from_grassmann(const Permutation& w, int m);

/// w0 w w0.
Permutation conjugate(const Permutation& w);

/// zeta_i(w) = Inv_i(w0 w) + C(n-i, 2) for i in [k]; exactly k entries.
std::vector<int> zeta(const Permutation& w);
Partition lambda_tilde(const Permutation& w);
Partition lambda_tilde_down(const Permutation& w);

/// Grassmann permutation with descent j whose lambda_tilde_down is eta.
/// Requires eta inside (j^{n-j}).
Permutation varphi(const Partition& eta, int j, int n);

/// For D(w) = {a, b}, a < b: returns (w2, w1) with w = w2 w1, w2 having its
/// only descent at a and w1 fixing [a].
std::pair<Permutation, Permutation> factor_two_descents(const Permutation& w);

/// Sum of d_i (eps_{i-1} - 2 eps_i + eps_{i+1}), with eps_0 = eps_n = 0.
DegreeVector tilde_d(const DegreeVector& d);

}  // namespace qschub

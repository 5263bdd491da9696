#pragma once

// Partitions, m x r rectangles, boundary bit strings and the shape-level
// constructions built on them: complements, cycling, n-rim hook addition
// with heads in column r, k-rectangle reduction.
//
// Partitions are listed largest part first.  In the French picture row 1
// (the first listed part) is the bottom row.

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qschub {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Trailing zeros are stripped; throws std::invalid_argument unless the
    /// sequence is weakly decreasing and nonnegative.
    explicit Partition(std::vector<int> parts);

    /// (cols^rows)
    static Partition rectangle(int rows, int cols);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }
    /// 1-indexed part, zero beyond the length.
    int part(int i) const noexcept;
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    bool fits_in(int rows, int cols) const noexcept;
    bool contains(const Partition& other) const noexcept;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Ambient m x r rectangle R_r = (r^m); n = m + r, k = n - 1.
class RectContext {
public:
    RectContext(int m, int r);
    static RectContext from_mn(int m, int n) { return RectContext(m, n - m); }

    int m() const noexcept { return m_; }
    int r() const noexcept { return r_; }
    int n() const noexcept { return m_ + r_; }
    int k() const noexcept { return m_ + r_ - 1; }
    Partition rectangle() const { return Partition::rectangle(m_, r_); }
    bool contains(const Partition& p) const noexcept { return p.fits_in(m_, r_); }

    bool operator==(const RectContext&) const = default;

private:
    int m_;
    int r_;
};

/// Boundary word of a shape in R_r: m zeros (vertical steps) and r ones
/// (horizontal steps), read from the upper-left corner of the rectangle.
class BitString {
public:
    /// Accepts any string over {0,1}.
    explicit BitString(std::string bits);

    const std::string& str() const noexcept { return bits_; }
    int size() const noexcept { return static_cast<int>(bits_.size()); }
    int zeros() const noexcept;
    int ones() const noexcept { return size() - zeros(); }
    BitString reversed() const;

    bool operator==(const BitString&) const = default;

private:
    std::string bits_;
};

/// Comma-separated parts, "" for the empty partition.
std::string to_string(const Partition& lambda);

Partition complement(const Partition& lambda, const RectContext& ctx);
/// Complement inside the (cols^rows) rectangle.
Partition complement_in(const Partition& lambda, int rows, int cols);
Partition transpose(const Partition& lambda);
/// Column counts of an arbitrary nonnegative sequence (the transpose of the
/// sequence's Ferrers picture, even when the sequence is not sorted).
Partition column_counts(const std::vector<int>& seq);

/// Coordinatewise sum with zero padding.
Partition add(const Partition& a, const Partition& b);
/// (a, b): the parts of a followed by the parts of b.  Throws unless the
/// result is weakly decreasing.
Partition concat(const Partition& a, const Partition& b);

BitString to_bits(const Partition& lambda, const RectContext& ctx);
Partition from_bits(const BitString& bits, const RectContext& ctx);

/// Moves the first a bits to the end; a is taken mod the length.
BitString cycle(const BitString& bits, int a);
/// phi^a on shapes in R_r.
Partition cycle_shape(const Partition& lambda, int a, const RectContext& ctx);

/// Number of cells on the main diagonal: #{i : lambda_i >= i}.
int diag0(const Partition& lambda);

/// nu (+) d by the closed form, cross-checked against direct insertion of
/// d n-rim hooks with heads in column r.  Requires nu in R_r, 0 <= d <= r.
Partition add_rim_hooks(const Partition& nu, int d, const RectContext& ctx);
/// Closed-form branch alone.
Partition add_rim_hooks_closed(const Partition& nu, int d, const RectContext& ctx);
/// Geometric branch alone: successive n-rim hook insertions on the abacus.
/// Throws std::logic_error if the insertion is not uniquely determined.
Partition add_rim_hooks_direct(const Partition& nu, int d, const RectContext& ctx);

/// Inverse of add_rim_hooks: returns (nu, d) with nu (+) d == eta, or
/// nullopt when eta is not of that form.
std::optional<std::pair<Partition, int>> peel_rim_hooks(const Partition& eta,
                                                        const RectContext& ctx);

/// diag0 of the complement of the part of eta inside R_r (first m parts,
/// each capped at r).
int corner_diagonal(const Partition& eta, const RectContext& ctx);

/// diag0((nu (+) d)^vee) computed on the shape itself.
int t_of(const Partition& nu, int d, const RectContext& ctx);

/// (eta^1, eta^2): the first m - t parts and the rest.
std::pair<Partition, Partition> split_eta(const Partition& nu_plus_d, int t,
                                          const RectContext& ctx);

/// (rho^{L^t}, rho^{R^t}) through transposes.  Requires (t^t) inside rho.
std::pair<Partition, Partition> rho_split(const Partition& rho, int t);

/// R_i = (i^{n-i}).
Partition k_rectangle(int i, int n);

struct Reduction {
    Partition irreducible;
    std::vector<int> removed;  // indices i of removed R_i, largest first
};

/// Strips every removable k-rectangle.  Requires all parts <= k.
Reduction reduce_irreducible(const Partition& mu, int k);

}  // namespace qschub

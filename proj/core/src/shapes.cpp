#include "qschub/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qschub/errors.hpp"

namespace qschub {

namespace {

std::string rect_name(int rows, int cols) {
    return "(" + std::to_string(cols) + "^" + std::to_string(rows) + ")";
}

void require_in_rect(const Partition& lambda, const RectContext& ctx, const char* what) {
    if (!ctx.contains(lambda))
        throw DomainError(std::string(what) + ": partition (" + to_string(lambda) +
                          ") is not contained in " + rect_name(ctx.m(), ctx.r()));
}

// Abacus with a fixed number of beads.  Bead j (1-based, largest first)
// sits at position part_j + L - j.
using Beads = std::set<int, std::greater<>>;

Beads to_beads(const Partition& p, int L) {
    Beads b;
    for (int j = 1; j <= L; ++j) b.insert(p.part(j) + L - j);
    return b;
}

Partition from_beads(const Beads& b) {
    const int L = static_cast<int>(b.size());
    std::vector<int> parts;
    parts.reserve(b.size());
    int j = 1;
    for (int pos : b) parts.push_back(pos - (L - j++));
    return Partition(std::move(parts));
}

// Part carried by the bead at pos.
int part_at(const Beads& b, int pos) {
    const int L = static_cast<int>(b.size());
    const int rank = static_cast<int>(std::distance(b.begin(), b.upper_bound(pos)));
    return pos - (L - rank);
}

void insert_hooks(const Beads& b, int remaining, int n, int r, std::set<Partition>& out) {
    if (remaining == 0) {
        out.insert(from_beads(b));
        return;
    }
    for (int pos : b) {
        if (b.count(pos + n)) continue;
        Beads next = b;
        next.erase(pos);
        next.insert(pos + n);
        if (part_at(next, pos + n) != r) continue;
        insert_hooks(next, remaining - 1, n, r, out);
    }
}

void peel_hooks(const Beads& b, int removed, const RectContext& ctx,
                std::set<std::pair<Partition, int>>& out) {
    Partition cur = from_beads(b);
    if (cur.length() <= ctx.m()) {
        if (cur.largest() <= ctx.r() && removed <= ctx.r()) out.emplace(cur, removed);
        return;
    }
    for (int pos : b) {
        if (pos - ctx.n() < 0 || b.count(pos - ctx.n())) continue;
        if (part_at(b, pos) != ctx.r()) continue;
        Beads next = b;
        next.erase(pos);
        next.insert(pos - ctx.n());
        peel_hooks(next, removed + 1, ctx, out);
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw DomainError("partition has a negative part: " + std::to_string(parts_[i]));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing, got " +
                              std::to_string(parts_[i - 1]) + " before " +
                              std::to_string(parts_[i]));
    }
}

Partition Partition::rectangle(int rows, int cols) {
    if (rows < 0 || cols < 0) throw DomainError("rectangle with negative side");
    return Partition(std::vector<int>(rows, cols));
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

bool Partition::fits_in(int rows, int cols) const noexcept {
    return length() <= rows && largest() <= cols;
}

bool Partition::contains(const Partition& other) const noexcept {
    if (other.length() > length()) return false;
    for (int i = 1; i <= other.length(); ++i)
        if (other.part(i) > part(i)) return false;
    return true;
}

RectContext::RectContext(int m, int r) : m_(m), r_(r) {
    if (m < 1 || r < 1)
        throw DomainError("rectangle needs m >= 1 and r >= 1, got m=" + std::to_string(m) +
                          " r=" + std::to_string(r));
}

BitString::BitString(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_)
        if (c != '0' && c != '1') throw DomainError("bit string may only contain 0 and 1");
}

int BitString::zeros() const noexcept {
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), '0'));
}

BitString BitString::reversed() const { return BitString(std::string(bits_.rbegin(), bits_.rend())); }

std::string to_string(const Partition& lambda) {
    std::string s;
    for (int p : lambda.parts()) {
        if (!s.empty()) s += ',';
        s += std::to_string(p);
    }
    return s;
}

Partition complement_in(const Partition& lambda, int rows, int cols) {
    if (!lambda.fits_in(rows, cols))
        throw DomainError("complement: partition (" + to_string(lambda) +
                          ") is not contained in " + rect_name(rows, cols));
    std::vector<int> parts(rows);
    for (int i = 1; i <= rows; ++i) parts[i - 1] = cols - lambda.part(rows - i + 1);
    return Partition(std::move(parts));
}

Partition complement(const Partition& lambda, const RectContext& ctx) {
    return complement_in(lambda, ctx.m(), ctx.r());
}

Partition column_counts(const std::vector<int>& seq) {
    int top = 0;
    for (int x : seq) {
        if (x < 0) throw DomainError("column_counts: negative entry");
        top = std::max(top, x);
    }
    std::vector<int> cols(top, 0);
    for (int x : seq)
        for (int j = 0; j < x; ++j) ++cols[j];
    return Partition(std::move(cols));
}

Partition transpose(const Partition& lambda) { return column_counts(lambda.parts()); }

Partition add(const Partition& a, const Partition& b) {
    const int len = std::max(a.length(), b.length());
    std::vector<int> parts(len);
    for (int i = 1; i <= len; ++i) parts[i - 1] = a.part(i) + b.part(i);
    return Partition(std::move(parts));
}

Partition concat(const Partition& a, const Partition& b) {
    if (!b.empty() && a.length() > 0 && a.parts().back() < b.largest())
        throw DomainError("concat: (" + to_string(a) + ") followed by (" + to_string(b) +
                          ") is not a partition");
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(parts));
}

BitString to_bits(const Partition& lambda, const RectContext& ctx) {
    require_in_rect(lambda, ctx, "to_bits");
    const int m = ctx.m();
    std::string bits;
    bits.reserve(ctx.n());
    int prev = 0;
    for (int i = m; i >= 1; --i) {
        bits.append(lambda.part(i) - prev, '1');
        bits.push_back('0');
        prev = lambda.part(i);
    }
    bits.append(ctx.r() - prev, '1');
    return BitString(std::move(bits));
}

Partition from_bits(const BitString& bits, const RectContext& ctx) {
    if (bits.zeros() != ctx.m() || bits.ones() != ctx.r())
        throw DomainError("from_bits: '" + bits.str() + "' needs " + std::to_string(ctx.m()) +
                          " zeros and " + std::to_string(ctx.r()) + " ones");
    std::vector<int> parts(ctx.m());
    int ones = 0;
    int zero_index = 0;
    for (char c : bits.str()) {
        if (c == '1') {
            ++ones;
        } else {
            ++zero_index;
            parts[ctx.m() - zero_index] = ones;
        }
    }
    return Partition(std::move(parts));
}

BitString cycle(const BitString& bits, int a) {
    const int n = bits.size();
    if (n == 0) return bits;
    a = ((a % n) + n) % n;
    return BitString(bits.str().substr(a) + bits.str().substr(0, a));
}

Partition cycle_shape(const Partition& lambda, int a, const RectContext& ctx) {
    return from_bits(cycle(to_bits(lambda, ctx), a), ctx);
}

int diag0(const Partition& lambda) {
    int count = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.part(i) >= i) ++count;
    return count;
}

static void check_hook_args(const Partition& nu, int d, const RectContext& ctx) {
    require_in_rect(nu, ctx, "add_rim_hooks");
    if (d < 0 || d > ctx.r())
        throw DomainError("add_rim_hooks: need 0 <= d <= r = " + std::to_string(ctx.r()) +
                          ", got d=" + std::to_string(d));
}

Partition add_rim_hooks_closed(const Partition& nu, int d, const RectContext& ctx) {
    check_hook_args(nu, d, ctx);
    if (d == 0) return nu;
    const int m = ctx.m();
    const int r = ctx.r();
    const int a = (r - d == 0) ? m : transpose(nu).part(r - d);
    std::vector<int> parts(d + a, r);
    for (int i = a + 1; i <= m; ++i) parts.push_back(nu.part(i) + d);
    for (int i = 1; i <= a; ++i) parts.push_back(nu.part(i) - r + d);
    return Partition(std::move(parts));
}

Partition add_rim_hooks_direct(const Partition& nu, int d, const RectContext& ctx) {
    check_hook_args(nu, d, ctx);
    const int L = ctx.m() + d * ctx.n();
    std::set<Partition> results;
    insert_hooks(to_beads(nu, L), d, ctx.n(), ctx.r(), results);
    if (results.size() != 1)
        throw std::logic_error("rim hook insertion for (" + to_string(nu) + "), d=" +
                               std::to_string(d) + " produced " +
                               std::to_string(results.size()) + " shapes");
    return *results.begin();
}

Partition add_rim_hooks(const Partition& nu, int d, const RectContext& ctx) {
    Partition closed = add_rim_hooks_closed(nu, d, ctx);
    Partition direct = add_rim_hooks_direct(nu, d, ctx);
    if (closed != direct)
        throw std::logic_error("rim hook closed form (" + to_string(closed) +
                               ") disagrees with insertion (" + to_string(direct) + ")");
    return closed;
}

std::optional<std::pair<Partition, int>> peel_rim_hooks(const Partition& eta,
                                                        const RectContext& ctx) {
    const int L = eta.length() + ctx.n();
    std::set<std::pair<Partition, int>> found;
    peel_hooks(to_beads(eta, L), 0, ctx, found);
    std::optional<std::pair<Partition, int>> result;
    for (const auto& [nu, d] : found) {
        if (add_rim_hooks_closed(nu, d, ctx) != eta) continue;
        if (result && *result != std::make_pair(nu, d))
            throw std::logic_error("rim hook peeling of (" + to_string(eta) + ") is ambiguous");
        result.emplace(nu, d);
    }
    return result;
}

int corner_diagonal(const Partition& eta, const RectContext& ctx) {
    std::vector<int> inside(ctx.m());
    for (int i = 1; i <= ctx.m(); ++i) inside[i - 1] = std::min(eta.part(i), ctx.r());
    return diag0(complement(Partition(std::move(inside)), ctx));
}

int t_of(const Partition& nu, int d, const RectContext& ctx) {
    return corner_diagonal(add_rim_hooks(nu, d, ctx), ctx);
}

std::pair<Partition, Partition> split_eta(const Partition& nu_plus_d, int t,
                                          const RectContext& ctx) {
    if (t < 0 || t > ctx.m())
        throw DomainError("split_eta: need 0 <= t <= m = " + std::to_string(ctx.m()) +
                          ", got t=" + std::to_string(t));
    const auto& p = nu_plus_d.parts();
    const std::size_t cut = std::min<std::size_t>(ctx.m() - t, p.size());
    return {Partition(std::vector<int>(p.begin(), p.begin() + cut)),
            Partition(std::vector<int>(p.begin() + cut, p.end()))};
}

std::pair<Partition, Partition> rho_split(const Partition& rho, int t) {
    if (t < 0 || rho.part(t) < t)
        throw DomainError("rho_split: (" + std::to_string(t) + "^" + std::to_string(t) +
                          ") is not contained in (" + to_string(rho) + ")");
    const Partition rt = transpose(rho);
    std::vector<int> left(t);
    for (int j = 1; j <= t; ++j) left[j - 1] = rt.part(j) - t;
    std::vector<int> right;
    for (int j = t + 1; j <= rt.length(); ++j) right.push_back(rt.part(j));
    return {transpose(Partition(std::move(left))), transpose(Partition(std::move(right)))};
}

Partition k_rectangle(int i, int n) {
    if (i < 1 || i > n - 1)
        throw DomainError("k_rectangle: need 1 <= i <= " + std::to_string(n - 1) + ", got " +
                          std::to_string(i));
    return Partition::rectangle(n - i, i);
}

Reduction reduce_irreducible(const Partition& mu, int k) {
    if (k < 1) throw DomainError("reduce_irreducible: k must be positive");
    if (mu.largest() > k)
        throw DomainError("reduce_irreducible: (" + to_string(mu) + ") is not " +
                          std::to_string(k) + "-bounded");
    const int n = k + 1;
    std::vector<int> mult(k + 1, 0);
    for (int p : mu.parts()) ++mult[p];
    Reduction out;
    for (int i = k; i >= 1; --i) {
        const int copies = mult[i] / (n - i);
        out.removed.insert(out.removed.end(), copies, i);
        mult[i] -= copies * (n - i);
    }
    std::vector<int> parts;
    for (int i = k; i >= 1; --i) parts.insert(parts.end(), mult[i], i);
    out.irreducible = Partition(std::move(parts));
    return out;
}

}  // namespace qschub

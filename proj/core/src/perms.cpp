#include "qschub/perms.hpp"

#include <algorithm>
#include <numeric>

#include "qschub/errors.hpp"

namespace qschub {

namespace {

void require_same_n(const Permutation& u, const Permutation& v, const char* what) {
    if (u.n() != v.n())
        throw DomainError(std::string(what) + ": permutations of different sizes " +
                          std::to_string(u.n()) + " and " + std::to_string(v.n()));
}

int choose2(int x) { return x * (x - 1) / 2; }

}  // namespace

Permutation::Permutation(std::initializer_list<int> window)
    : Permutation(std::vector<int>(window)) {}

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
    const int n = static_cast<int>(window_.size());
    std::vector<bool> seen(n + 1, false);
    for (int x : window_) {
        if (x < 1 || x > n || seen[x])
            throw DomainError("window is not a permutation of 1.." + std::to_string(n));
        seen[x] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw DomainError("permutation size must be nonnegative");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

int Permutation::length() const noexcept {
    int count = 0;
    for (std::size_t i = 0; i < window_.size(); ++i)
        for (std::size_t j = i + 1; j < window_.size(); ++j)
            if (window_[i] > window_[j]) ++count;
    return count;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < window_.size(); ++i)
        if (window_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

DegreeVector DegreeVector::unit(int k, int i) {
    DegreeVector v = zero(k);
    if (i >= 1 && i <= k) v.entries_[i - 1] = 1;
    return v;
}

DegreeVector DegreeVector::palindromic(int k, int center, int height) {
    std::vector<int> e(k);
    for (int i = 1; i <= k; ++i) e[i - 1] = std::max(0, height - std::abs(i - center));
    return DegreeVector(std::move(e));
}

int DegreeVector::total() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

bool DegreeVector::nonnegative() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x >= 0; });
}

bool DegreeVector::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x == 0; });
}

DegreeVector DegreeVector::reversed() const {
    return DegreeVector(std::vector<int>(entries_.rbegin(), entries_.rend()));
}

DegreeVector DegreeVector::operator+(const DegreeVector& o) const {
    if (k() != o.k()) throw DomainError("degree vectors of different lengths");
    std::vector<int> e(entries_);
    for (int i = 0; i < k(); ++i) e[i] += o.entries_[i];
    return DegreeVector(std::move(e));
}

DegreeVector DegreeVector::operator-(const DegreeVector& o) const {
    if (k() != o.k()) throw DomainError("degree vectors of different lengths");
    std::vector<int> e(entries_);
    for (int i = 0; i < k(); ++i) e[i] -= o.entries_[i];
    return DegreeVector(std::move(e));
}

std::string to_string(const Permutation& w) {
    std::string s;
    for (int x : w.window()) {
        if (!s.empty()) s += ',';
        s += std::to_string(x);
    }
    return s;
}

std::string to_string(const DegreeVector& d) {
    std::string s;
    for (int x : d.entries()) {
        if (!s.empty()) s += ',';
        s += std::to_string(x);
    }
    return s;
}

std::vector<int> inv_sequence(const Permutation& w) {
    const int n = w.n();
    std::vector<int> inv(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++inv[i - 1];
    return inv;
}

std::vector<int> descents(const Permutation& w) {
    std::vector<int> d;
    for (int i = 1; i < w.n(); ++i)
        if (w(i) > w(i + 1)) d.push_back(i);
    return d;
}

DegreeVector descent_vector(const Permutation& w) {
    DegreeVector v = DegreeVector::zero(std::max(0, w.n() - 1));
    std::vector<int> e(v.entries());
    for (int i : descents(w)) e[i - 1] = 1;
    return DegreeVector(std::move(e));
}

Permutation compose(const Permutation& u, const Permutation& v) {
    require_same_n(u, v, "compose");
    std::vector<int> w(u.n());
    for (int i = 1; i <= u.n(); ++i) w[i - 1] = u(v(i));
    return Permutation(std::move(w));
}

Permutation inverse(const Permutation& w) {
    std::vector<int> inv(w.n());
    for (int i = 1; i <= w.n(); ++i) inv[w(i) - 1] = i;
    return Permutation(std::move(inv));
}

Permutation times_transposition(const Permutation& w, int a, int b) {
    if (a < 1 || b < 1 || a > w.n() || b > w.n())
        throw DomainError("transposition index out of range");
    std::vector<int> win = w.window();
    std::swap(win[a - 1], win[b - 1]);
    return Permutation(std::move(win));
}

Permutation times_simple(const Permutation& w, int i) { return times_transposition(w, i, i + 1); }

Permutation w0(int n) {
    std::vector<int> w(n);
    for (int i = 1; i <= n; ++i) w[i - 1] = n + 1 - i;
    return Permutation(std::move(w));
}

Permutation w0_P(int m, int n) {
    if (m < 1 || m >= n)
        throw DomainError("w0_P: need 1 <= m < n, got m=" + std::to_string(m) +
                          " n=" + std::to_string(n));
    std::vector<int> w(n);
    for (int i = 1; i <= m; ++i) w[i - 1] = m + 1 - i;
    for (int i = m + 1; i <= n; ++i) w[i - 1] = n + m + 1 - i;
    return Permutation(std::move(w));
}

Permutation w0_interval(int i, int j, int n) {
    Permutation id = Permutation::identity(n);
    if (i > j) return id;
    if (i < 1 || j + 1 > n)
        throw DomainError("w0_interval: block " + std::to_string(i) + ".." +
                          std::to_string(j + 1) + " is outside [1," + std::to_string(n) + "]");
    std::vector<int> w = id.window();
    std::reverse(w.begin() + (i - 1), w.begin() + (j + 1));
    return Permutation(std::move(w));
}

Permutation w0_P_prime(int m, int n, int d) {
    if (m < 1 || m >= n)
        throw DomainError("w0_P_prime: need 1 <= m < n, got m=" + std::to_string(m) +
                          " n=" + std::to_string(n));
    if (d < 0 || d > std::min(m, n - m))
        throw DomainError("w0_P_prime: need 0 <= d <= min(m, n-m), got d=" + std::to_string(d));
    const int k = n - 1;
    Permutation w = w0_interval(1, m - d - 1, n);
    w = compose(w, w0_interval(m - d + 1, m - 1, n));
    w = compose(w, w0_interval(m + 1, m + d - 1, n));
    return compose(w, w0_interval(m + d + 1, k, n));
}

Permutation grassmann_window(const Partition& lambda, int j, int n) {
    if (j < 0 || j > n) throw DomainError("grassmann_window: descent position out of range");
    if (!lambda.fits_in(j, n - j))
        throw DomainError("grassmann_window: partition (" + to_string(lambda) +
                          ") is not contained in (" + std::to_string(n - j) + "^" +
                          std::to_string(j) + ")");
    std::vector<int> w;
    w.reserve(n);
    std::vector<bool> used(n + 1, false);
    for (int i = 1; i <= j; ++i) {
        w.push_back(lambda.part(j - i + 1) + i);
        used[w.back()] = true;
    }
    for (int x = 1; x <= n; ++x)
        if (!used[x]) w.push_back(x);
    return Permutation(std::move(w));
}

Partition grassmann_partition(const Permutation& w, int j) {
    for (int i : descents(w))
        if (i != j)
            throw DomainError("permutation " + to_string(w) + " has a descent at " +
                              std::to_string(i) + ", expected only at " + std::to_string(j));
    std::vector<int> parts(j);
    for (int i = 1; i <= j; ++i) parts[i - 1] = w(j - i + 1) - (j - i + 1);
    return Partition(std::move(parts));
}

Permutation grassmann_from_partition(const Partition& lambda, const RectContext& ctx) {
    if (!ctx.contains(lambda))
        throw DomainError("partition (" + to_string(lambda) + ") is not contained in (" +
                          std::to_string(ctx.r()) + "^" + std::to_string(ctx.m()) + ")");
    return grassmann_window(lambda, ctx.m(), ctx.n());
}

Partition partition_from_grassmann(const Permutation& w, int m) {
    if (m < 0 || m > w.n()) throw DomainError("partition_from_grassmann: m out of range");
    return grassmann_partition(w, m);
}

Permutation conjugate(const Permutation& w) {
    const int n = w.n();
    std::vector<int> c(n);
    for (int i = 1; i <= n; ++i) c[n - i] = n + 1 - w(i);
    return Permutation(std::move(c));
}

std::vector<int> zeta(const Permutation& w) {
    const int n = w.n();
    const std::vector<int> inv = inv_sequence(compose(w0(n), w));
    std::vector<int> z(std::max(0, n - 1));
    for (int i = 1; i <= n - 1; ++i) z[i - 1] = inv[i - 1] + choose2(n - i);
    return z;
}

Partition lambda_tilde(const Permutation& w) { return column_counts(zeta(w)); }

Partition lambda_tilde_down(const Permutation& w) {
    if (w.n() < 2) return Partition();
    return reduce_irreducible(lambda_tilde(w), w.n() - 1).irreducible;
}

Permutation varphi(const Partition& eta, int j, int n) {
    if (j < 0 || j > n) throw DomainError("varphi: j out of range");
    for (int i = 1; i <= eta.length(); ++i) {
        if (i > n - j || eta.part(i) > j)
            throw DomainError("varphi: row " + std::to_string(i) + " of (" + to_string(eta) +
                              ") lies outside (" + std::to_string(j) + "^" +
                              std::to_string(n - j) + ")");
    }
    return grassmann_window(transpose(complement_in(eta, n - j, j)), j, n);
}

std::pair<Permutation, Permutation> factor_two_descents(const Permutation& w) {
    const std::vector<int> d = descents(w);
    if (d.size() != 2)
        throw DomainError("factor_two_descents: " + to_string(w) + " has " +
                          std::to_string(d.size()) + " descents, expected 2");
    const int a = d[0];
    const int n = w.n();
    std::vector<int> w2(w.window().begin(), w.window().begin() + a);
    std::vector<int> tail(w.window().begin() + a, w.window().end());
    std::vector<int> sorted_tail = tail;
    std::sort(sorted_tail.begin(), sorted_tail.end());
    w2.insert(w2.end(), sorted_tail.begin(), sorted_tail.end());

    std::vector<int> w1(n);
    std::iota(w1.begin(), w1.begin() + a, 1);
    for (int i = a; i < n; ++i) {
        const auto rank = std::lower_bound(sorted_tail.begin(), sorted_tail.end(), tail[i - a]) -
                          sorted_tail.begin();
        w1[i] = a + 1 + static_cast<int>(rank);
    }
    return {Permutation(std::move(w2)), Permutation(std::move(w1))};
}

DegreeVector tilde_d(const DegreeVector& d) {
    const int k = d.k();
    std::vector<int> e(k);
    for (int j = 1; j <= k; ++j) e[j - 1] = d.entry(j + 1) - 2 * d.entry(j) + d.entry(j - 1);
    return DegreeVector(std::move(e));
}

}  // namespace qschub

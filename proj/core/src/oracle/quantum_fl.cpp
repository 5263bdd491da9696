#include "qschub/oracle/quantum_fl.hpp"

#include <algorithm>
#include <tuple>

#include "detail/memo.hpp"
#include "qschub/enumerate.hpp"
#include "qschub/errors.hpp"

namespace qschub {

namespace {

void require_small(int n, const char* what) {
    if (n < 1 || n > kMaxFlagN)
        throw DomainError(std::string(what) + ": flag oracle supports 1 <= n <= " +
                          std::to_string(kMaxFlagN) + ", got n=" + std::to_string(n));
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
    Exponents out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::int8_t>(a[i] + b[i]);
    return out;
}

// Arithmetic modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    const u128 p = static_cast<u128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    return s >= kPrime ? s - kPrime : s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t to_mod(coeff_t c) {
    const auto p = static_cast<coeff_t>(kPrime);
    coeff_t r = c % p;
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

coeff_t lift(std::uint64_t v) {
    return v > kPrime / 2 ? static_cast<coeff_t>(v) - static_cast<coeff_t>(kPrime)
                          : static_cast<coeff_t>(v);
}

// Mixed-radix index of a staircase exponent (a_j <= n - j).
int staircase_index(const Exponents& a, int n) {
    int idx = 0;
    for (int j = 1; j <= n - 1; ++j) idx = idx * (n - j + 1) + a[j - 1];
    return idx;
}

std::vector<std::vector<int>> elementary_sequences(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(std::max(0, n - 1), 0);
    while (true) {
        out.push_back(cur);
        int k = n - 1;
        while (k >= 1 && cur[k - 1] == k) cur[k - 1] = 0, --k;
        if (k < 1) break;
        ++cur[k - 1];
    }
    return out;
}

XPoly elementary_poly(int i, int k) {
    XPoly out;
    if (i < 0 || i > k) return out;
    std::vector<bool> pick(k, false);
    std::fill(pick.begin(), pick.begin() + i, true);
    do {
        Exponents e{};
        for (int j = 0; j < k; ++j) e[j] = pick[j] ? 1 : 0;
        out.add(e, 1);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

XPoly elementary_monomial(const std::vector<int>& seq) {
    XPoly out;
    out.add(Exponents{}, 1);
    for (std::size_t k = 1; k <= seq.size(); ++k)
        out = multiply(out, elementary_poly(seq[k - 1], static_cast<int>(k)));
    return out;
}

// Integer inverse of the change of basis from elementary monomials to
// staircase monomials.  Both are Z-bases of the same lattice, so the
// inverse is integral; it is found modulo a large prime and lifted.
struct ElementaryBasis {
    int n = 0;
    std::vector<std::vector<int>> sequences;
    std::vector<XPoly> monomials;
    std::vector<std::vector<coeff_t>> inverse;  // [sequence][staircase]
};

ElementaryBasis build_basis(int n) {
    ElementaryBasis b;
    b.n = n;
    b.sequences = elementary_sequences(n);
    const int N = static_cast<int>(b.sequences.size());
    std::vector<std::vector<std::uint64_t>> a(N, std::vector<std::uint64_t>(2 * N, 0));
    for (int col = 0; col < N; ++col) {
        b.monomials.push_back(elementary_monomial(b.sequences[col]));
        for (const auto& [e, c] : b.monomials.back()) a[staircase_index(e, n)][col] = to_mod(c);
    }
    for (int i = 0; i < N; ++i) a[i][N + i] = 1;

    for (int col = 0; col < N; ++col) {
        int pivot = col;
        while (pivot < N && a[pivot][col] == 0) ++pivot;
        if (pivot == N) throw std::logic_error("elementary monomials are not a basis");
        std::swap(a[pivot], a[col]);
        const std::uint64_t inv = powmod(a[col][col], kPrime - 2);
        for (auto& v : a[col]) v = mulmod(v, inv);
        for (int row = 0; row < N; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const std::uint64_t f = kPrime - a[row][col];
            for (int j = col; j < 2 * N; ++j) {
                if (a[col][j] == 0) continue;
                std::uint64_t v = a[row][j] + mulmod(f, a[col][j]);
                a[row][j] = v >= kPrime ? v - kPrime : v;
            }
        }
    }
    b.inverse.assign(N, std::vector<coeff_t>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) b.inverse[i][j] = lift(a[i][N + j]);
    return b;
}

const ElementaryBasis& elementary_basis(int n) {
    static detail::Memo<int, ElementaryBasis> memo;
    return memo.get(n, [n] { return build_basis(n); });
}

const FlTable& monk_cached(int i, const Permutation& w) {
    static detail::Memo<std::pair<int, Permutation>, FlTable> memo;
    return memo.get({i, w}, [&] { return quantum_monk_fl(i, w); });
}

// x_i . table, where x_i = sigma_{s_i} - sigma_{s_{i-1}}.
FlTable times_x(int i, const FlTable& table) {
    FlTable out;
    for (const auto& [term, c] : table) {
        for (const auto& [t, c2] : monk_cached(i, term.w))
            out.add(FlTerm{t.w, t.d + term.d}, checked_mul(c, c2));
        if (i > 1)
            for (const auto& [t, c2] : monk_cached(i - 1, term.w))
                out.add(FlTerm{t.w, t.d + term.d}, checked_mul(-c, c2));
    }
    return out;
}

// x^a . sigma_u
const FlTable& xpow_times(const Permutation& u, const Exponents& a) {
    static detail::Memo<std::pair<Permutation, Exponents>, FlTable> memo;
    return memo.get({u, a}, [&] {
        int last = -1;
        for (int j = 0; j < static_cast<int>(a.size()); ++j)
            if (a[j] != 0) last = j;
        if (last < 0) {
            FlTable t;
            t.add(FlTerm{u, DegreeVector::zero(u.n() - 1)}, 1);
            return t;
        }
        Exponents lower = a;
        --lower[last];
        return times_x(last + 1, xpow_times(u, lower));
    });
}

FlTable compute_quantum_product(const Permutation& u, const Permutation& v) {
    const int n = u.n();
    FlTable out;
    for (const auto& [mono, c] : quantum_schubert_poly(v)) {
        std::vector<int> qdeg(n - 1);
        for (int j = 0; j < n - 1; ++j) qdeg[j] = mono.q[j];
        const DegreeVector shift(std::move(qdeg));
        for (const auto& [term, c2] : xpow_times(u, mono.x))
            out.add(FlTerm{term.w, term.d + shift}, checked_mul(c, c2));
    }
    return out;
}

}  // namespace

XPoly multiply(const XPoly& a, const XPoly& b) {
    XPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) out.add(add_exponents(ea, eb), checked_mul(ca, cb));
    return out;
}

QPoly multiply(const QPoly& a, const QPoly& b) {
    QPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            out.add(QMonomial{add_exponents(ea.x, eb.x), add_exponents(ea.q, eb.q)},
                    checked_mul(ca, cb));
    return out;
}

XPoly divided_difference(const XPoly& f, int i) {
    if (i < 1 || i + 1 > static_cast<int>(Exponents{}.size()))
        throw DomainError("divided_difference: index out of range");
    XPoly out;
    for (const auto& [e, c] : f) {
        const int p = e[i - 1];
        const int q = e[i];
        if (p == q) continue;
        const int lo = std::min(p, q);
        const int hi = std::max(p, q);
        const coeff_t s = p > q ? c : -c;
        for (int j = 0; j < hi - lo; ++j) {
            Exponents g = e;
            g[i - 1] = static_cast<std::int8_t>(hi - 1 - j);
            g[i] = static_cast<std::int8_t>(lo + j);
            out.add(g, s);
        }
    }
    return out;
}

const XPoly& schubert_poly(const Permutation& w) {
    static detail::Memo<Permutation, XPoly> memo;
    return memo.get(w, [&] {
        const int n = w.n();
        if (n > static_cast<int>(Exponents{}.size()))
            throw DomainError("schubert_poly: n too large");
        for (int i = 1; i < n; ++i) {
            if (w(i) < w(i + 1)) return divided_difference(schubert_poly(times_simple(w, i)), i);
        }
        Exponents top{};
        for (int j = 1; j < n; ++j) top[j - 1] = static_cast<std::int8_t>(n - j);
        XPoly p;
        p.add(top, 1);
        return p;
    });
}

std::map<std::vector<int>, coeff_t> elementary_expansion(const XPoly& f, int n) {
    require_small(n, "elementary_expansion");
    const ElementaryBasis& basis = elementary_basis(n);
    const int N = static_cast<int>(basis.sequences.size());
    std::vector<coeff_t> rhs(N, 0);
    for (const auto& [e, c] : f) {
        for (int j = 1; j <= n - 1; ++j)
            if (e[j - 1] > n - j)
                throw DomainError("elementary_expansion: polynomial is not staircase-supported");
        for (int j = n; j <= static_cast<int>(e.size()); ++j)
            if (e[j - 1] != 0)
                throw DomainError("elementary_expansion: polynomial is not staircase-supported");
        rhs[staircase_index(e, n)] = c;
    }
    std::map<std::vector<int>, coeff_t> out;
    XPoly check;
    for (int s = 0; s < N; ++s) {
        coeff_t c = 0;
        for (int j = 0; j < N; ++j)
            if (rhs[j] != 0) c = checked_add(c, checked_mul(basis.inverse[s][j], rhs[j]));
        if (c == 0) continue;
        out.emplace(basis.sequences[s], c);
        check.add_scaled(basis.monomials[s], c);
    }
    if (!(check == f)) throw std::logic_error("elementary expansion failed exact verification");
    return out;
}

const QPoly& quantum_elementary(int i, int k) {
    static detail::Memo<std::pair<int, int>, QPoly> memo;
    return memo.get({i, k}, [&] {
        QPoly out;
        if (i < 0 || i > k || k < 0) return out;
        if (i == 0) {
            out.add(QMonomial{}, 1);
            return out;
        }
        out.add_scaled(quantum_elementary(i, k - 1), 1);
        QMonomial xk{};
        xk.x[k - 1] = 1;
        QPoly xpoly;
        xpoly.add(xk, 1);
        out.add_scaled(multiply(xpoly, quantum_elementary(i - 1, k - 1)), 1);
        if (k >= 2) {
            QMonomial qk{};
            qk.q[k - 2] = 1;
            QPoly qpoly;
            qpoly.add(qk, 1);
            out.add_scaled(multiply(qpoly, quantum_elementary(i - 2, k - 2)), 1);
        }
        return out;
    });
}

const QPoly& quantum_schubert_poly(const Permutation& w) {
    static detail::Memo<Permutation, QPoly> memo;
    return memo.get(w, [&] {
        const int n = w.n();
        require_small(n, "quantum_schubert_poly");
        QPoly out;
        for (const auto& [seq, c] : elementary_expansion(schubert_poly(w), n)) {
            QPoly term;
            term.add(QMonomial{}, 1);
            for (std::size_t k = 1; k <= seq.size(); ++k)
                term = multiply(term, quantum_elementary(seq[k - 1], static_cast<int>(k)));
            out.add_scaled(term, c);
        }
        return out;
    });
}

FlTable quantum_monk_fl(int i, const Permutation& w) {
    const int n = w.n();
    if (i < 1 || i > n - 1)
        throw DomainError("quantum_monk_fl: need 1 <= i <= n-1, got i=" + std::to_string(i));
    FlTable out;
    const int len = w.length();
    for (int a = 1; a <= i; ++a) {
        for (int b = i + 1; b <= n; ++b) {
            Permutation wt = times_transposition(w, a, b);
            const int l2 = wt.length();
            if (l2 == len + 1) {
                out.add(FlTerm{wt, DegreeVector::zero(n - 1)}, 1);
            } else if (l2 == len - 2 * (b - a) + 1) {
                std::vector<int> d(n - 1, 0);
                for (int j = a; j < b; ++j) d[j - 1] = 1;
                out.add(FlTerm{wt, DegreeVector(std::move(d))}, 1);
            }
        }
    }
    return out;
}

const FlTable& quantum_product_fl(const Permutation& u, const Permutation& v) {
    if (u.n() != v.n()) throw DomainError("quantum_product_fl: permutations of different sizes");
    require_small(u.n(), "quantum_product_fl");
    static detail::Memo<std::pair<Permutation, Permutation>, FlTable> memo;
    return memo.get({u, v}, [&] { return compute_quantum_product(u, v); });
}

coeff_t quantum_lr_fl(const FlIndex& x) {
    return quantum_product_fl(x.u(), x.v()).get(FlTerm{x.w(), x.d()});
}

FlTable classical_product_fl(const Permutation& u, const Permutation& v) {
    if (u.n() != v.n()) throw DomainError("classical_product_fl: permutations of different sizes");
    const int n = u.n();
    const XPoly prod = multiply(schubert_poly(u), schubert_poly(v));
    const int target = u.length() + v.length();
    FlTable out;
    for (const Permutation& w : all_permutations(n)) {
        if (w.length() != target) continue;
        XPoly f = prod;
        Permutation cur = w;
        while (!cur.is_identity() && !f.empty()) {
            const int j = descents(cur).front();
            f = divided_difference(f, j);
            cur = times_simple(cur, j);
        }
        out.add(FlTerm{w, DegreeVector::zero(n - 1)}, f.get(Exponents{}));
    }
    return out;
}

FlTable specialize_q_zero(const FlTable& table) {
    FlTable out;
    for (const auto& [term, c] : table)
        if (term.d.is_zero()) out.add(term, c);
    return out;
}

}  // namespace qschub

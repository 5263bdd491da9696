#include "qschub/oracle/quantum_gr.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "detail/memo.hpp"
#include "qschub/enumerate.hpp"
#include "qschub/errors.hpp"
#include "qschub/oracle/lr.hpp"

namespace qschub {

namespace {

using ProductKey = std::tuple<int, int, Partition, Partition>;

detail::Memo<ProductKey, GrTable>& product_cache() {
    static detail::Memo<ProductKey, GrTable> cache;
    return cache;
}

GrTable compute_product(const Partition& lambda, const Partition& mu, const RectContext& ctx) {
    GrTable out;
    for (const auto& [term, c] : schur_product(lambda, mu, ctx.m())) {
        auto red = reduce_rim_hooks(term.nu, ctx);
        if (!red) continue;
        out.add(GrTerm{red->nu, red->d}, checked_mul(red->sign, c));
    }
    return out;
}

// Horizontal strips mu/lambda of size p with mu inside the rectangle.
void horizontal_strips(const Partition& lambda, int p, const RectContext& ctx, int row,
                       std::vector<int>& cur, int remaining, std::vector<Partition>& out) {
    if (row > ctx.m()) {
        if (remaining == 0) out.emplace_back(cur);
        return;
    }
    const int lo = lambda.part(row);
    const int hi = row == 1 ? ctx.r() : std::min(ctx.r(), lambda.part(row - 1));
    for (int v = lo; v <= hi && v - lo <= remaining; ++v) {
        cur.push_back(v);
        horizontal_strips(lambda, p, ctx, row + 1, cur, remaining - (v - lo), out);
        cur.pop_back();
    }
}

// nu with lambda_i - 1 >= nu_i >= lambda_{i+1} - 1 and |nu| = target.
void quantum_strips(const Partition& lambda, const RectContext& ctx, int row,
                    std::vector<int>& cur, int remaining, std::vector<Partition>& out) {
    if (row > ctx.m()) {
        if (remaining == 0) out.emplace_back(cur);
        return;
    }
    const int hi = lambda.part(row) - 1;
    const int lo = std::max(0, lambda.part(row + 1) - 1);
    for (int v = lo; v <= hi && v <= remaining; ++v) {
        cur.push_back(v);
        quantum_strips(lambda, ctx, row + 1, cur, remaining - v, out);
        cur.pop_back();
    }
}

}  // namespace

std::optional<RimHookReduction> reduce_rim_hooks(const Partition& gamma, const RectContext& ctx) {
    const int m = ctx.m();
    const int n = ctx.n();
    if (gamma.length() > m) return std::nullopt;
    std::vector<int> beads(m);
    for (int j = 1; j <= m; ++j) beads[j - 1] = gamma.part(j) + m - j;

    int sign = 1;
    int d = 0;
    // Beads are kept in decreasing order; the largest one moves first.
    while (beads.front() >= n) {
        const int from = beads.front();
        const int to = from - n;
        if (std::find(beads.begin(), beads.end(), to) != beads.end()) return std::nullopt;
        const int jumped = static_cast<int>(
            std::count_if(beads.begin(), beads.end(), [&](int b) { return b > to && b < from; }));
        const int height = jumped + 1;
        if ((m - height) % 2 != 0) sign = -sign;
        beads.front() = to;
        std::sort(beads.begin(), beads.end(), std::greater<>());
        ++d;
    }
    std::vector<int> parts(m);
    for (int j = 1; j <= m; ++j) parts[j - 1] = beads[j - 1] - (m - j);
    return RimHookReduction{sign, Partition(std::move(parts)), d};
}

const GrTable& quantum_product_gr(const Partition& lambda, const Partition& mu,
                                  const RectContext& ctx) {
    if (!ctx.contains(lambda) || !ctx.contains(mu))
        throw DomainError("quantum_product_gr: factors must lie in the rectangle");
    return product_cache().get(ProductKey{ctx.m(), ctx.r(), lambda, mu},
                               [&] { return compute_product(lambda, mu, ctx); });
}

coeff_t quantum_lr_gr(const GrIndex& x) {
    return quantum_product_gr(x.lambda(), x.mu(), x.ctx()).get(GrTerm{x.nu(), x.d()});
}

coeff_t quantum_lr_gr(const Partition& lambda, const Partition& mu, const Partition& nu, int d,
                      const RectContext& ctx) {
    if (d < 0 || lambda.size() + mu.size() != nu.size() + ctx.n() * d) return 0;
    if (!ctx.contains(nu)) return 0;
    return quantum_product_gr(lambda, mu, ctx).get(GrTerm{nu, d});
}

GrTable quantum_pieri_gr(int p, const Partition& lambda, const RectContext& ctx) {
    if (p < 1 || p > ctx.r())
        throw DomainError("quantum_pieri_gr: need 1 <= p <= r, got p=" + std::to_string(p));
    if (!ctx.contains(lambda))
        throw DomainError("quantum_pieri_gr: (" + to_string(lambda) +
                          ") is not contained in the rectangle");
    GrTable out;
    std::vector<int> cur;
    std::vector<Partition> classical;
    horizontal_strips(lambda, p, ctx, 1, cur, p, classical);
    for (const Partition& mu : classical) out.add(GrTerm{mu, 0}, 1);

    const int target = lambda.size() + p - ctx.n();
    if (target >= 0 && lambda.length() == ctx.m()) {
        std::vector<Partition> quantum;
        cur.clear();
        quantum_strips(lambda, ctx, 1, cur, target, quantum);
        for (const Partition& nu : quantum) out.add(GrTerm{nu, 1}, 1);
    }
    return out;
}

GrTable special_times(int p, const GrTable& table, const RectContext& ctx) {
    if (p == 0) return table;
    GrTable out;
    if (p < 0 || p > ctx.r()) return out;
    for (const auto& [term, c] : table)
        for (const auto& [t2, c2] : quantum_pieri_gr(p, term.nu, ctx))
            out.add(GrTerm{t2.nu, t2.d + term.d}, checked_mul(c, c2));
    return out;
}

GrTable quantum_product_pieri(const Partition& lambda, const Partition& mu,
                              const RectContext& ctx) {
    if (!ctx.contains(lambda) || !ctx.contains(mu))
        throw DomainError("quantum_product_pieri: factors must lie in the rectangle");
    GrTable start;
    start.add(GrTerm{lambda, 0}, 1);
    const int len = mu.length();
    if (len == 0) return start;

    std::vector<int> perm(len);
    std::iota(perm.begin(), perm.end(), 1);
    GrTable out;
    do {
        int inversions = 0;
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j)
                if (perm[i] > perm[j]) ++inversions;
        GrTable cur = start;
        for (int i = 1; i <= len && !cur.empty(); ++i)
            cur = special_times(mu.part(i) - i + perm[i - 1], cur, ctx);
        out.add_scaled(cur, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace qschub

#include "qschub/maps.hpp"

#include <algorithm>

#include "qschub/errors.hpp"

namespace qschub {

namespace {

std::string paren(const Partition& p) { return "(" + to_string(p) + ")"; }

}  // namespace

GrIndex::GrIndex(Partition lambda, Partition mu, Partition nu, int d, RectContext ctx)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), nu_(std::move(nu)), d_(d), ctx_(ctx) {
    for (const Partition* p : {&lambda_, &mu_, &nu_})
        if (!ctx_.contains(*p))
            throw DomainError("partition " + paren(*p) + " is not contained in (" +
                              std::to_string(ctx_.r()) + "^" + std::to_string(ctx_.m()) + ")");
    if (d_ < 0) throw DomainError("degree must be nonnegative, got " + std::to_string(d_));
    if (lambda_.size() + mu_.size() != nu_.size() + ctx_.n() * d_)
        throw DomainError("degree balance fails: |lambda|+|mu| = " +
                          std::to_string(lambda_.size() + mu_.size()) + " but |nu|+n*d = " +
                          std::to_string(nu_.size() + ctx_.n() * d_));
}

FlIndex::FlIndex(Permutation u, Permutation v, Permutation w, DegreeVector d)
    : u_(std::move(u)), v_(std::move(v)), w_(std::move(w)), d_(std::move(d)) {
    const int n = w_.n();
    if (u_.n() != n || v_.n() != n)
        throw DomainError("flag index permutations have different sizes");
    if (n < 1 || d_.k() != n - 1)
        throw DomainError("degree vector has length " + std::to_string(d_.k()) +
                          ", expected " + std::to_string(n - 1));
    if (!d_.nonnegative())
        throw DomainError("degree vector (" + to_string(d_) + ") has a negative entry");
    if (u_.length() + v_.length() != w_.length() + 2 * d_.total())
        throw DomainError("degree balance fails: l(u)+l(v) = " +
                          std::to_string(u_.length() + v_.length()) + " but l(w)+2|d| = " +
                          std::to_string(w_.length() + 2 * d_.total()));
}

AffIndex::AffIndex(Partition lambda, Partition mu, Partition eta, int k)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), eta_(std::move(eta)), k_(k) {
    if (k_ < 1) throw DomainError("k must be positive");
    for (const Partition* p : {&lambda_, &mu_, &eta_})
        if (p->largest() > k_)
            throw DomainError("partition " + paren(*p) + " is not " + std::to_string(k_) +
                              "-bounded");
    if (lambda_.size() + mu_.size() != eta_.size())
        throw DomainError("size balance fails: |lambda|+|mu| = " +
                          std::to_string(lambda_.size() + mu_.size()) + " but |eta| = " +
                          std::to_string(eta_.size()));
}

std::vector<int> Coroot::support() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) s.push_back(static_cast<int>(i) + 1);
    return s;
}

GrIndex gamma_sd(const GrIndex& x) {
    const RectContext& ctx = x.ctx();
    const int t = diag0(complement(x.nu(), ctx)) - x.d();
    if (t < 0)
        throw DomainError("gamma_sd: t = diag0(nu^vee) - d = " + std::to_string(t) +
                          " is negative");
    return GrIndex(complement(x.lambda(), ctx), complement(x.mu(), ctx),
                   complement(cycle_shape(x.nu(), ctx.r(), ctx), ctx), t, ctx);
}

FlIndex psi_pc(const GrIndex& x) {
    const RectContext& ctx = x.ctx();
    if (x.d() > std::min(ctx.m(), ctx.r()))
        throw DomainError("psi_pc: need d <= min(m, r) = " +
                          std::to_string(std::min(ctx.m(), ctx.r())) + ", got " +
                          std::to_string(x.d()));
    const Permutation w = compose(compose(grassmann_from_partition(x.nu(), ctx),
                                          w0_P(ctx.m(), ctx.n())),
                                  w0_P_prime(ctx.m(), ctx.n(), x.d()));
    return FlIndex(grassmann_from_partition(x.lambda(), ctx),
                   grassmann_from_partition(x.mu(), ctx), w,
                   DegreeVector::palindromic(ctx.k(), ctx.m(), x.d()));
}

FlIndex gamma_t(const FlIndex& x) {
    return FlIndex(conjugate(x.u()), conjugate(x.v()), conjugate(x.w()), x.d().reversed());
}

AffIndex phi_gr(const GrIndex& x) {
    return AffIndex(x.lambda(), x.mu(), add_rim_hooks(x.nu(), x.d(), x.ctx()), x.ctx().k());
}

FlIndex phi_fl(const AffIndex& x, const RectContext& ctx) {
    if (x.k() != ctx.k())
        throw DomainError("phi_fl: index has k=" + std::to_string(x.k()) +
                          " but the rectangle gives k=" + std::to_string(ctx.k()));
    if (!peel_rim_hooks(x.eta(), ctx))
        throw DomainError("phi_fl: eta " + paren(x.eta()) +
                          " is not obtained from a shape in the rectangle by adding n-rim hooks");
    const int n = ctx.n();
    const int r = ctx.r();
    const int t = corner_diagonal(x.eta(), ctx);
    const auto [eta1, eta2] = split_eta(x.eta(), t, ctx);
    return FlIndex(varphi(x.lambda(), r, n), varphi(x.mu(), r, n),
                   compose(varphi(eta2, r - t, n), varphi(eta1, r + t, n)),
                   DegreeVector::palindromic(ctx.k(), r, t));
}

AffIndex phi_fl_inv(const FlIndex& x) {
    const DegreeVector lhs = tilde_d(x.d());
    const DegreeVector rhs =
        descent_vector(x.w()) - descent_vector(x.u()) - descent_vector(x.v());
    if (lhs != rhs)
        throw DomainError("phi_fl_inv: tilde d = (" + to_string(lhs) +
                          ") differs from D(w) - D(u) - D(v) = (" + to_string(rhs) + ")");
    return AffIndex(lambda_tilde_down(x.u()), lambda_tilde_down(x.v()),
                    lambda_tilde_down(x.w()), x.n() - 1);
}

PentagonResult pentagon(const GrIndex& x) {
    FlIndex left = gamma_t(psi_pc(gamma_sd(x)));
    FlIndex right = phi_fl(phi_gr(x), x.ctx());
    const bool equal = left == right;
    return {std::move(left), std::move(right), equal};
}

int pairing(const Coroot& gamma, int i, int j) {
    // e-coordinates of sum c_p (e_p - e_{p+1})
    auto coord = [&](int p) { return gamma.coeff(p) - gamma.coeff(p - 1); };
    return coord(i) - coord(j);
}

int pairing_cartan(const Coroot& gamma, int i, int j) {
    const int k = static_cast<int>(gamma.coeffs.size());
    int total = 0;
    for (int p = 1; p <= k; ++p) {
        if (gamma.coeff(p) == 0) continue;
        for (int q = std::min(i, j); q < std::max(i, j); ++q) {
            int a = 0;
            if (p == q) a = 2;
            else if (p == q + 1 || p + 1 == q) a = -1;
            total += gamma.coeff(p) * a;
        }
    }
    return i < j ? total : -total;
}

Permutation parabolic_w0(const std::vector<int>& gens, int n) {
    std::vector<bool> in(n + 1, false);
    for (int g : gens) {
        if (g < 1 || g >= n) throw DomainError("parabolic_w0: generator out of range");
        in[g] = true;
    }
    Permutation w = Permutation::identity(n);
    int j = 1;
    while (j < n) {
        if (!in[j]) {
            ++j;
            continue;
        }
        int end = j;
        while (end + 1 < n && in[end + 1]) ++end;
        w = compose(w, w0_interval(j, end, n));
        j = end + 1;
    }
    return w;
}

LiftReport verify_peterson_lift(int m, int n, int d) {
    if (m < 1 || m >= n) throw DomainError("verify_peterson_lift: need 1 <= m < n");
    if (d < 0 || d > std::min(m, n - m))
        throw DomainError("verify_peterson_lift: need 0 <= d <= min(m, n-m)");
    const int k = n - 1;
    LiftReport rep;
    rep.gamma = Coroot::from_degree(DegreeVector::palindromic(k, m, d));
    auto fail = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };

    if (rep.gamma.coeff(m) != d)
        fail("coefficient of alpha_" + std::to_string(m) + "^vee is " +
             std::to_string(rep.gamma.coeff(m)));

    for (int j = 1; j <= k; ++j) {
        int expected = 0;
        if (d > 0 && j == m) expected = 2;
        else if (d > 0 && (j == m - d || j == m + d)) expected = -1;
        const int got = pairing(rep.gamma, j, j + 1);
        if (got != expected)
            fail("<gamma, alpha_" + std::to_string(j) + "> = " + std::to_string(got) +
                 ", expected " + std::to_string(expected));
        if (pairing_cartan(rep.gamma, j, j + 1) != got)
            fail("Cartan and Euclidean pairings disagree at alpha_" + std::to_string(j));
        if (j != m && got == 0) rep.levi_simple.push_back(j);
    }

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const bool same_block = (j <= m) || (i > m);
            if (!same_block) continue;
            const int v = pairing(rep.gamma, i, j);
            if (v != 0 && v != -1)
                fail("<gamma, e_" + std::to_string(i) + " - e_" + std::to_string(j) +
                     "> = " + std::to_string(v));
        }
    }

    if (parabolic_w0(rep.levi_simple, n) != w0_P_prime(m, n, d))
        fail("longest element of the zero-pairing parabolic is " +
             to_string(parabolic_w0(rep.levi_simple, n)) + ", expected " +
             to_string(w0_P_prime(m, n, d)));
    return rep;
}

}  // namespace qschub

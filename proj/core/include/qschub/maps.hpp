#pragma once

// Index tuples for structure constants of the three rings, the
// correspondences between them, and the pentagon comparing the two routes
// from Grassmannian indices to flag indices.

#include <string>
#include <vector>

#include "qschub/perms.hpp"
#include "qschub/shapes.hpp"

namespace qschub {

/// (lambda, mu, nu, d) in QH*(Gr(m, n)), checked for containment and
/// |lambda| + |mu| = |nu| + n d.
class GrIndex {
public:
    GrIndex(Partition lambda, Partition mu, Partition nu, int d, RectContext ctx);

    const Partition& lambda() const noexcept { return lambda_; }
    const Partition& mu() const noexcept { return mu_; }
    const Partition& nu() const noexcept { return nu_; }
    int d() const noexcept { return d_; }
    const RectContext& ctx() const noexcept { return ctx_; }

    bool operator==(const GrIndex&) const = default;

private:
    Partition lambda_, mu_, nu_;
    int d_;
    RectContext ctx_;
};

/// (u, v, w, d) in QH*(Fl_n), checked for l(u) + l(v) = l(w) + 2|d|.
class FlIndex {
public:
    FlIndex(Permutation u, Permutation v, Permutation w, DegreeVector d);

    const Permutation& u() const noexcept { return u_; }
    const Permutation& v() const noexcept { return v_; }
    const Permutation& w() const noexcept { return w_; }
    const DegreeVector& d() const noexcept { return d_; }
    int n() const noexcept { return w_.n(); }

    auto operator<=>(const FlIndex&) const = default;
    bool operator==(const FlIndex&) const = default;

private:
    Permutation u_, v_, w_;
    DegreeVector d_;
};

/// (lambda, mu, eta) indexing k-Schur structure constants.
class AffIndex {
public:
    AffIndex(Partition lambda, Partition mu, Partition eta, int k);

    const Partition& lambda() const noexcept { return lambda_; }
    const Partition& mu() const noexcept { return mu_; }
    const Partition& eta() const noexcept { return eta_; }
    int k() const noexcept { return k_; }

    bool operator==(const AffIndex&) const = default;

private:
    Partition lambda_, mu_, eta_;
    int k_;
};

/// sum_i coeffs[i-1] alpha_i^vee in type A_{n-1}.
struct Coroot {
    std::vector<int> coeffs;

    static Coroot from_degree(const DegreeVector& d) { return Coroot{d.entries()}; }
    int coeff(int i) const { return (i >= 1 && i <= static_cast<int>(coeffs.size())) ? coeffs[i - 1] : 0; }
    std::vector<int> support() const;
};

GrIndex gamma_sd(const GrIndex& x);
FlIndex psi_pc(const GrIndex& x);
FlIndex gamma_t(const FlIndex& x);
AffIndex phi_gr(const GrIndex& x);
FlIndex phi_fl(const AffIndex& x, const RectContext& ctx);
AffIndex phi_fl_inv(const FlIndex& x);

struct PentagonResult {
    FlIndex left;   // gamma_t . psi_pc . gamma_sd
    FlIndex right;  // phi_fl . phi_gr
    bool equal;
};

PentagonResult pentagon(const GrIndex& x);

/// <gamma, e_i - e_j> through the Euclidean realization.
int pairing(const Coroot& gamma, int i, int j);
/// The same pairing summed entry by entry over the Cartan matrix.
int pairing_cartan(const Coroot& gamma, int i, int j);

/// Longest element of the parabolic subgroup generated by the simple
/// reflections s_j, j in gens.
Permutation parabolic_w0(const std::vector<int>& gens, int n);

struct LiftReport {
    Coroot gamma;
    std::vector<int> levi_simple;  // simple roots of Delta_P pairing to zero
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Checks the pairing table of the palindromic degree centered at m with
/// height d against the positive roots of the Levi of the maximal
/// parabolic at m.
LiftReport verify_peterson_lift(int m, int n, int d);

}  // namespace qschub

#pragma once

// Quantum Littlewood-Richardson coefficients of Gr(m, n) by two routes:
// classical LR coefficients followed by n-rim hook reduction, and the
// quantum Pieri rule combined with the Giambelli determinant.

#include <optional>

#include "qschub/maps.hpp"
#include "qschub/oracle/coeff_table.hpp"

namespace qschub {

struct RimHookReduction {
    int sign;
    Partition nu;
    int d;
};

/// Rewrites sigma_gamma, gamma with at most m rows, as sign * q^d sigma_nu
/// with nu inside the rectangle; nullopt when the class vanishes.
std::optional<RimHookReduction> reduce_rim_hooks(const Partition& gamma, const RectContext& ctx);

/// sigma_lambda * sigma_mu via classical products and rim hook reduction.
/// Results are memoized; safe to call concurrently.
const GrTable& quantum_product_gr(const Partition& lambda, const Partition& mu,
                                  const RectContext& ctx);

coeff_t quantum_lr_gr(const GrIndex& x);
/// Zero when the degrees do not balance.
coeff_t quantum_lr_gr(const Partition& lambda, const Partition& mu, const Partition& nu, int d,
                      const RectContext& ctx);

/// sigma_(p) * sigma_lambda for 1 <= p <= r.
GrTable quantum_pieri_gr(int p, const Partition& lambda, const RectContext& ctx);

/// sigma_(p) * table, with sigma_(0) the identity and sigma_(p) = 0 for p < 0 or p > r.
GrTable special_times(int p, const GrTable& table, const RectContext& ctx);

/// sigma_lambda * sigma_mu by expanding sigma_mu as det(sigma_(mu_i - i + j))
/// and applying quantum Pieri.
GrTable quantum_product_pieri(const Partition& lambda, const Partition& mu,
                              const RectContext& ctx);

}  // namespace qschub

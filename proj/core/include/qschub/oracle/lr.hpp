#pragma once

#include "qschub/oracle/coeff_table.hpp"
#include "qschub/shapes.hpp"

namespace qschub {

/// Littlewood-Richardson coefficient c_{lambda,mu}^{nu}, counted as LR
/// skew tableaux of shape nu/lambda and content mu.
coeff_t classical_lr(const Partition& lambda, const Partition& mu, const Partition& nu);

/// s_lambda s_mu restricted to partitions with at most max_rows rows
/// (degree field of every key is 0).
GrTable schur_product(const Partition& lambda, const Partition& mu, int max_rows);

}  // namespace qschub

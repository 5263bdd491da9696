#pragma once

// Exhaustive verification suites.  Each suite walks every index tuple up to
// a size bound, reports failures to a sink as soon as they are found, and
// returns aggregate counts.  Work is spread over threads; the thread count
// defaults to the QSCHUB_THREADS environment variable, else the hardware
// concurrency.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qschub {

struct SuiteReport {
    std::string suite;
    int bound = 0;
    std::int64_t checked = 0;
    std::int64_t failures = 0;
    double seconds = 0.0;
    bool ok() const noexcept { return failures == 0; }
};

/// Receives one line per failing check.  Calls are serialized.
using FailureSink = std::function<void(const std::string&)>;

struct VerifyOptions {
    int threads = 0;  // 0: environment / hardware default
    FailureSink sink;
};

int default_thread_count();

/// Both routes around the pentagon agree, n <= max_n, t >= 0.
SuiteReport verify_pentagon(int max_n, const VerifyOptions& opts = {});
/// Grassmannian coefficients equal flag coefficients at the psi_pc key.
SuiteReport verify_pc_numeric(int max_n, const VerifyOptions& opts = {});
/// Strange duality on coefficient values, plus vanishing when t < 0.
SuiteReport verify_sd_numeric(int max_n, const VerifyOptions& opts = {});
/// Flag transpose on coefficient values over all pairs in S_n.
SuiteReport verify_t_numeric(int max_n, const VerifyOptions& opts = {});
/// Pairing table of the palindromic degree for all 1 <= m < n <= max_n.
SuiteReport verify_lift(int max_n, const VerifyOptions& opts = {});

// Property families.
SuiteReport check_bits(int max_n, const VerifyOptions& opts = {});
SuiteReport check_rim_hooks(int max_n, const VerifyOptions& opts = {});
SuiteReport check_eta_rho(int max_n, const VerifyOptions& opts = {});
SuiteReport check_one_descent(int max_n, const VerifyOptions& opts = {});
SuiteReport check_two_descents(int max_n, const VerifyOptions& opts = {});
SuiteReport check_multiplicities(int max_n, const VerifyOptions& opts = {});
SuiteReport check_duality(int max_n, const VerifyOptions& opts = {});

/// Every property family, each at min(max_n, its own ceiling).
std::vector<SuiteReport> verify_props(int max_n, const VerifyOptions& opts = {});

}  // namespace qschub

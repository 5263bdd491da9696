#include "qschub/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "qschub/enumerate.hpp"
#include "qschub/io.hpp"
#include "qschub/maps.hpp"
#include "qschub/oracle/quantum_fl.hpp"
#include "qschub/oracle/quantum_gr.hpp"

namespace qschub {

namespace {

class Runner {
public:
    Runner(std::string suite, int bound, const VerifyOptions& opts)
        : suite_(std::move(suite)), bound_(bound), opts_(opts),
          start_(std::chrono::steady_clock::now()) {}

    void pass(std::int64_t count = 1) { checked_ += count; }

    void fail(const std::string& msg) {
        ++checked_;
        ++failures_;
        if (opts_.sink) {
            std::lock_guard lock(sink_mutex_);
            opts_.sink(suite_ + ": " + msg);
        }
    }

    template <class Msg>
    void expect(bool cond, Msg&& msg) {
        if (cond) pass();
        else fail(msg());
    }

    template <class Item, class Fn>
    void for_each(const std::vector<Item>& items, Fn&& fn) {
        int threads = opts_.threads > 0 ? opts_.threads : default_thread_count();
        threads = std::max(1, std::min<int>(threads, static_cast<int>(items.size())));
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < items.size(); i = next++) {
                try {
                    fn(items[i]);
                } catch (const std::exception& e) {
                    fail(std::string("exception: ") + e.what());
                }
            }
        };
        if (threads == 1) {
            worker();
            return;
        }
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SuiteReport report() const {
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        return SuiteReport{suite_, bound_, checked_.load(), failures_.load(),
                           std::chrono::duration<double>(elapsed).count()};
    }

private:
    std::string suite_;
    int bound_;
    const VerifyOptions& opts_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::int64_t> checked_{0};
    std::atomic<std::int64_t> failures_{0};
    std::mutex sink_mutex_;
};

std::vector<RectContext> contexts_up_to(int max_n) {
    std::vector<RectContext> out;
    for (int n = 2; n <= max_n; ++n)
        for (int m = 1; m < n; ++m) out.emplace_back(m, n - m);
    return out;
}

// Every (lambda, mu, nu, d) with degree balance in the given rectangle,
// d bounded by max_d.
std::vector<GrIndex> gr_tuples(const RectContext& ctx, int max_d) {
    const std::vector<Partition> shapes = partitions_in_box(ctx.m(), ctx.r());
    std::map<int, std::vector<Partition>> by_size;
    for (const Partition& p : shapes) by_size[p.size()].push_back(p);
    std::vector<GrIndex> out;
    for (const Partition& lambda : shapes) {
        for (const Partition& mu : shapes) {
            for (int d = 0; d <= max_d; ++d) {
                const int size = lambda.size() + mu.size() - ctx.n() * d;
                if (size < 0) break;
                auto it = by_size.find(size);
                if (it == by_size.end()) continue;
                for (const Partition& nu : it->second) out.emplace_back(lambda, mu, nu, d, ctx);
            }
        }
    }
    return out;
}

int t_value(const GrIndex& x) { return diag0(complement(x.nu(), x.ctx())) - x.d(); }

std::string show(const Partition& p) { return "(" + to_string(p) + ")"; }
std::string show(const Permutation& w) { return "[" + to_string(w) + "]"; }

}  // namespace

int default_thread_count() {
    if (const char* env = std::getenv("QSCHUB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

SuiteReport verify_pentagon(int max_n, const VerifyOptions& opts) {
    Runner run("pentagon", max_n, opts);
    for (const RectContext& ctx : contexts_up_to(max_n)) {
        std::vector<GrIndex> tuples;
        for (GrIndex& x : gr_tuples(ctx, std::min(ctx.m(), ctx.r())))
            if (t_value(x) >= 0) tuples.push_back(std::move(x));
        run.for_each(tuples, [&](const GrIndex& x) {
            const PentagonResult res = pentagon(x);
            run.expect(res.equal, [&] {
                return to_json(x) + " left=" + to_json(res.left) + " right=" + to_json(res.right);
            });
        });
    }
    return run.report();
}

SuiteReport verify_pc_numeric(int max_n, const VerifyOptions& opts) {
    Runner run("pc-numeric", max_n, opts);
    for (const RectContext& ctx : contexts_up_to(std::min(max_n, kMaxFlagN))) {
        const std::vector<GrIndex> tuples = gr_tuples(ctx, std::min(ctx.m(), ctx.r()));
        run.for_each(tuples, [&](const GrIndex& x) {
            const coeff_t gr = quantum_lr_gr(x);
            const FlIndex y = psi_pc(x);
            const coeff_t fl = quantum_lr_fl(y);
            run.expect(gr == fl, [&] {
                return to_json(x) + " gives " + std::to_string(gr) + " but " + to_json(y) +
                       " gives " + std::to_string(fl);
            });
        });
    }
    return run.report();
}

SuiteReport verify_sd_numeric(int max_n, const VerifyOptions& opts) {
    Runner run("sd-numeric", max_n, opts);
    for (const RectContext& ctx : contexts_up_to(max_n)) {
        const int max_d = 2 * ctx.m() * ctx.r() / ctx.n();
        const std::vector<GrIndex> tuples = gr_tuples(ctx, max_d);
        run.for_each(tuples, [&](const GrIndex& x) {
            const coeff_t c = quantum_lr_gr(x);
            if (t_value(x) < 0) {
                run.expect(c == 0, [&] {
                    return to_json(x) + " has t < 0 but coefficient " + std::to_string(c);
                });
                return;
            }
            const GrIndex y = gamma_sd(x);
            const coeff_t c2 = quantum_lr_gr(y);
            run.expect(c == c2, [&] {
                return to_json(x) + " gives " + std::to_string(c) + " but " + to_json(y) +
                       " gives " + std::to_string(c2);
            });
            run.expect(gamma_sd(y) == x, [&] { return to_json(x) + " is not fixed by applying the duality twice"; });
        });
    }
    return run.report();
}

SuiteReport verify_t_numeric(int max_n, const VerifyOptions& opts) {
    Runner run("t-numeric", max_n, opts);
    for (int n = 2; n <= std::min(max_n, kMaxFlagN); ++n) {
        const std::vector<Permutation> perms = all_permutations(n);
        std::vector<std::pair<Permutation, Permutation>> pairs;
        for (const auto& u : perms)
            for (const auto& v : perms) pairs.emplace_back(u, v);
        run.for_each(pairs, [&](const std::pair<Permutation, Permutation>& uv) {
            const FlTable& left = quantum_product_fl(uv.first, uv.second);
            const FlTable& right = quantum_product_fl(conjugate(uv.first), conjugate(uv.second));
            run.expect(left.size() == right.size(), [&] {
                return "term counts differ for " + show(uv.first) + " * " + show(uv.second);
            });
            for (const auto& [term, c] : left) {
                const FlIndex x(uv.first, uv.second, term.w, term.d);
                const FlIndex y = gamma_t(x);
                const coeff_t c2 = right.get(FlTerm{y.w(), y.d()});
                run.expect(c == c2, [&] {
                    return to_json(x) + " gives " + std::to_string(c) + " but " + to_json(y) +
                           " gives " + std::to_string(c2);
                });
            }
        });
    }
    return run.report();
}

SuiteReport verify_lift(int max_n, const VerifyOptions& opts) {
    Runner run("lift", max_n, opts);
    std::vector<std::tuple<int, int, int>> items;
    for (int n = 2; n <= max_n; ++n)
        for (int m = 1; m < n; ++m)
            for (int d = 0; d <= std::min(m, n - m); ++d) items.emplace_back(m, n, d);
    run.for_each(items, [&](const std::tuple<int, int, int>& it) {
        const auto [m, n, d] = it;
        const LiftReport rep = verify_peterson_lift(m, n, d);
        if (rep.ok()) {
            run.pass();
            return;
        }
        for (const std::string& v : rep.violations)
            run.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + " d=" +
                     std::to_string(d) + ": " + v);
    });
    return run.report();
}

SuiteReport check_bits(int max_n, const VerifyOptions& opts) {
    Runner run("bits", max_n, opts);
    run.for_each(contexts_up_to(max_n), [&](const RectContext& ctx) {
        const int m = ctx.m();
        const int r = ctx.r();
        const int n = ctx.n();
        for (const Partition& nu : partitions_in_box(m, r)) {
            const BitString b = to_bits(nu, ctx);
            run.expect(b.zeros() == m && b.ones() == r && from_bits(b, ctx) == nu,
                       [&] { return "bit round trip fails for " + show(nu); });
            run.expect(to_bits(complement(nu, ctx), ctx) == b.reversed(),
                       [&] { return "complement is not bit reversal for " + show(nu); });
            run.expect(complement(complement(nu, ctx), ctx) == nu && transpose(transpose(nu)) == nu,
                       [&] { return "involution fails for " + show(nu); });
            bool cycles_ok = cycle(b, n) == b;
            for (int a = 0; a <= n; ++a) cycles_ok = cycles_ok && cycle(cycle(b, a), n - a) == b;
            run.expect(cycles_ok, [&] { return "cycling does not compose to identity for " + show(nu); });

            const int delta = diag0(complement(nu, ctx));
            const Partition rho = cycle_shape(nu, r, ctx);
            run.expect(diag0(rho) == delta, [&] { return "diag0 of cycled shape differs for " + show(nu); });
            std::vector<int> formula;
            for (int i = m - delta + 1; i <= m; ++i) formula.push_back(nu.part(i) + delta);
            for (int i = 1; i <= m - delta; ++i) formula.push_back(nu.part(i) - r + delta);
            bool formula_ok = false;
            try {
                formula_ok = Partition(formula) == rho;
            } catch (const std::exception&) {
            }
            run.expect(formula_ok, [&] {
                return "cycled shape " + show(rho) + " disagrees with the closed formula for " + show(nu);
            });
        }
    });
    return run.report();
}

SuiteReport check_rim_hooks(int max_n, const VerifyOptions& opts) {
    Runner run("rim-hooks", max_n, opts);
    run.for_each(contexts_up_to(max_n), [&](const RectContext& ctx) {
        for (const Partition& nu : partitions_in_box(ctx.m(), ctx.r())) {
            const int delta = diag0(complement(nu, ctx));
            for (int d = 0; d <= ctx.r(); ++d) {
                Partition eta;
                try {
                    eta = add_rim_hooks(nu, d, ctx);
                } catch (const std::exception& e) {
                    run.fail(show(nu) + " d=" + std::to_string(d) + ": " + e.what());
                    continue;
                }
                run.pass();
                const auto peeled = peel_rim_hooks(eta, ctx);
                run.expect(peeled && peeled->first == nu && peeled->second == d, [&] {
                    return "peeling " + show(eta) + " does not recover " + show(nu) + " d=" +
                           std::to_string(d);
                });
                if (d <= delta) {
                    const int t = corner_diagonal(eta, ctx);
                    run.expect(delta == d + t, [&] {
                        return show(nu) + " d=" + std::to_string(d) + ": delta=" + std::to_string(delta) +
                               " but t=" + std::to_string(t);
                    });
                }
            }
        }
    });
    return run.report();
}

SuiteReport check_eta_rho(int max_n, const VerifyOptions& opts) {
    Runner run("eta-rho", max_n, opts);
    run.for_each(contexts_up_to(max_n), [&](const RectContext& ctx) {
        const int m = ctx.m();
        const int r = ctx.r();
        const int n = ctx.n();
        for (const Partition& nu : partitions_in_box(m, r)) {
            const int delta = diag0(complement(nu, ctx));
            const Partition rho = cycle_shape(nu, r, ctx);
            const Permutation w_rho = grassmann_from_partition(rho, ctx);
            for (int d = 0; d <= delta; ++d) {
                const int t = delta - d;
                const Partition eta = add_rim_hooks(nu, d, ctx);
                const auto [eta1, eta2] = split_eta(eta, t, ctx);
                const auto [left, right] = rho_split(rho, t);
                run.expect(eta1 == add(left, Partition::rectangle(m - t, r - t)) && eta2 == right, [&] {
                    return show(nu) + " d=" + std::to_string(d) + ": eta split " + show(eta1) + "," +
                           show(eta2) + " vs rho split " + show(left) + "," + show(right);
                });
                const Permutation lhs = compose(varphi(eta2, r - t, n), varphi(eta1, r + t, n));
                const Permutation rhs = compose(compose(w_rho, w0_P_prime(m, n, t)), w0(n));
                run.expect(lhs == rhs, [&] {
                    return show(nu) + " d=" + std::to_string(d) + ": " + show(lhs) + " vs " + show(rhs);
                });
            }
        }
    });
    return run.report();
}

SuiteReport check_one_descent(int max_n, const VerifyOptions& opts) {
    Runner run("one-descent", max_n, opts);
    std::vector<std::pair<int, int>> items;
    for (int n = 2; n <= max_n; ++n)
        for (int j = 1; j < n; ++j) items.emplace_back(j, n);
    run.for_each(items, [&](const std::pair<int, int>& it) {
        const auto [j, n] = it;
        // The identity is excluded: it is the image of the full rectangle
        // (j^{n-j}), which is not irreducible.
        for (const Permutation& u : grassmann_permutations(j, n)) {
            if (u.is_identity()) continue;
            const Partition down = lambda_tilde_down(u);
            const std::vector<int> inv = inv_sequence(u);
            std::vector<int> expected(j);
            for (int i = 1; i <= j; ++i) expected[i - 1] = n - j - inv[i - 1];
            run.expect(transpose(down) == Partition(expected),
                       [&] { return "transpose formula fails for " + show(u); });
            run.expect(varphi(down, j, n) == u, [&] { return "varphi does not invert " + show(u); });
        }
        const Partition full = Partition::rectangle(n - j, j);
        for (const Partition& eta : partitions_in_box(n - j, j)) {
            if (eta == full) continue;
            const Permutation u = varphi(eta, j, n);
            const std::vector<int> ds = descents(u);
            run.expect(ds.size() == 1 && ds.front() == j && lambda_tilde_down(u) == eta,
                       [&] { return "round trip through varphi fails for " + show(eta); });
        }
    });
    return run.report();
}

SuiteReport check_two_descents(int max_n, const VerifyOptions& opts) {
    Runner run("two-descents", max_n, opts);
    for (int n = 3; n <= max_n; ++n) {
        std::vector<Permutation> items;
        for (Permutation& w : all_permutations(n))
            if (descents(w).size() == 2) items.push_back(std::move(w));
        run.for_each(items, [&](const Permutation& w) {
            const std::vector<int> ds = descents(w);
            const int a = ds[0];
            const int b = ds[1];
            const auto [w2, w1] = factor_two_descents(w);
            bool fixes = true;
            for (int i = 1; i <= a; ++i) fixes = fixes && w1(i) == i;
            run.expect(compose(w2, w1) == w && descents(w2) == std::vector<int>{a} &&
                           descents(w1) == std::vector<int>{b} && fixes,
                       [&] { return "factorization fails for " + show(w); });
            const Partition lhs = transpose(lambda_tilde_down(w));
            const Partition rhs = add(transpose(lambda_tilde_down(w2)), transpose(lambda_tilde_down(w1)));
            run.expect(lhs == rhs, [&] {
                return "inversion additivity fails for " + show(w) + ": " + show(lhs) + " vs " + show(rhs);
            });
        });
    }
    return run.report();
}

SuiteReport check_multiplicities(int max_n, const VerifyOptions& opts) {
    Runner run("multiplicities", max_n, opts);
    for (int n = 3; n <= max_n; ++n) {
        const int k = n - 1;
        run.for_each(all_permutations(n), [&](const Permutation& w) {
            const Partition down = lambda_tilde_down(w);
            const std::vector<int> inv = inv_sequence(compose(w0(n), w));
            const std::vector<int> ds = descents(w);
            for (int i = 1; i <= k - 1; ++i) {
                const int count = static_cast<int>(std::count(down.parts().begin(), down.parts().end(), i));
                const bool is_descent = std::find(ds.begin(), ds.end(), i) != ds.end();
                const int expected = is_descent ? k - i + inv[i - 1] - inv[i] : inv[i - 1] - inv[i] - 1;
                run.expect(count == expected, [&] {
                    return show(w) + ": " + std::to_string(count) + " parts of size " + std::to_string(i) +
                           ", expected " + std::to_string(expected);
                });
            }
        });
    }
    return run.report();
}

SuiteReport check_duality(int max_n, const VerifyOptions& opts) {
    Runner run("duality", max_n, opts);
    run.for_each(contexts_up_to(max_n), [&](const RectContext& ctx) {
        const int m = ctx.m();
        const int n = ctx.n();
        const int j = m;
        std::set<Permutation> images;
        for (const Partition& lambda : partitions_in_box(m, ctx.r())) {
            const Permutation w = grassmann_from_partition(lambda, ctx);
            images.insert(w);
            run.expect(partition_from_grassmann(w, m) == lambda,
                       [&] { return "Grassmann round trip fails for " + show(lambda); });
            run.expect(grassmann_from_partition(complement(lambda, ctx), ctx) ==
                           compose(compose(w0(n), w), w0_P(m, n)),
                       [&] { return "duality window fails for " + show(lambda); });
            run.expect(grassmann_window(transpose(lambda), n - m, n) == conjugate(w),
                       [&] { return "conjugation window fails for " + show(lambda); });

            const Partition lt = transpose(lambda);
            std::vector<int> head, tail;
            for (int i = 1; i <= j; ++i) head.push_back(lambda.part(j - i + 1) + i);
            for (int i = 1; i <= n - j; ++i) tail.push_back(j + i - lt.part(i));
            std::vector<int> first = head;
            first.insert(first.end(), tail.begin(), tail.end());
            std::vector<int> second = tail;
            second.insert(second.end(), head.begin(), head.end());
            const Permutation dual = grassmann_window(transpose(complement_in(lambda, j, n - j)), n - j, n);
            run.expect(w.window() == first && dual.window() == second,
                       [&] { return "transpose-dual windows fail for " + show(lambda); });
        }
        run.expect(images.size() == grassmann_permutations(m, n).size(),
                   [&] { return "Grassmann bijection is not onto for m=" + std::to_string(m); });
    });
    return run.report();
}

std::vector<SuiteReport> verify_props(int max_n, const VerifyOptions& opts) {
    std::vector<SuiteReport> out;
    out.push_back(check_bits(std::min(max_n, 12), opts));
    out.push_back(check_rim_hooks(std::min(max_n, 12), opts));
    out.push_back(check_eta_rho(std::min(max_n, 9), opts));
    out.push_back(check_one_descent(std::min(max_n, 7), opts));
    out.push_back(check_two_descents(std::min(max_n, 7), opts));
    out.push_back(check_multiplicities(std::min(max_n, 6), opts));
    out.push_back(check_duality(std::min(max_n, 9), opts));
    out.push_back(verify_lift(std::min(max_n, 12), opts));
    return out;
}

}  // namespace qschub

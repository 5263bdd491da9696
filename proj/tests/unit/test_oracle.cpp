#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "qschub/enumerate.hpp"
#include "qschub/maps.hpp"
#include "qschub/oracle/lr.hpp"
#include "qschub/oracle/quantum_fl.hpp"
#include "qschub/oracle/quantum_gr.hpp"

using namespace qschub;

namespace {

// Number of semistandard tableaux of the given shape and content (any
// composition), by peeling the largest letter off as a horizontal strip.
long kostka(const Partition& shape, std::vector<int> content) {
    while (!content.empty() && content.back() == 0) content.pop_back();
    if (content.empty()) return shape.empty() ? 1 : 0;
    const int strip = content.back();
    content.pop_back();
    long total = 0;
    std::vector<int> inner(shape.length());
    std::function<void(int, int)> go = [&](int row, int left) {
        if (row > shape.length()) {
            if (left == 0) total += kostka(Partition(inner), content);
            return;
        }
        const int lo = shape.part(row + 1);
        for (int keep = shape.part(row); keep >= lo && shape.part(row) - keep <= left; --keep) {
            inner[row - 1] = keep;
            go(row + 1, left - (shape.part(row) - keep));
        }
    };
    go(1, strip);
    return total;
}

std::vector<std::vector<int>> compositions(int total, int parts) {
    if (parts == 0) return total == 0 ? std::vector<std::vector<int>>{{}} : std::vector<std::vector<int>>{};
    std::vector<std::vector<int>> out;
    for (int first = 0; first <= total; ++first)
        for (auto rest : compositions(total - first, parts - 1)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    return out;
}

// Schur expansion of s_lambda * s_mu read off monomial coefficients:
// [x^alpha] s_l s_m = sum_{beta+gamma=alpha} K_{l,beta} K_{m,gamma}, then
// peel Schur functions from the top in lex order.
std::map<Partition, long> schur_expansion(const Partition& l, const Partition& m) {
    const int deg = l.size() + m.size();
    std::vector<Partition> shapes = partitions_in_box(deg, deg, deg);
    std::sort(shapes.rbegin(), shapes.rend(), [](const Partition& a, const Partition& b) {
        return a.parts() < b.parts();
    });
    auto monomial = [&](const Partition& alpha) {
        std::vector<int> a = alpha.parts();
        a.resize(deg, 0);
        long total = 0;
        for (const auto& beta : compositions(l.size(), deg)) {
            std::vector<int> gamma(deg);
            bool ok = true;
            for (int i = 0; i < deg; ++i) {
                gamma[i] = a[i] - beta[i];
                ok = ok && gamma[i] >= 0;
            }
            if (ok) total += kostka(l, beta) * kostka(m, gamma);
        }
        return total;
    };
    std::map<Partition, long> coeff;
    for (const Partition& nu : shapes) {
        long c = monomial(nu);
        for (const auto& [rho, cr] : coeff) c -= cr * kostka(rho, nu.parts());
        if (c != 0) coeff[nu] = c;
    }
    return coeff;
}

const RectContext kGr35(3, 2);

}  // namespace

TEST_CASE("classical Littlewood-Richardson") {
    CHECK(classical_lr({1}, {1}, {2}) == 1);
    CHECK(classical_lr({1}, {1}, {1, 1}) == 1);
    CHECK(classical_lr({3, 1}, {}, {3, 1}) == 1);
    CHECK(classical_lr({2, 1}, {2, 1}, {3, 2, 1}) == 2);
    CHECK(classical_lr({2, 1}, {1}, {2, 1}) == 0);
    CHECK(classical_lr({2}, {1}, {1, 1, 1}) == 0);

    SUBCASE("matches the monomial expansion") {
        CHECK(schur_expansion({2, 1}, {2, 1})[Partition{3, 2, 1}] == 2);
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3 - (a == 3); ++b)
                for (const Partition& l : partitions_in_box(a, a, a))
                    for (const Partition& m : partitions_in_box(b, b, b)) {
                        const auto expect = schur_expansion(l, m);
                        for (const Partition& nu : partitions_in_box(a + b, a + b, a + b)) {
                            auto it = expect.find(nu);
                            CHECK(classical_lr(l, m, nu) == (it == expect.end() ? 0 : it->second));
                        }
                    }
    }
}

TEST_CASE("rim hook reduction") {
    auto red = reduce_rim_hooks({2, 2, 1, 1, 1}, kGr35);
    CHECK_FALSE(red);  // more than m rows
    auto inside = reduce_rim_hooks({2, 1}, kGr35);
    REQUIRE(inside);
    CHECK(inside->sign == 1);
    CHECK(inside->d == 0);
    auto hook = reduce_rim_hooks({4}, RectContext(1, 3));
    REQUIRE(hook);
    CHECK(hook->nu.empty());
    CHECK(hook->d == 1);
}

TEST_CASE("quantum products on Grassmannians") {
    GrTable expect;
    expect.add({Partition{1, 1}, 1}, 1);
    expect.add({Partition{2}, 1}, 1);
    CHECK(quantum_product_gr({2, 2, 1}, {1, 1}, kGr35) == expect);
    CHECK(quantum_product_pieri({2, 2, 1}, {1, 1}, kGr35) == expect);
    CHECK(quantum_lr_gr(GrIndex({2, 2, 1}, {1, 1}, {2}, 1, kGr35)) == 1);
    CHECK(quantum_lr_gr(GrIndex({2, 2, 1}, {1, 1}, {1, 1}, 1, kGr35)) == 1);
    CHECK(quantum_lr_gr({2, 2, 1}, {1, 1}, {2}, 0, kGr35) == 0);

    GrTable gr12;
    gr12.add({Partition{}, 1}, 1);
    CHECK(quantum_product_gr({1}, {1}, RectContext(1, 1)) == gr12);
    CHECK(quantum_pieri_gr(1, {1}, RectContext(1, 1)) == gr12);

    GrTable gr24;
    gr24.add({Partition{2, 2}, 0}, 1);
    gr24.add({Partition{}, 1}, 1);
    CHECK(quantum_product_gr({1}, {2, 1}, RectContext(2, 2)) == gr24);

    for (int p = 1; p <= 3; ++p) {
        GrTable unit;
        unit.add({Partition{p}, 0}, 1);
        CHECK(quantum_pieri_gr(p, {}, RectContext(2, 3)) == unit);
    }

    SUBCASE("rim hooks agree with iterated Pieri") {
        for (int n = 2; n <= 6; ++n)
            for (int m = 1; m < n; ++m) {
                const RectContext ctx = RectContext::from_mn(m, n);
                const auto box = partitions_in_box(m, n - m);
                for (const Partition& a : box)
                    for (const Partition& b : box) {
                        const GrTable& t = quantum_product_gr(a, b, ctx);
                        CHECK(t == quantum_product_pieri(a, b, ctx));
                        for (const auto& [term, c] : t) {
                            CHECK(c > 0);
                            CHECK(a.size() + b.size() == term.nu.size() + n * term.d);
                        }
                        if (a.empty()) {
                            GrTable unit;
                            unit.add({b, 0}, 1);
                            CHECK(t == unit);
                        }
                    }
            }
    }
}

TEST_CASE("quantum Monk rule") {
    FlTable fl2;
    fl2.add({Permutation{1, 2}, DegreeVector{1}}, 1);
    CHECK(quantum_monk_fl(1, {2, 1}) == fl2);
    for (int i = 1; i <= 3; ++i) {
        FlTable unit;
        const Permutation s = times_simple(Permutation::identity(4), i);
        unit.add({s, DegreeVector::zero(3)}, 1);
        CHECK(quantum_monk_fl(i, Permutation::identity(4)) == unit);
    }
}

TEST_CASE("Schubert polynomials") {
    XPoly s21 = schubert_poly({2, 1, 3});
    CHECK(s21.size() == 1);
    XPoly s132 = schubert_poly({1, 3, 2});
    CHECK(s132.size() == 2);
    CHECK(schubert_poly(w0(3)).size() == 1);
}

TEST_CASE("quantum products on flag manifolds") {
    FlTable fl2;
    fl2.add({Permutation{1, 2}, DegreeVector{1}}, 1);
    CHECK(quantum_product_fl({2, 1}, {2, 1}) == fl2);
    CHECK(quantum_product_gr({1}, {1}, RectContext(1, 1)).get({Partition{}, 1}) ==
          quantum_product_fl({2, 1}, {2, 1}).get({Permutation{1, 2}, DegreeVector{1}}));

    CHECK(quantum_lr_fl(FlIndex({1, 3, 2, 4, 5}, {2, 5, 1, 3, 4}, {2, 1, 5, 3, 4}, {0, 1, 0, 0})) ==
          1);
    CHECK(quantum_lr_fl(FlIndex({1, 2, 4, 3, 5}, {2, 3, 5, 1, 4}, {2, 3, 1, 5, 4}, {0, 0, 1, 0})) ==
          1);

    const Permutation v{2, 4, 1, 3};
    FlTable unit;
    unit.add({v, DegreeVector::zero(3)}, 1);
    CHECK(quantum_product_fl(Permutation::identity(4), v) == unit);

    SUBCASE("S4 commutativity, grading and the classical limit") {
        const auto perms = all_permutations(4);
        for (const Permutation& a : perms)
            for (const Permutation& b : perms) {
                const FlTable& t = quantum_product_fl(a, b);
                CHECK(t == quantum_product_fl(b, a));
                for (const auto& [term, c] : t) {
                    CHECK(c > 0);
                    CHECK(a.length() + b.length() == term.w.length() + 2 * term.d.total());
                }
                CHECK(specialize_q_zero(t) == classical_product_fl(a, b));
            }
    }
}

#include <doctest.h>

#include <numeric>

#include "qschub/enumerate.hpp"
#include "qschub/errors.hpp"
#include "qschub/perms.hpp"

using namespace qschub;

TEST_CASE("permutation basics") {
    const Permutation w{2, 5, 1, 3, 4};
    CHECK(w(2) == 5);
    CHECK(w.length() == 4);
    CHECK(Permutation::identity(4).is_identity());
    CHECK(w0(5).length() == 10);
    CHECK_THROWS_AS(Permutation({1, 1, 2}), DomainError);
    CHECK_THROWS_AS(Permutation({0, 1}), DomainError);
    CHECK_THROWS_AS(compose(Permutation{2, 1}, Permutation{1, 2, 3}), DomainError);
}

TEST_CASE("inversions") {
    CHECK(inv_sequence({2, 5, 1, 3, 4}) == std::vector<int>{1, 3, 0, 0, 0});
    CHECK(inv_sequence(Permutation::identity(4)) == std::vector<int>(4, 0));
    CHECK(inv_sequence({4, 5, 1, 3, 2}) == std::vector<int>{3, 3, 0, 1, 0});
    for (const Permutation& w : all_permutations(5)) {
        const auto inv = inv_sequence(w);
        CHECK(std::accumulate(inv.begin(), inv.end(), 0) == w.length());
    }
}

TEST_CASE("descents") {
    CHECK(descents({2, 1, 5, 3, 4}) == std::vector<int>{1, 3});
    CHECK(descent_vector({2, 1, 5, 3, 4}) == DegreeVector{1, 0, 1, 0});
    CHECK(descents({2, 3, 5, 1, 4}) == std::vector<int>{3});
    CHECK(descents(Permutation::identity(5)).empty());
    CHECK(descent_vector(Permutation::identity(5)).is_zero());
}

TEST_CASE("longest elements") {
    CHECK(w0_P(3, 5) == Permutation{3, 2, 1, 5, 4});
    CHECK(w0_P_prime(4, 9, 2) == Permutation{2, 1, 4, 3, 6, 5, 9, 8, 7});
    CHECK(w0_interval(3, 2, 4).is_identity());
    for (int n = 2; n <= 7; ++n)
        for (int m = 1; m < n; ++m) CHECK(w0_P_prime(m, n, 0) == w0_P(m, n));
    CHECK_THROWS_AS(w0_P(5, 5), DomainError);
    CHECK_THROWS_AS(w0_P_prime(2, 5, 3), DomainError);
}

TEST_CASE("Grassmann permutations") {
    const RectContext ctx(3, 2);
    CHECK(grassmann_from_partition({2, 1, 1}, ctx) == Permutation{2, 3, 5, 1, 4});
    CHECK(grassmann_from_partition({1}, ctx) == Permutation{1, 2, 4, 3, 5});
    CHECK(grassmann_from_partition({}, ctx).is_identity());
    CHECK_THROWS_AS(grassmann_from_partition({3}, ctx), DomainError);
    CHECK_THROWS_AS(partition_from_grassmann({2, 1, 3, 5, 4}, 3), DomainError);

    for (int n = 2; n <= 8; ++n)
        for (int m = 1; m < n; ++m) {
            const RectContext c = RectContext::from_mn(m, n);
            for (const Partition& p : partitions_in_box(m, n - m))
                CHECK(partition_from_grassmann(grassmann_from_partition(p, c), m) == p);
        }
}

TEST_CASE("conjugation by w0") {
    CHECK(conjugate({2, 3, 1, 5, 4}) == Permutation{2, 1, 5, 3, 4});
    CHECK(conjugate({1, 2, 4, 3, 5}) == Permutation{1, 3, 2, 4, 5});
    CHECK(conjugate(Permutation::identity(4)).is_identity());
    for (const Permutation& w : all_permutations(5)) CHECK(conjugate(conjugate(w)) == w);
}

TEST_CASE("composition") {
    CHECK(compose({5, 9, 1, 2, 3, 4, 6, 7, 8}, {1, 2, 4, 6, 7, 8, 9, 3, 5}) ==
          Permutation{5, 9, 2, 4, 6, 7, 8, 1, 3});
    CHECK(compose({2, 1, 3, 4, 5}, {1, 2, 5, 3, 4}) == Permutation{2, 1, 5, 3, 4});
    const Permutation u{3, 1, 2};
    CHECK(compose(u, Permutation::identity(3)) == u);
    CHECK(compose(u, inverse(u)).is_identity());
}

TEST_CASE("zeta and lambda tilde") {
    CHECK(zeta({2, 1, 5, 3, 4}) == std::vector<int>{9, 6, 1, 1});
    CHECK(lambda_tilde_down({2, 1, 5, 3, 4}) == Partition{2, 2, 1, 1, 1});
    CHECK(zeta({2, 5, 1, 3, 4}) == std::vector<int>{9, 3, 3, 1});
    CHECK(lambda_tilde_down({2, 5, 1, 3, 4}) == Partition{1, 1});
    CHECK(zeta(Permutation::identity(5)) == std::vector<int>{10, 6, 3, 1});
    CHECK(lambda_tilde_down(Permutation::identity(5)).empty());
}

TEST_CASE("varphi") {
    CHECK(varphi({1, 1}, 2, 5) == Permutation{2, 5, 1, 3, 4});
    CHECK(varphi({2, 2}, 3, 5) == Permutation{1, 2, 5, 3, 4});
    CHECK(varphi({1, 1, 1}, 1, 5) == Permutation{2, 1, 3, 4, 5});
    CHECK_THROWS_WITH_AS(varphi({3}, 2, 5), doctest::Contains("row 1"), DomainError);
    CHECK_THROWS_AS(varphi({1, 1, 1, 1}, 2, 5), DomainError);
}

TEST_CASE("two-descent factorization") {
    auto [w2, w1] = factor_two_descents({5, 9, 2, 4, 6, 7, 8, 1, 3});
    CHECK(w2 == Permutation{5, 9, 1, 2, 3, 4, 6, 7, 8});
    CHECK(w1 == Permutation{1, 2, 4, 6, 7, 8, 9, 3, 5});

    auto [a2, a1] = factor_two_descents({2, 1, 5, 3, 4});
    CHECK(a2 == Permutation{2, 1, 3, 4, 5});
    CHECK(a1 == Permutation{1, 2, 5, 3, 4});

    CHECK_THROWS_AS(factor_two_descents({2, 1, 3}), DomainError);
    CHECK_THROWS_AS(factor_two_descents({4, 3, 2, 1}), DomainError);

    for (const Permutation& w : all_permutations(6)) {
        if (descents(w).size() != 2) continue;
        auto [x2, x1] = factor_two_descents(w);
        CHECK(compose(x2, x1) == w);
    }
}

TEST_CASE("tilde d") {
    CHECK(tilde_d({0, 1, 0, 0}) == DegreeVector{1, -2, 1, 0});
    CHECK(tilde_d(DegreeVector::zero(4)).is_zero());
    for (int r = 1; r <= 5; ++r)
        for (int t = 0; r + t <= 8 && t <= r; ++t) {
            const int k = 8;
            const DegreeVector expect = DegreeVector::unit(k, r - t) - DegreeVector::unit(k, r) -
                                        DegreeVector::unit(k, r) + DegreeVector::unit(k, r + t);
            CHECK(tilde_d(DegreeVector::palindromic(k, r, t)) == expect);
        }
}

TEST_CASE("degree vectors") {
    CHECK(DegreeVector::palindromic(8, 4, 3) == DegreeVector{0, 1, 2, 3, 2, 1, 0, 0});
    CHECK(DegreeVector{1, 2, 0}.reversed() == DegreeVector{0, 2, 1});
    CHECK(DegreeVector{1, 2, 0}.total() == 3);
    CHECK_FALSE(DegreeVector{1, -2}.nonnegative());
}

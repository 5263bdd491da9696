#include <doctest.h>

#include <algorithm>

#include "qschub/enumerate.hpp"
#include "qschub/errors.hpp"
#include "qschub/shapes.hpp"

using namespace qschub;

namespace {

// Row-by-row description of the two blocks: the left block holds the cells
// below row t in the first t columns, the right block everything right of
// column t.
std::pair<Partition, Partition> rho_split_by_rows(const Partition& rho, int t) {
    std::vector<int> left, right;
    for (int i = 1; i <= rho.length(); ++i) {
        if (i > t) left.push_back(std::min(rho.part(i), t));
        right.push_back(std::max(rho.part(i) - t, 0));
    }
    return {Partition(left), Partition(right)};
}

}  // namespace

TEST_CASE("partition construction") {
    Partition p{3, 1, 0, 0};
    CHECK(p.parts() == std::vector<int>{3, 1});
    CHECK(p.size() == 4);
    CHECK(p.part(1) == 3);
    CHECK(p.part(5) == 0);
    CHECK(Partition{} == Partition{0, 0});
    CHECK_THROWS_AS(Partition({1, 2}), DomainError);
    CHECK_THROWS_AS(Partition({2, -1}), DomainError);
    CHECK_THROWS_AS(RectContext(0, 3), DomainError);
}

TEST_CASE("complement") {
    const RectContext c35(3, 2);
    CHECK(complement({2, 2, 1}, c35) == Partition{1});
    CHECK(complement({2}, c35) == Partition{2, 2});
    CHECK(complement({}, c35) == Partition{2, 2, 2});
    CHECK_THROWS_AS(complement({3}, c35), DomainError);
    CHECK_THROWS_AS(complement({1, 1, 1, 1}, c35), DomainError);
    for (const Partition& p : partitions_in_box(3, 4))
        CHECK(complement(complement(p, RectContext(3, 4)), RectContext(3, 4)) == p);
}

TEST_CASE("transpose") {
    CHECK(transpose({9, 6, 1, 1}) == Partition{4, 2, 2, 2, 2, 2, 1, 1, 1});
    CHECK(transpose({9, 3, 3, 1}) == Partition{4, 3, 3, 1, 1, 1, 1, 1, 1});
    CHECK(transpose({}) == Partition{});
    for (const Partition& p : partitions_in_box(4, 4)) CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("boundary bit strings") {
    CHECK(to_bits({2}, RectContext(3, 2)).str() == "00110");
    CHECK(to_bits({8, 7, 5, 2, 1}, RectContext(5, 10)).str() == "101011101101011");
    CHECK(to_bits({}, RectContext(2, 3)).str() == "00111");
    CHECK(from_bits(BitString("11000"), RectContext(3, 2)) == Partition{2, 2, 2});
    CHECK_THROWS_AS(from_bits(BitString("11100"), RectContext(3, 2)), DomainError);
    CHECK_THROWS_AS(BitString("10a"), DomainError);
}

TEST_CASE("cycling") {
    CHECK(cycle(BitString("00110"), 2).str() == "11000");
    CHECK(cycle(BitString("101011101101011"), 10).str() == "010111010111011");
    const BitString b("0110100");
    CHECK(cycle(b, 7) == b);
    for (int a = 0; a <= 7; ++a) CHECK(cycle(cycle(b, a), 7 - a) == b);
}

TEST_CASE("diag0") {
    CHECK(diag0({2, 2}) == 2);
    CHECK(diag0({}) == 0);
    CHECK(diag0({8, 5, 4, 1}) == 3);
}

TEST_CASE("adding rim hooks") {
    CHECK(add_rim_hooks({2}, 1, RectContext(3, 2)) == Partition{2, 2, 1, 1, 1});
    CHECK(add_rim_hooks({8, 7, 5, 2, 1}, 2, RectContext(5, 10)) ==
          Partition{10, 10, 10, 9, 7, 4, 3});
    CHECK(add_rim_hooks({3, 1}, 0, RectContext(2, 3)) == Partition{3, 1});
    CHECK_THROWS_AS(add_rim_hooks({2}, 3, RectContext(3, 2)), DomainError);
    CHECK_THROWS_AS(add_rim_hooks({3}, 1, RectContext(3, 2)), DomainError);

    SUBCASE("direct insertion matches the closed form") {
        for (int m = 1; m <= 4; ++m)
            for (int r = 1; r <= 4; ++r) {
                const RectContext ctx(m, r);
                for (const Partition& nu : partitions_in_box(m, r))
                    for (int d = 0; d <= r; ++d)
                        CHECK(add_rim_hooks_direct(nu, d, ctx) == add_rim_hooks_closed(nu, d, ctx));
            }
    }
}

TEST_CASE("peeling rim hooks") {
    const RectContext ctx(3, 2);
    auto peeled = peel_rim_hooks({2, 2, 1, 1, 1}, ctx);
    REQUIRE(peeled);
    CHECK(peeled->first == Partition{2});
    CHECK(peeled->second == 1);
    CHECK_FALSE(peel_rim_hooks({3, 1}, ctx));
    CHECK_FALSE(peel_rim_hooks({2, 2, 2, 2, 1, 1, 1, 1, 1}, ctx));
}

TEST_CASE("t and corner diagonal") {
    CHECK(t_of({2}, 1, RectContext(3, 2)) == 1);
    CHECK(t_of({8, 7, 5, 2, 1}, 2, RectContext(5, 10)) == 1);
    const RectContext ctx(3, 3);
    for (const Partition& nu : partitions_in_box(3, 3)) {
        const int delta = diag0(complement(nu, ctx));
        CHECK(t_of(nu, 0, ctx) == delta);
        for (int d = 0; d <= delta; ++d) CHECK(t_of(nu, d, ctx) == delta - d);
    }
}

TEST_CASE("splitting nu plus d") {
    CHECK(split_eta({2, 2, 1, 1, 1}, 1, RectContext(3, 2)) ==
          std::pair{Partition{2, 2}, Partition{1, 1, 1}});
    CHECK(split_eta({8, 7, 5, 2, 1}, 3, RectContext(5, 10)) ==
          std::pair{Partition{8, 7}, Partition{5, 2, 1}});
    CHECK(split_eta({10, 10, 10, 9, 7, 4, 3}, 1, RectContext(5, 10)) ==
          std::pair{Partition{10, 10, 10, 9}, Partition{7, 4, 3}});
    CHECK_THROWS_AS(split_eta({1}, 4, RectContext(3, 2)), DomainError);
}

TEST_CASE("rho split") {
    CHECK(rho_split({8, 5, 4, 1}, 1) == std::pair{Partition{1, 1, 1}, Partition{7, 4, 3}});
    CHECK(rho_split({8, 5, 4, 1}, 3) == std::pair{Partition{1}, Partition{5, 2, 1}});
    CHECK(rho_split({4, 2}, 0) == std::pair{Partition{}, Partition{4, 2}});
    CHECK_THROWS_AS(rho_split({3, 1}, 2), DomainError);

    SUBCASE("agrees with the row description") {
        for (const Partition& rho : partitions_in_box(5, 5))
            for (int t = 0; t <= 5 && rho.part(t) >= t; ++t)
                CHECK(rho_split(rho, t) == rho_split_by_rows(rho, t));
    }
}

TEST_CASE("k-rectangles") {
    CHECK(k_rectangle(2, 5) == Partition{2, 2, 2});
    CHECK_THROWS_AS(k_rectangle(5, 5), DomainError);

    Reduction a = reduce_irreducible({4, 2, 2, 2, 2, 2, 1, 1, 1}, 4);
    CHECK(a.irreducible == Partition{2, 2, 1, 1, 1});
    CHECK(a.removed == std::vector<int>{4, 2});

    Reduction b = reduce_irreducible({4, 3, 3, 1, 1, 1, 1, 1, 1}, 4);
    CHECK(b.irreducible == Partition{1, 1});
    CHECK(b.removed == std::vector<int>{4, 3, 1});

    Reduction c = reduce_irreducible({3, 1}, 4);
    CHECK(c.irreducible == Partition{3, 1});
    CHECK(c.removed.empty());

    CHECK_THROWS_AS(reduce_irreducible({5}, 4), DomainError);
}

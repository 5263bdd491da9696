#include "qschub/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "qschub/errors.hpp"

namespace qschub {

namespace {

void fill(std::vector<int>& cur, int rows, int cap, int remaining, bool fixed_size,
          std::vector<Partition>& out) {
    if (static_cast<int>(cur.size()) == rows || cap == 0) {
        if (!fixed_size || remaining == 0) out.emplace_back(cur);
        return;
    }
    for (int p = 0; p <= cap; ++p) {
        if (fixed_size && p > remaining) break;
        if (p == 0) {
            if (!fixed_size || remaining == 0) out.emplace_back(cur);
            continue;
        }
        cur.push_back(p);
        fill(cur, rows, p, remaining - p, fixed_size, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
    if (rows < 0 || cols < 0) throw DomainError("partitions_in_box: negative side");
    std::vector<Partition> out;
    std::vector<int> cur;
    fill(cur, rows, cols, 0, false, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols, int size) {
    if (rows < 0 || cols < 0) throw DomainError("partitions_in_box: negative side");
    std::vector<Partition> out;
    if (size < 0) return out;
    std::vector<int> cur;
    fill(cur, rows, cols, size, true, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<Permutation> grassmann_permutations(int j, int n) {
    std::vector<Permutation> out;
    for (const Partition& p : partitions_in_box(j, n - j)) out.push_back(grassmann_window(p, j, n));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qschub

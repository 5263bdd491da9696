#include "qschub/oracle/lr.hpp"

#include <algorithm>

#include "qschub/enumerate.hpp"

namespace qschub {

namespace {

// Fills nu/lambda row by row (top row first), right to left, so that the
// reading word is built in order and the lattice condition can be checked
// on each prefix.
class LrFiller {
public:
    LrFiller(const Partition& lambda, const Partition& mu, const Partition& nu)
        : lambda_(lambda), mu_(mu), nu_(nu), grid_(nu.length()), counts_(mu.length() + 2, 0) {
        for (int r = 1; r <= nu.length(); ++r) grid_[r - 1].assign(nu.part(r) + 1, 0);
    }

    coeff_t count() { return place(1, nu_.part(1)); }

private:
    coeff_t place(int row, int col) {
        if (row > nu_.length()) return 1;
        if (col <= lambda_.part(row)) return place(row + 1, nu_.part(row + 1));

        int hi = mu_.length();
        if (col < nu_.part(row)) hi = std::min(hi, grid_[row - 1][col + 1]);
        int lo = 1;
        if (row > 1 && col > lambda_.part(row - 1)) lo = grid_[row - 2][col] + 1;

        coeff_t total = 0;
        for (int x = lo; x <= hi; ++x) {
            if (counts_[x] >= mu_.part(x)) continue;
            if (x > 1 && counts_[x] + 1 > counts_[x - 1]) continue;
            ++counts_[x];
            grid_[row - 1][col] = x;
            total = checked_add(total, place(row, col - 1));
            --counts_[x];
        }
        grid_[row - 1][col] = 0;
        return total;
    }

    const Partition& lambda_;
    const Partition& mu_;
    const Partition& nu_;
    std::vector<std::vector<int>> grid_;
    std::vector<int> counts_;
};

}  // namespace

coeff_t classical_lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() + mu.size() != nu.size()) return 0;
    if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
    if (mu.empty()) return 1;
    return LrFiller(lambda, mu, nu).count();
}

GrTable schur_product(const Partition& lambda, const Partition& mu, int max_rows) {
    GrTable out;
    const int rows = std::min(max_rows, lambda.length() + mu.length());
    const int size = lambda.size() + mu.size();
    for (const Partition& gamma :
         partitions_in_box(rows, lambda.largest() + mu.largest(), size)) {
        if (!gamma.contains(lambda) || !gamma.contains(mu)) continue;
        out.add(GrTerm{gamma, 0}, classical_lr(lambda, mu, gamma));
    }
    return out;
}

}  // namespace qschub

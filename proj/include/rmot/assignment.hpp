#pragma once

#include <limits>
#include <utility>
#include <vector>

namespace rmot {

/// Dense cost matrix for linear assignment. Entries are finite reals, or
/// kForbidden to mark a pair that may never be matched. Forbidden pairs are
/// excluded from the matching entirely rather than given a large cost, so
/// they do not count toward matching cardinality.
class CostMatrix {
public:
    static constexpr double kForbidden = std::numeric_limits<double>::infinity();

    CostMatrix() = default;
    CostMatrix(int rows, int cols, double fill = 0.0);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& at(int r, int c) { return cost_[static_cast<size_t>(r) * cols_ + c]; }
    double at(int r, int c) const { return cost_[static_cast<size_t>(r) * cols_ + c]; }

    bool admissible(int r, int c) const { return at(r, c) != kForbidden; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> cost_;
};

/// A matching as (row, col) pairs, sorted by row index.
using Matching = std::vector<std::pair<int, int>>;

/// Maximum-cardinality matching over admissible pairs that, among all
/// maximum-cardinality matchings, minimizes total cost. Ties are broken
/// deterministically: the result is the lexicographically smallest optimal
/// matching when read as (row 0's column, row 1's column, ...), with
/// unmatched rows ordering last. Throws ValidationError on NaN or -inf
/// entries. Empty matrices yield an empty matching.
Matching solve_min_cost(const CostMatrix& m);

/// As solve_min_cost with maximization, implemented by negating scores.
Matching solve_max_score(const CostMatrix& m);

/// Total cost of a matching under a matrix; pairs summed in row order.
double matching_cost(const CostMatrix& m, const Matching& match);

}  // namespace rmot

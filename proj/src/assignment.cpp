#include "rmot/assignment.hpp"

#include <algorithm>
#include <cmath>

#include "rmot/error.hpp"

namespace rmot {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCostTol = 1e-9;

// Min-cost max-cardinality matching by successive shortest augmenting paths.
// Bellman-Ford handles negative entries; every iteration order is fixed so
// the result is deterministic. Operates on an index-mapped submatrix so the
// tie-break pass can re-solve completions without copying the matrix.
struct SspResult {
    std::vector<int> match_row;  // per active row: active col index or -1
    int cardinality = 0;
};

SspResult ssp_solve(const CostMatrix& m,
                    const std::vector<int>& act_rows,
                    const std::vector<int>& act_cols) {
    const int nr = static_cast<int>(act_rows.size());
    const int nc = static_cast<int>(act_cols.size());
    SspResult res;
    res.match_row.assign(nr, -1);
    std::vector<int> match_col(nc, -1);

    std::vector<double> dist_row(nr), dist_col(nc);
    std::vector<int> from_row(nc);  // col -> preceding row on shortest path

    while (true) {
        // Shortest augmenting path from any unmatched row to any unmatched col.
        for (int r = 0; r < nr; ++r) dist_row[r] = res.match_row[r] == -1 ? 0.0 : kInf;
        std::fill(dist_col.begin(), dist_col.end(), kInf);
        std::fill(from_row.begin(), from_row.end(), -1);

        bool changed = true;
        for (int pass = 0; pass <= nr + nc && changed; ++pass) {
            changed = false;
            for (int r = 0; r < nr; ++r) {
                if (dist_row[r] == kInf) continue;
                for (int c = 0; c < nc; ++c) {
                    if (res.match_row[r] == c) continue;
                    const double w = m.at(act_rows[r], act_cols[c]);
                    if (w == CostMatrix::kForbidden) continue;
                    const double nd = dist_row[r] + w;
                    if (nd < dist_col[c]) {
                        dist_col[c] = nd;
                        from_row[c] = r;
                        changed = true;
                        const int rm = match_col[c];
                        if (rm != -1) {
                            const double back = nd - m.at(act_rows[rm], act_cols[c]);
                            if (back < dist_row[rm]) dist_row[rm] = back;
                        }
                    }
                }
            }
            // Re-propagate backward edges whose col improved in this pass.
            for (int c = 0; c < nc; ++c) {
                const int rm = match_col[c];
                if (rm == -1 || dist_col[c] == kInf) continue;
                const double back = dist_col[c] - m.at(act_rows[rm], act_cols[c]);
                if (back < dist_row[rm]) {
                    dist_row[rm] = back;
                    changed = true;
                }
            }
        }

        int best_col = -1;
        for (int c = 0; c < nc; ++c) {
            if (match_col[c] != -1 || dist_col[c] == kInf) continue;
            if (best_col == -1 || dist_col[c] < dist_col[best_col]) best_col = c;
        }
        if (best_col == -1) break;

        // Flip matched/unmatched edges along the path.
        int c = best_col;
        while (c != -1) {
            const int r = from_row[c];
            const int next_c = res.match_row[r];
            res.match_row[r] = c;
            match_col[c] = r;
            c = next_c;
        }
        ++res.cardinality;
    }
    return res;
}

double solution_cost(const CostMatrix& m,
                     const std::vector<int>& act_rows,
                     const std::vector<int>& act_cols,
                     const SspResult& sol) {
    double total = 0.0;
    for (size_t r = 0; r < act_rows.size(); ++r) {
        if (sol.match_row[r] != -1) total += m.at(act_rows[r], act_cols[sol.match_row[r]]);
    }
    return total;
}

void validate(const CostMatrix& m) {
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            const double v = m.at(r, c);
            if (std::isnan(v) || v == -kInf) {
                throw ValidationError("cost matrix entries must be finite or Forbidden");
            }
        }
    }
}

}  // namespace

CostMatrix::CostMatrix(int rows, int cols, double fill) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ValidationError("cost matrix dimensions must be >= 0");
    cost_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill);
}

Matching solve_min_cost(const CostMatrix& m) {
    validate(m);
    if (m.rows() == 0 || m.cols() == 0) return {};

    std::vector<int> all_rows(m.rows()), all_cols(m.cols());
    for (int r = 0; r < m.rows(); ++r) all_rows[r] = r;
    for (int c = 0; c < m.cols(); ++c) all_cols[c] = c;

    const SspResult base = ssp_solve(m, all_rows, all_cols);
    const int best_card = base.cardinality;
    const double best_cost = solution_cost(m, all_rows, all_cols, base);

    // Fix pairs row by row, smallest admissible column first, keeping only
    // choices that still admit an optimal completion. This yields the
    // lexicographically smallest optimal matching.
    Matching result;
    std::vector<char> used_col(m.cols(), 0);
    double fixed_cost = 0.0;
    int fixed_count = 0;

    for (int r = 0; r < m.rows(); ++r) {
        std::vector<int> rest_rows;
        for (int rr = r + 1; rr < m.rows(); ++rr) rest_rows.push_back(rr);

        for (int c = 0; c < m.cols(); ++c) {
            if (used_col[c] || !m.admissible(r, c)) continue;
            std::vector<int> rest_cols;
            for (int cc = 0; cc < m.cols(); ++cc) {
                if (!used_col[cc] && cc != c) rest_cols.push_back(cc);
            }
            const SspResult sub = ssp_solve(m, rest_rows, rest_cols);
            if (fixed_count + 1 + sub.cardinality != best_card) continue;
            double sub_cost = 0.0;
            for (size_t i = 0; i < rest_rows.size(); ++i) {
                if (sub.match_row[i] != -1) sub_cost += m.at(rest_rows[i], rest_cols[sub.match_row[i]]);
            }
            if (std::abs(fixed_cost + m.at(r, c) + sub_cost - best_cost) > kCostTol) continue;
            result.emplace_back(r, c);
            used_col[c] = 1;
            fixed_cost += m.at(r, c);
            ++fixed_count;
            break;
        }
        if (fixed_count == best_card) break;
    }
    return result;
}

Matching solve_max_score(const CostMatrix& m) {
    CostMatrix neg(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            const double v = m.at(r, c);
            neg.at(r, c) = (v == CostMatrix::kForbidden) ? CostMatrix::kForbidden : -v;
        }
    }
    return solve_min_cost(neg);
}

double matching_cost(const CostMatrix& m, const Matching& match) {
    double total = 0.0;
    for (const auto& [r, c] : match) total += m.at(r, c);
    return total;
}

}  // namespace rmot

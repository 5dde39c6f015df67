#include "faircenter/simplex.hpp"

#include <algorithm>
#include <string>

#include <Eigen/Core>

namespace faircenter {

namespace {

using Tableau = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace

FeasibilityResult check_feasible(const FrequencyDistributorLP& lp, long long max_iterations) {
    const int n = static_cast<int>(lp.variables.size());
    const int m = static_cast<int>(lp.rows.size());

    // Bring every row to rhs >= 0 so slacks and artificials can seed the
    // basis directly.
    std::vector<Relation> rel(m);
    Eigen::VectorXd rhs(m);
    Tableau coeff = Tableau::Zero(m, n);
    for (int i = 0; i < m; ++i) {
        const Row& row = lp.rows[i];
        for (const Term& t : row.terms) {
            if (t.var < 0 || t.var >= n) throw InputError("check_feasible: term names no variable");
            coeff(i, t.var) += t.coeff;
        }
        rel[i] = row.rel;
        rhs(i) = row.rhs;
        if (rhs(i) < 0.0) {
            coeff.row(i) = -coeff.row(i);
            rhs(i) = -rhs(i);
            if (rel[i] == Relation::LessEq) rel[i] = Relation::GreaterEq;
            else if (rel[i] == Relation::GreaterEq) rel[i] = Relation::LessEq;
        }
    }

    // Column layout: structural | slack/surplus per inequality | artificials.
    int num_slack = 0, num_artificial = 0;
    for (int i = 0; i < m; ++i) {
        if (rel[i] != Relation::Equal) ++num_slack;
        if (rel[i] != Relation::LessEq) ++num_artificial;
    }
    const int first_artificial = n + num_slack;
    const int ncols = first_artificial + num_artificial;

    Tableau tab = Tableau::Zero(m, ncols + 1);
    tab.block(0, 0, m, n) = coeff;
    tab.col(ncols) = rhs;

    std::vector<int> basis(m, -1);
    int slack_at = n, artificial_at = first_artificial;
    for (int i = 0; i < m; ++i) {
        if (rel[i] == Relation::LessEq) {
            tab(i, slack_at) = 1.0;
            basis[i] = slack_at++;
        } else if (rel[i] == Relation::GreaterEq) {
            tab(i, slack_at++) = -1.0;
            tab(i, artificial_at) = 1.0;
            basis[i] = artificial_at++;
        } else {
            tab(i, artificial_at) = 1.0;
            basis[i] = artificial_at++;
        }
    }

    // Objective row for min(sum of artificials): reduced costs relative to
    // the starting basis, with -w in the rhs slot so pivots update it too.
    Eigen::RowVectorXd obj = Eigen::RowVectorXd::Zero(ncols + 1);
    for (int i = 0; i < m; ++i)
        if (basis[i] >= first_artificial) obj -= tab.row(i);
    for (int j = first_artificial; j < ncols; ++j) obj(j) += 1.0;

    if (max_iterations <= 0) max_iterations = 50LL * (m + ncols);
    long long iterations = 0;

    while (true) {
        // Bland: lowest-index improving column. Artificial columns never
        // enter; they start basic and are retired for good once they leave.
        int pc = -1;
        for (int j = 0; j < first_artificial; ++j) {
            if (obj(j) < -kFeasTol) {
                pc = j;
                break;
            }
        }
        if (pc < 0) break;

        double best_ratio = 0.0;
        int pr = -1;
        for (int i = 0; i < m; ++i) {
            if (tab(i, pc) <= kFeasTol) continue;
            const double ratio = tab(i, ncols) / tab(i, pc);
            if (pr < 0 || ratio < best_ratio) {
                best_ratio = ratio;
                pr = i;
            } else if (ratio == best_ratio && basis[i] < basis[pr]) {
                pr = i;
            }
        }
        if (pr < 0) {
            // Unbounded descent in a phase-1 objective bounded below by 0
            // cannot happen in exact arithmetic.
            throw SolverError("check_feasible: unbounded phase-1 pivot");
        }

        if (++iterations > max_iterations)
            throw SolverError("check_feasible: iteration cap " + std::to_string(max_iterations) +
                              " exceeded");

        tab.row(pr) /= tab(pr, pc);
        tab(pr, pc) = 1.0;
        for (int i = 0; i < m; ++i) {
            if (i == pr || tab(i, pc) == 0.0) continue;
            tab.row(i) -= tab(i, pc) * tab.row(pr);
            tab(i, pc) = 0.0;
        }
        obj -= obj(pc) * tab.row(pr);
        obj(pc) = 0.0;
        basis[pr] = pc;
    }

    FeasibilityResult result;
    result.artificial_objective = std::max(0.0, -obj(ncols));
    result.feasible = result.artificial_objective <= kFeasTol;
    if (result.feasible) {
        result.solution.assign(n, 0.0);
        for (int i = 0; i < m; ++i)
            if (basis[i] < n) result.solution[basis[i]] = tab(i, ncols);
        if (!verify_solution(lp, result.solution))
            throw InternalError("check_feasible: accepted solution violates a row beyond tolerance");
    }
    return result;
}

double max_violation(const FrequencyDistributorLP& lp, const std::vector<double>& x) {
    if (x.size() != lp.variables.size())
        throw InputError("max_violation: solution length does not match variable count");
    double worst = 0.0;
    for (double v : x) worst = std::max(worst, -v);
    for (const Row& row : lp.rows) {
        double lhs = 0.0;
        for (const Term& t : row.terms) lhs += t.coeff * x[t.var];
        switch (row.rel) {
            case Relation::LessEq: worst = std::max(worst, lhs - row.rhs); break;
            case Relation::GreaterEq: worst = std::max(worst, row.rhs - lhs); break;
            case Relation::Equal: worst = std::max(worst, std::abs(lhs - row.rhs)); break;
        }
    }
    return worst;
}

bool verify_solution(const FrequencyDistributorLP& lp, const std::vector<double>& x, double tol) {
    return max_violation(lp, x) <= tol;
}

}  // namespace faircenter

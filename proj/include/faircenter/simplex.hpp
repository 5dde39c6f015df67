#pragma once

#include <vector>

#include "faircenter/fd_lp.hpp"

namespace faircenter {

/// Feasibility and pivot tolerance. Cell counts are integers and the share
/// bounds are moderate rationals, so anything beyond this is a genuine
/// violation rather than rounding noise.
constexpr double kFeasTol = 1e-7;

/// Outcome of a phase-1 solve. artificial_objective is the residual
/// infeasibility mass at termination: <= kFeasTol exactly when feasible.
struct FeasibilityResult {
    bool feasible = false;
    std::vector<double> solution;  // one value per LP variable; empty unless feasible
    double artificial_objective = 0.0;
};

/// Phase-1 simplex with Bland's rule on a dense tableau. Slacks cover the
/// inequalities, artificials the equalities; an artificial that leaves the
/// basis never re-enters. Deterministic: the same LP yields the same status
/// and the same basic solution. Throws SolverError if the pivot count
/// exceeds max_iterations (default 50 * (rows + columns)); that is a solver
/// breakdown, never an infeasibility verdict.
FeasibilityResult check_feasible(const FrequencyDistributorLP& lp, long long max_iterations = 0);

/// Largest single-row violation of x against the LP (0 when satisfied).
/// Nonnegativity of x counts as a row here.
double max_violation(const FrequencyDistributorLP& lp, const std::vector<double>& x);

bool verify_solution(const FrequencyDistributorLP& lp, const std::vector<double>& x,
                     double tol = kFeasTol);

}  // namespace faircenter

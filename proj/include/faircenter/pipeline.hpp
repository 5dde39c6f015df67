#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "faircenter/fd_lp.hpp"
#include "faircenter/greedy.hpp"
#include "faircenter/simplex.hpp"

namespace faircenter {

/// One radius guess: the interval it was drawn from and what the guess
/// established. feasible is only meaningful when reachable.
struct SearchRecord {
    double lo = 0.0;
    double hi = 0.0;
    double lambda = 0.0;
    bool reachable = false;
    bool feasible = false;
};

/// Full history of the radius search. The interval halves every iteration;
/// hi always tracks a radius known to admit a feasible distribution (or the
/// initial upper bound before the first feasible guess).
struct SearchTrace {
    std::vector<SearchRecord> records;
    double initial_hi = 0.0;
    double final_lambda = 0.0;
    int iterations() const { return static_cast<int>(records.size()); }
};

struct SearchLimits {
    double max_seconds = 0.0;       // 0 = no wall-clock budget
    long long max_iterations = 0;   // 0 = default safety cap
};

/// Raised when the wall-clock budget runs out mid-search; carries whatever
/// the search had established so far.
struct TimeLimitExceeded : std::runtime_error {
    SearchTrace partial_trace;
    TimeLimitExceeded(const std::string& what, SearchTrace trace)
        : std::runtime_error(what), partial_trace(std::move(trace)) {}
};

/// Final fair clustering: assignment maps each point to a center position,
/// radius is the largest assigned distance (never above the search's final
/// lambda), lp_solution is the fractional distribution the assignment was
/// drawn from.
struct Clustering {
    std::vector<int> assignment;
    double radius = 0.0;
    std::vector<double> lp_solution;
    std::uint64_t seed = 0;
    ViolationReport violation;
};

/// Sampling distribution for one (signature, joiner) cell: each member goes
/// to centers[j] with probability probabilities[j]. Probabilities are the LP
/// values divided by the cell count, clamped at zero and renormalized; both
/// steps move them by at most the solver tolerance.
struct CellPlan {
    int signature_id = 0;
    JoinerKey mask = 0;
    std::vector<int> centers;
    std::vector<double> probabilities;
    std::vector<int> members;
};

struct RoundingPlan {
    std::vector<CellPlan> cells;
};

/// Validates the LP solution as a per-cell distribution. Throws
/// InternalError on a clearly negative value or a cell whose probabilities
/// miss 1 by more than 1e-6.
RoundingPlan make_rounding_plan(const FrequencyDistributorLP& lp,
                                const std::vector<double>& solution,
                                const FrequencyTable& table);

/// Draw one center per point. Each point uses its own PRNG stream derived
/// from (seed xor point index), so results do not depend on iteration order
/// and any subset of points can be re-drawn reproducibly.
std::vector<int> randomized_assign(const RoundingPlan& plan, int num_points, std::uint64_t seed);
std::vector<int> randomized_assign(const FrequencyDistributorLP& lp,
                                   const std::vector<double>& solution,
                                   const FrequencyTable& table, std::uint64_t seed);

struct FairClusterResult {
    Clustering clustering;
    SearchTrace trace;
    CenterSet centers;
    FrequencyTable final_table;        // built at the terminal radius
    FrequencyDistributorLP final_lp;   // the LP certified feasible there
    double final_lambda = 0.0;
};

/// End-to-end solve: greedy seeding, then binary search on the radius with a
/// per-guess LP feasibility test, then randomized rounding of the terminal
/// feasible solution. The search interval starts at [0, 2 * max distance];
/// a guess where some point reaches no center, or where the LP is
/// infeasible, raises the lower end; a feasible guess lowers the upper end.
/// Stops once the interval is within epsilon of a feasible radius.
/// Throws InfeasibleFairnessError when even the initial upper bound admits
/// no feasible distribution (the fairness bounds themselves are the
/// obstruction, and no radius can fix them).
FairClusterResult fair_k_cluster(const PointSet& clients, const PointSet& facilities, int k,
                                 const FairnessParams& params, const GroupModel& model,
                                 double epsilon, std::uint64_t seed,
                                 const SearchLimits& limits = {});

}  // namespace faircenter

#include "faircenter/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <string>

namespace faircenter {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d649bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform draw in [0, 1) with the full 53 bits of double precision.
double uniform53(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace

RoundingPlan make_rounding_plan(const FrequencyDistributorLP& lp,
                                const std::vector<double>& solution,
                                const FrequencyTable& table) {
    if (solution.size() != lp.variables.size())
        throw InputError("make_rounding_plan: solution length does not match variable count");

    RoundingPlan plan;
    plan.cells.reserve(table.entries.size());
    std::size_t v = 0;
    for (const auto& [key, entry] : table.entries) {
        CellPlan cell;
        cell.signature_id = key.first;
        cell.mask = key.second;
        cell.members = entry.members;
        double sum = 0.0;
        for (int j : mask_centers(key.second)) {
            if (v >= lp.variables.size() || lp.variables[v].signature_id != key.first ||
                lp.variables[v].mask != key.second || lp.variables[v].center != j)
                throw InternalError("make_rounding_plan: LP variables do not line up with table");
            double p = solution[v] / static_cast<double>(entry.count);
            if (p < -1e-6)
                throw InternalError("make_rounding_plan: negative assignment probability");
            p = std::max(0.0, p);
            cell.centers.push_back(j);
            cell.probabilities.push_back(p);
            sum += p;
            ++v;
        }
        if (std::abs(sum - 1.0) > 1e-6)
            throw InternalError("make_rounding_plan: cell probabilities sum to " +
                                std::to_string(sum));
        for (double& p : cell.probabilities) p /= sum;
        plan.cells.push_back(std::move(cell));
    }
    if (v != lp.variables.size())
        throw InternalError("make_rounding_plan: unconsumed LP variables");
    return plan;
}

std::vector<int> randomized_assign(const RoundingPlan& plan, int num_points, std::uint64_t seed) {
    std::vector<int> assignment(num_points, -1);
    for (const CellPlan& cell : plan.cells) {
        for (int point : cell.members) {
            if (point < 0 || point >= num_points)
                throw InputError("randomized_assign: member index out of range");
            std::mt19937_64 engine(splitmix64(seed ^ static_cast<std::uint64_t>(point)));
            const double u = uniform53(engine);
            double cum = 0.0;
            int chosen = cell.centers.back();  // absorbs any residual mass
            for (std::size_t j = 0; j < cell.centers.size(); ++j) {
                cum += cell.probabilities[j];
                if (u < cum) {
                    chosen = cell.centers[j];
                    break;
                }
            }
            assignment[point] = chosen;
        }
    }
    for (int i = 0; i < num_points; ++i)
        if (assignment[i] < 0)
            throw InputError("randomized_assign: point " + std::to_string(i) + " is in no cell");
    return assignment;
}

std::vector<int> randomized_assign(const FrequencyDistributorLP& lp,
                                   const std::vector<double>& solution,
                                   const FrequencyTable& table, std::uint64_t seed) {
    const RoundingPlan plan = make_rounding_plan(lp, solution, table);
    long long covered = 0;
    for (const CellPlan& cell : plan.cells) covered += static_cast<long long>(cell.members.size());
    return randomized_assign(plan, static_cast<int>(covered), seed);
}

FairClusterResult fair_k_cluster(const PointSet& clients, const PointSet& facilities, int k,
                                 const FairnessParams& params, const GroupModel& model,
                                 double epsilon, std::uint64_t seed,
                                 const SearchLimits& limits) {
    if (epsilon <= 0.0) throw InputError("fair_k_cluster: epsilon must be positive");
    if (model.num_points() != clients.count())
        throw InputError("fair_k_cluster: group model covers a different point count");
    if (params.num_groups() != model.num_groups())
        throw InputError("fair_k_cluster: fairness bounds cover a different group set");

    const auto start = std::chrono::steady_clock::now();
    const auto elapsed = [&start] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    const long long max_iterations = limits.max_iterations > 0 ? limits.max_iterations : 10000;

    FairClusterResult result;
    result.centers = greedy_k_center(clients, facilities, k);
    const DistanceMatrix dmat(clients, result.centers.as_point_set());

    double lo = 0.0;
    double hi = 2.0 * dmat.max_entry();
    result.trace.initial_hi = hi;

    // The fairness bounds on their own can be unsatisfiable; no radius fixes
    // that, and the search below would walk lo up to hi forever. One solve at
    // the initial upper bound settles it.
    FrequencyTable table = build_frequency_table(model, dmat, hi);
    FrequencyDistributorLP lp = build_lp(table, params, model, k);
    FeasibilityResult fr = check_feasible(lp);
    if (!fr.feasible)
        throw InfeasibleFairnessError(
            "no assignment satisfies the group-share bounds at any radius");

    bool feasible = false;
    // Terminal state: the smallest radius certified feasible, kept for
    // rounding so the final guess is never re-solved.
    double best_lambda = hi;
    FrequencyTable best_table = std::move(table);
    FrequencyDistributorLP best_lp = std::move(lp);
    std::vector<double> best_solution = std::move(fr.solution);

    while (hi - lo > epsilon || !feasible) {
        if (limits.max_seconds > 0.0 && elapsed() > limits.max_seconds)
            throw TimeLimitExceeded("radius search exceeded " +
                                        std::to_string(limits.max_seconds) + " s",
                                    result.trace);
        if (result.trace.iterations() >= max_iterations)
            throw SolverError("fair_k_cluster: radius search iteration cap exceeded");

        double lambda = lo + (hi - lo) / 2.0;
        // Adjacent-double degeneracy: no midpoint strictly inside is left, so
        // settle for hi, which is feasible (initial bound included).
        if (lambda <= lo || lambda >= hi) lambda = hi;

        SearchRecord rec{lo, hi, lambda, false, false};
        rec.reachable = dmat.max_row_min() <= lambda;
        if (rec.reachable) {
            FrequencyTable guess_table = build_frequency_table(model, dmat, lambda);
            FrequencyDistributorLP guess_lp = build_lp(guess_table, params, model, k);
            FeasibilityResult guess = check_feasible(guess_lp);
            rec.feasible = guess.feasible;
            if (guess.feasible) {
                hi = lambda;
                feasible = true;
                best_lambda = lambda;
                best_table = std::move(guess_table);
                best_lp = std::move(guess_lp);
                best_solution = std::move(guess.solution);
            } else {
                lo = lambda;
            }
        } else {
            lo = lambda;
        }
        result.trace.records.push_back(rec);
    }

    result.trace.final_lambda = best_lambda;
    result.final_lambda = best_lambda;
    result.final_table = std::move(best_table);
    result.final_lp = std::move(best_lp);

    const RoundingPlan plan =
        make_rounding_plan(result.final_lp, best_solution, result.final_table);
    Clustering& out = result.clustering;
    out.seed = seed;
    out.lp_solution = std::move(best_solution);
    out.assignment = randomized_assign(plan, clients.count(), seed);
    out.radius = 0.0;
    for (int i = 0; i < clients.count(); ++i)
        out.radius = std::max(out.radius, dmat.entry(i, out.assignment[i]));
    out.violation = audit(out.assignment, k, model, params);
    return result;
}

}  // namespace faircenter

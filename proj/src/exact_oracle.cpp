#include "faircenter/exact_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace faircenter {

namespace {

Eigen::MatrixXd squared_distances(const PointSet& clients, const PointSet& facilities) {
    if (clients.dim() != facilities.dim())
        throw InputError("exact oracle: clients and facilities differ in dimension");
    Eigen::MatrixXd sq(clients.count(), facilities.count());
    for (int i = 0; i < clients.count(); ++i)
        for (int j = 0; j < facilities.count(); ++j)
            sq(i, j) = (clients.point(i) - facilities.point(j)).squaredNorm();
    return sq;
}

bool next_combination(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Depth-first search for one assignment respecting reachability at sq_limit
// and the exact share bounds. Prunes a branch as soon as a group's count in
// some cluster exceeds what the upper share allows even if every remaining
// point joins that cluster.
struct FairAssignmentSearch {
    const Eigen::MatrixXd& sq;          // clients x facilities
    const std::vector<int>& centers;    // facility indices of the subset
    const GroupModel& model;
    const FairnessParams& params;
    double sq_limit = 0.0;

    int n = 0, k = 0, l = 0;
    std::vector<int> assignment;
    Eigen::MatrixXi counts;   // k x l
    Eigen::VectorXi sizes;    // k

    FairAssignmentSearch(const Eigen::MatrixXd& sq_in, const std::vector<int>& centers_in,
                         const GroupModel& model_in, const FairnessParams& params_in)
        : sq(sq_in), centers(centers_in), model(model_in), params(params_in) {
        n = model.num_points();
        k = static_cast<int>(centers.size());
        l = model.num_groups();
        assignment.assign(n, -1);
        counts = Eigen::MatrixXi::Zero(k, l);
        sizes = Eigen::VectorXi::Zero(k);
    }

    bool feasible_at(double limit) {
        sq_limit = limit;
        assignment.assign(n, -1);
        counts.setZero();
        sizes.setZero();
        return place(0);
    }

    bool place(int point) {
        if (point == n) return shares_hold();
        for (int f = 0; f < k; ++f) {
            if (sq(point, centers[f]) > sq_limit) continue;
            ++sizes[f];
            bool ok = true;
            for (int g : model.signature(point)) {
                ++counts(f, g);
                // Upper share can still be met only if enough future points
                // could dilute this cluster.
                if (counts(f, g) > params.alpha[g] * (sizes[f] + (n - 1 - point))) ok = false;
            }
            if (ok) {
                assignment[point] = f;
                if (place(point + 1)) return true;
                assignment[point] = -1;
            }
            --sizes[f];
            for (int g : model.signature(point)) --counts(f, g);
        }
        return false;
    }

    bool shares_hold() const {
        for (int f = 0; f < k; ++f) {
            if (sizes[f] == 0) continue;  // empty cluster binds nothing
            for (int g = 0; g < l; ++g) {
                const double cnt = counts(f, g);
                if (cnt > params.alpha[g] * sizes[f]) return false;
                if (cnt < params.beta[g] * sizes[f]) return false;
            }
        }
        return true;
    }
};

}  // namespace

OracleResult exact_classical(const PointSet& clients, const PointSet& facilities, int k) {
    if (facilities.count() > 12)
        throw SizeLimitError("exact_classical: enumeration guard allows at most 12 facilities");
    if (k <= 0 || k > facilities.count())
        throw InputError("exact_classical: k must lie in [1, |facilities|]");

    const Eigen::MatrixXd sq = squared_distances(clients, facilities);
    const int n = clients.count();

    OracleResult best;
    double best_sq = std::numeric_limits<double>::infinity();
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    do {
        double radius_sq = 0.0;
        for (int i = 0; i < n; ++i) {
            double row_min = sq(i, comb[0]);
            for (int c = 1; c < k; ++c) row_min = std::min(row_min, sq(i, comb[c]));
            radius_sq = std::max(radius_sq, row_min);
        }
        if (radius_sq < best_sq) {
            best_sq = radius_sq;
            best.optimal_centers = comb;
        }
    } while (next_combination(comb, facilities.count()));

    best.feasible = true;
    best.optimal_radius = std::sqrt(best_sq);
    best.optimal_assignment.resize(n);
    for (int i = 0; i < n; ++i) {
        int arg = 0;
        for (int c = 1; c < k; ++c)
            if (sq(i, best.optimal_centers[c]) < sq(i, best.optimal_centers[arg])) arg = c;
        best.optimal_assignment[i] = arg;
    }
    return best;
}

OracleResult exact_fair(const PointSet& clients, const PointSet& facilities, int k,
                        const FairnessParams& params, const GroupModel& model) {
    if (clients.count() > 10)
        throw SizeLimitError("exact_fair: enumeration guard allows at most 10 points");
    if (k > 3) throw SizeLimitError("exact_fair: enumeration guard allows at most 3 centers");
    if (facilities.count() > 12)
        throw SizeLimitError("exact_fair: enumeration guard allows at most 12 facilities");
    if (k <= 0 || k > facilities.count())
        throw InputError("exact_fair: k must lie in [1, |facilities|]");
    if (model.num_points() != clients.count())
        throw InputError("exact_fair: group model covers a different point count");
    if (params.num_groups() != model.num_groups())
        throw InputError("exact_fair: fairness bounds cover a different group set");

    const Eigen::MatrixXd sq = squared_distances(clients, facilities);
    const int n = clients.count();

    OracleResult best;
    double best_sq = std::numeric_limits<double>::infinity();
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    do {
        // Candidate radii for this subset are exactly its client-center
        // distances; feasibility is monotone in the radius, so binary search
        // over the sorted grid finds the subset's minimum.
        std::vector<double> grid;
        grid.reserve(static_cast<std::size_t>(n) * k);
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < k; ++c) grid.push_back(sq(i, comb[c]));
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        // Only radii improving on the best found so far matter.
        if (best.feasible) {
            while (!grid.empty() && grid.back() >= best_sq) grid.pop_back();
        }
        if (grid.empty()) continue;

        FairAssignmentSearch search(sq, comb, model, params);
        if (!search.feasible_at(grid.back())) continue;

        std::size_t lo = 0, hi = grid.size() - 1;
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            if (search.feasible_at(grid[mid])) hi = mid;
            else lo = mid + 1;
        }
        search.feasible_at(grid[lo]);  // rebuild the witness assignment
        best_sq = grid[lo];
        best.feasible = true;
        best.optimal_centers = comb;
        best.optimal_assignment = search.assignment;
    } while (next_combination(comb, facilities.count()));

    if (best.feasible) best.optimal_radius = std::sqrt(best_sq);
    return best;
}

}  // namespace faircenter

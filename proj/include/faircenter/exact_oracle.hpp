#pragma once

#include <vector>

#include "faircenter/fairness.hpp"
#include "faircenter/geometry.hpp"

namespace faircenter {

/// Ground truth from brute-force enumeration on desk-size instances.
/// optimal_centers holds facility indices; optimal_assignment maps each
/// client to a position in optimal_centers. Both are empty when feasible is
/// false (possible only for the fairness-constrained variant).
struct OracleResult {
    double optimal_radius = 0.0;
    std::vector<int> optimal_centers;
    std::vector<int> optimal_assignment;
    bool feasible = false;
};

/// Exact k-center optimum: minimum over all k-subsets of facilities of the
/// max nearest-center distance. Radii are compared as squared distances so
/// ties order exactly. Guard: |facilities| <= 12.
OracleResult exact_classical(const PointSet& clients, const PointSet& facilities, int k);

/// Exact optimum with the group-share constraints enforced exactly (no
/// additive slack): minimum radius over all k-subsets and all assignments
/// satisfying every alpha/beta bound. Enumerates assignments depth-first
/// with partial upper-share pruning. Guards: N <= 10, k <= 3,
/// |facilities| <= 12.
OracleResult exact_fair(const PointSet& clients, const PointSet& facilities, int k,
                        const FairnessParams& params, const GroupModel& model);

}  // namespace faircenter

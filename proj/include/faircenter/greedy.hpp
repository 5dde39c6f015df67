#pragma once

#include <vector>

#include "faircenter/geometry.hpp"

namespace faircenter {

/// k chosen centers: indices into the facility set, their coordinates, and
/// the induced covering radius (max over clients of the distance to the
/// nearest chosen center).
struct CenterSet {
    std::vector<int> indices;     // k distinct facility indices
    Eigen::MatrixXd coordinates;  // k x dim, row j = facility indices[j]
    double radius = 0.0;

    int size() const { return static_cast<int>(indices.size()); }
    PointSet as_point_set() const { return PointSet(coordinates); }
};

/// Farthest-first traversal. Picks client 0 first, then repeatedly the client
/// farthest from the chosen centers; each picked client contributes its
/// nearest not-yet-chosen facility as a center. Ties break to the lowest
/// index. After every step the nearest facility of every picked client is in
/// the center set, which is what the covering-radius guarantees rely on.
CenterSet greedy_k_center(const PointSet& clients, const PointSet& facilities, int k);

/// Map every client to its nearest center; ties break to the lowest center
/// position. Returns positions into `centers` (0..k-1), not facility indices.
std::vector<int> assign_nearest(const PointSet& clients, const CenterSet& centers);

}  // namespace faircenter

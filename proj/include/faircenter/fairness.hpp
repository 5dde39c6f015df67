#pragma once

#include <vector>

#include <Eigen/Core>

#include "faircenter/errors.hpp"

namespace faircenter {

/// Sorted tuple of distinct group indices a point belongs to.
using Signature = std::vector<int>;

/// Per-point protected-group memberships plus derived quantities: group
/// sizes, population ratios, the set of distinct signatures, and the maximum
/// number of groups any single point belongs to. Immutable after construction.
class GroupModel {
public:
    /// `memberships[i]` lists the groups of point i (any order, duplicates
    /// dropped). Every point must belong to at least one group.
    GroupModel(int num_points, int num_groups, std::vector<std::vector<int>> memberships);

    int num_points() const { return num_points_; }
    int num_groups() const { return num_groups_; }
    int max_memberships() const { return max_memberships_; }  // Delta
    int group_size(int g) const { return group_sizes_[g]; }
    double group_ratio(int g) const { return ratios_[g]; }

    const Signature& signature(int point) const { return signatures_[signature_ids_[point]]; }
    int signature_id(int point) const { return signature_ids_[point]; }
    /// Distinct signatures in lexicographic order; signature ids index this.
    const std::vector<Signature>& distinct_signatures() const { return signatures_; }
    int distinct_signature_count() const { return static_cast<int>(signatures_.size()); }

    bool in_group(int point, int group) const;

private:
    int num_points_ = 0;
    int num_groups_ = 0;
    int max_memberships_ = 0;
    std::vector<int> group_sizes_;
    std::vector<double> ratios_;
    std::vector<Signature> signatures_;
    std::vector<int> signature_ids_;
};

/// Sorted distinct group indices of one point.
const Signature& signature_of(int point, const GroupModel& model);

/// Per-group fairness bounds: group g may fill at most alpha[g] and must fill
/// at least beta[g] of every cluster.
struct FairnessParams {
    Eigen::VectorXd alpha;
    Eigen::VectorXd beta;

    FairnessParams(Eigen::VectorXd a, Eigen::VectorXd b);
    int num_groups() const { return static_cast<int>(alpha.size()); }
};

/// Bounds derived from a single tightness knob: beta_g = r_g * (1 - delta),
/// alpha_g = min(1, r_g / (1 - delta)) where r_g is group g's population
/// ratio. delta = 0 demands exact proportionality.
FairnessParams params_from_delta(const GroupModel& model, double delta);

/// Per-(center, group) overshoot of the fairness bounds in an assignment.
/// rd_excess(f, g) = max(0, count(g in f) - alpha_g * size(f))
/// mp_excess(f, g) = max(0, beta_g * size(f) - count(g in f))
/// epsilon = max over all cells; zero iff the assignment is fair as-is.
struct ViolationReport {
    Eigen::MatrixXd rd_excess;               // centers x groups
    Eigen::MatrixXd mp_excess;               // centers x groups
    Eigen::MatrixXi cluster_group_counts;    // centers x groups
    Eigen::VectorXi cluster_sizes;           // centers
    double epsilon = 0.0;
};

/// Audit an assignment (point -> center position, all in [0, num_centers)).
ViolationReport audit(const std::vector<int>& assignment, int num_centers,
                      const GroupModel& model, const FairnessParams& params);

}  // namespace faircenter

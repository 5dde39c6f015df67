#include "faircenter/fairness.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace faircenter {

GroupModel::GroupModel(int num_points, int num_groups,
                       std::vector<std::vector<int>> memberships)
    : num_points_(num_points), num_groups_(num_groups) {
    if (num_points <= 0) throw InputError("GroupModel: need at least one point");
    if (num_groups <= 0) throw InputError("GroupModel: need at least one group");
    if (static_cast<int>(memberships.size()) != num_points)
        throw InputError("GroupModel: one membership list per point required");

    group_sizes_.assign(num_groups, 0);
    signature_ids_.resize(num_points);

    // Intern signatures via an ordered map so ids follow lexicographic order
    // of the signatures themselves.
    std::map<Signature, std::vector<int>> points_by_sig;
    for (int i = 0; i < num_points; ++i) {
        Signature sig = memberships[i];
        std::sort(sig.begin(), sig.end());
        sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
        if (sig.empty())
            throw InputError("GroupModel: point " + std::to_string(i) + " belongs to no group");
        if (sig.front() < 0 || sig.back() >= num_groups)
            throw InputError("GroupModel: point " + std::to_string(i) +
                             " names a group outside [0, " + std::to_string(num_groups) + ")");
        for (int g : sig) ++group_sizes_[g];
        max_memberships_ = std::max(max_memberships_, static_cast<int>(sig.size()));
        points_by_sig[std::move(sig)].push_back(i);
    }

    signatures_.reserve(points_by_sig.size());
    for (auto& [sig, points] : points_by_sig) {
        const int id = static_cast<int>(signatures_.size());
        signatures_.push_back(sig);
        for (int p : points) signature_ids_[p] = id;
    }

    ratios_.resize(num_groups);
    for (int g = 0; g < num_groups; ++g)
        ratios_[g] = static_cast<double>(group_sizes_[g]) / num_points;
}

bool GroupModel::in_group(int point, int group) const {
    const Signature& sig = signature(point);
    return std::binary_search(sig.begin(), sig.end(), group);
}

const Signature& signature_of(int point, const GroupModel& model) {
    return model.signature(point);
}

FairnessParams::FairnessParams(Eigen::VectorXd a, Eigen::VectorXd b)
    : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha.size() == 0) throw InputError("FairnessParams: empty bounds");
    if (alpha.size() != beta.size())
        throw InputError("FairnessParams: alpha and beta must cover the same groups");
    for (int g = 0; g < alpha.size(); ++g) {
        if (!(0.0 <= beta[g] && beta[g] <= alpha[g] && alpha[g] <= 1.0))
            throw InputError("FairnessParams: need 0 <= beta <= alpha <= 1 for group " +
                             std::to_string(g));
    }
}

FairnessParams params_from_delta(const GroupModel& model, double delta) {
    if (!(0.0 <= delta && delta < 1.0))
        throw InputError("params_from_delta: delta must lie in [0, 1)");
    const int l = model.num_groups();
    Eigen::VectorXd alpha(l), beta(l);
    for (int g = 0; g < l; ++g) {
        const double r = model.group_ratio(g);
        alpha[g] = std::min(1.0, r / (1.0 - delta));
        beta[g] = r * (1.0 - delta);
    }
    return FairnessParams(std::move(alpha), std::move(beta));
}

ViolationReport audit(const std::vector<int>& assignment, int num_centers,
                      const GroupModel& model, const FairnessParams& params) {
    if (num_centers <= 0) throw InputError("audit: need at least one center");
    if (static_cast<int>(assignment.size()) != model.num_points())
        throw InputError("audit: assignment must cover every point");
    if (params.num_groups() != model.num_groups())
        throw InputError("audit: fairness bounds cover a different group set");

    const int l = model.num_groups();
    ViolationReport report;
    report.cluster_group_counts = Eigen::MatrixXi::Zero(num_centers, l);
    report.cluster_sizes = Eigen::VectorXi::Zero(num_centers);

    for (int i = 0; i < model.num_points(); ++i) {
        const int f = assignment[i];
        if (f < 0 || f >= num_centers)
            throw InputError("audit: point " + std::to_string(i) + " is not assigned to a center");
        ++report.cluster_sizes[f];
        for (int g : model.signature(i)) ++report.cluster_group_counts(f, g);
    }

    report.rd_excess = Eigen::MatrixXd::Zero(num_centers, l);
    report.mp_excess = Eigen::MatrixXd::Zero(num_centers, l);
    for (int f = 0; f < num_centers; ++f) {
        const double size = report.cluster_sizes[f];
        for (int g = 0; g < l; ++g) {
            const double cnt = report.cluster_group_counts(f, g);
            report.rd_excess(f, g) = std::max(0.0, cnt - params.alpha[g] * size);
            report.mp_excess(f, g) = std::max(0.0, params.beta[g] * size - cnt);
        }
    }
    report.epsilon = std::max(report.rd_excess.maxCoeff(), report.mp_excess.maxCoeff());
    return report;
}

}  // namespace faircenter

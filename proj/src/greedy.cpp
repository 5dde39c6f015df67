#include "faircenter/greedy.hpp"

#include <limits>

namespace faircenter {

namespace {

// Nearest facility to `client` among facilities not yet used; lowest index on ties.
int nearest_unused_facility(const PointSet& facilities,
                            const Eigen::Ref<const Eigen::RowVectorXd>& client,
                            const std::vector<bool>& used) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int f = 0; f < facilities.count(); ++f) {
        if (used[f]) continue;
        const double d = distance(client, facilities.point(f));
        if (d < best_d) {
            best_d = d;
            best = f;
        }
    }
    return best;
}

}  // namespace

CenterSet greedy_k_center(const PointSet& clients, const PointSet& facilities, int k) {
    if (k <= 0) throw InputError("greedy_k_center: k must be positive");
    if (k > facilities.count()) throw InputError("greedy_k_center: k exceeds facility count");
    if (clients.dim() != facilities.dim()) throw InputError("greedy_k_center: dimension mismatch");

    const int n = clients.count();
    CenterSet out;
    out.indices.reserve(k);
    out.coordinates.resize(k, facilities.dim());

    std::vector<bool> used(facilities.count(), false);
    // dist_to_centers[i] = distance from client i to the nearest chosen center.
    std::vector<double> dist_to_centers(n, std::numeric_limits<double>::infinity());

    int pick = 0;  // first greedy client is always index 0
    for (int step = 0; step < k; ++step) {
        int f = nearest_unused_facility(facilities, clients.point(pick), used);
        used[f] = true;
        out.indices.push_back(f);
        out.coordinates.row(step) = facilities.point(f);

        int farthest = 0;
        double farthest_d = -1.0;
        for (int i = 0; i < n; ++i) {
            const double d = distance(clients.point(i), facilities.point(f));
            if (d < dist_to_centers[i]) dist_to_centers[i] = d;
            if (dist_to_centers[i] > farthest_d) {
                farthest_d = dist_to_centers[i];
                farthest = i;
            }
        }
        pick = farthest;
        out.radius = farthest_d;
    }
    return out;
}

std::vector<int> assign_nearest(const PointSet& clients, const CenterSet& centers) {
    if (centers.size() == 0) throw InputError("assign_nearest: no centers");
    std::vector<int> assignment(clients.count());
    for (int i = 0; i < clients.count(); ++i) {
        int best = 0;
        double best_d = distance(clients.point(i), centers.coordinates.row(0));
        for (int j = 1; j < centers.size(); ++j) {
            const double d = distance(clients.point(i), centers.coordinates.row(j));
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        assignment[i] = best;
    }
    return assignment;
}

}  // namespace faircenter

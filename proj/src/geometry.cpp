#include "faircenter/geometry.hpp"

#include <cmath>

namespace faircenter {

PointSet::PointSet(Eigen::MatrixXd coords) : coords_(std::move(coords)) {
    if (coords_.rows() < 1) {
        throw InputError("PointSet needs at least one point");
    }
    if (coords_.cols() < 1) {
        throw InputError("PointSet needs at least one coordinate per point");
    }
}

double distance(const Eigen::Ref<const Eigen::RowVectorXd>& a,
                const Eigen::Ref<const Eigen::RowVectorXd>& b) {
    if (a.size() != b.size()) {
        throw InputError("distance: dimension mismatch");
    }
    return std::sqrt((a - b).squaredNorm());
}

DistanceMatrix::DistanceMatrix(const PointSet& clients, const PointSet& centers) {
    if (clients.dim() != centers.dim()) {
        throw InputError("distance_matrix: dimension mismatch");
    }
    const int n = clients.count();
    const int k = centers.count();
    d_.resize(n, k);
    row_min_.resize(n);
    // Scalar loop on purpose: entries must match distance() bit-for-bit.
    for (int i = 0; i < n; ++i) {
        double rmin = std::numeric_limits<double>::infinity();
        for (int j = 0; j < k; ++j) {
            const double v = distance(clients.point(i), centers.point(j));
            d_(i, j) = v;
            if (v > max_entry_) max_entry_ = v;
            if (v < rmin) rmin = v;
        }
        row_min_(i) = rmin;
        if (rmin > max_row_min_) max_row_min_ = rmin;
    }
}

}  // namespace faircenter

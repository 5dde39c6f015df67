#pragma once

#include <Eigen/Core>

#include "faircenter/errors.hpp"

namespace faircenter {

/// A fixed set of points in d-dimensional Euclidean space, one point per row.
/// Immutable after construction; safe to share across threads.
class PointSet {
public:
    explicit PointSet(Eigen::MatrixXd coords);

    int count() const { return static_cast<int>(coords_.rows()); }
    int dim() const { return static_cast<int>(coords_.cols()); }

    Eigen::MatrixXd::ConstRowXpr point(int i) const { return coords_.row(i); }
    const Eigen::MatrixXd& coords() const { return coords_; }

private:
    Eigen::MatrixXd coords_;
};

/// Euclidean distance between two coordinate vectors of equal dimension.
double distance(const Eigen::Ref<const Eigen::RowVectorXd>& a,
                const Eigen::Ref<const Eigen::RowVectorXd>& b);

/// Dense client-by-center distance matrix with its maximum entry cached.
/// Entries are computed with the same scalar path as distance(), so
/// entry(i, j) == distance(clients.point(i), centers.point(j)) bit-exactly.
class DistanceMatrix {
public:
    DistanceMatrix(const PointSet& clients, const PointSet& centers);

    double entry(int client, int center) const { return d_(client, center); }
    const Eigen::MatrixXd& matrix() const { return d_; }
    int clients() const { return static_cast<int>(d_.rows()); }
    int centers() const { return static_cast<int>(d_.cols()); }
    double max_entry() const { return max_entry_; }

    /// Distance from one client to its nearest center.
    double row_min(int client) const { return row_min_(client); }
    /// Nearest-center distance maximized over clients: the smallest radius at
    /// which every client reaches some center.
    double max_row_min() const { return max_row_min_; }

private:
    Eigen::MatrixXd d_;
    Eigen::VectorXd row_min_;
    double max_entry_ = 0.0;
    double max_row_min_ = 0.0;
};

}  // namespace faircenter

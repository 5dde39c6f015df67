#include <random>

#include "doctest.h"
#include "faircenter/geometry.hpp"
#include "generators.hpp"

using faircenter::DistanceMatrix;
using faircenter::PointSet;

TEST_SUITE_BEGIN("geometry");

TEST_CASE("distance on known vectors") {
    Eigen::RowVectorXd a(2), b(2);
    a << 0, 0;
    b << 3, 4;
    CHECK(faircenter::distance(a, b) == 5.0);

    Eigen::RowVectorXd c(2);
    c << 1, 1;
    CHECK(faircenter::distance(c, c) == 0.0);

    Eigen::RowVectorXd p(3), q(3);
    p << 0, 0, 0;
    q << 1, 2, 2;
    CHECK(faircenter::distance(p, q) == 3.0);
}

TEST_CASE("distance rejects mismatched dimensions") {
    Eigen::RowVectorXd a(2), b(3);
    a.setZero();
    b.setZero();
    CHECK_THROWS_AS(faircenter::distance(a, b), faircenter::InputError);
}

TEST_CASE("point set validation") {
    CHECK_THROWS_AS(PointSet(Eigen::MatrixXd(0, 2)), faircenter::InputError);
    CHECK_THROWS_AS(PointSet(Eigen::MatrixXd(3, 0)), faircenter::InputError);
    const PointSet ok(Eigen::MatrixXd::Zero(3, 2));
    CHECK(ok.count() == 3);
    CHECK(ok.dim() == 2);
}

TEST_CASE("one-cell and one-column matrices") {
    const PointSet origin(Eigen::MatrixXd::Zero(1, 2));
    const DistanceMatrix single(origin, origin);
    CHECK(single.entry(0, 0) == 0.0);

    Eigen::MatrixXd two(2, 2);
    two << 0, 0, 1, 0;
    const DistanceMatrix column(PointSet(two), origin);
    CHECK(column.entry(0, 0) == 0.0);
    CHECK(column.entry(1, 0) == 1.0);
    CHECK(column.max_entry() == 1.0);
    CHECK(column.max_row_min() == 1.0);
}

TEST_CASE("matrix agrees with pointwise distance calls") {
    std::mt19937_64 rng(11);
    const PointSet clients = testgen::random_points(rng, 10, 4);
    const PointSet centers = testgen::random_points(rng, 3, 4);
    const DistanceMatrix dmat(clients, centers);

    double max_entry = 0.0, max_row_min = 0.0;
    for (int i = 0; i < 10; ++i) {
        double row_min = std::numeric_limits<double>::infinity();
        for (int j = 0; j < 3; ++j) {
            const double d = faircenter::distance(clients.point(i), centers.point(j));
            CHECK(dmat.entry(i, j) == d);  // bit-exact, same code path
            max_entry = std::max(max_entry, d);
            row_min = std::min(row_min, d);
        }
        CHECK(dmat.row_min(i) == row_min);
        max_row_min = std::max(max_row_min, row_min);
    }
    CHECK(dmat.max_entry() == max_entry);
    CHECK(dmat.max_row_min() == max_row_min);
}

TEST_CASE("metric properties on random triples") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const PointSet pts = testgen::random_points(rng, 3, 1 + trial % 5);
        const double ab = faircenter::distance(pts.point(0), pts.point(1));
        const double ba = faircenter::distance(pts.point(1), pts.point(0));
        const double bc = faircenter::distance(pts.point(1), pts.point(2));
        const double ac = faircenter::distance(pts.point(0), pts.point(2));
        CHECK(ab == ba);
        CHECK(ab >= 0.0);
        CHECK(ac <= ab + bc + 1e-9);
    }
}

TEST_SUITE_END();

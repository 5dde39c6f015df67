#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "faircenter/joiners.hpp"
#include "generators.hpp"
#include "venn_fixture.hpp"

using faircenter::DistanceMatrix;
using faircenter::FrequencyTable;
using faircenter::GroupModel;
using faircenter::JoinerKey;
using faircenter::PointSet;

TEST_SUITE_BEGIN("joiners");

namespace {

PointSet single_point(double x, double y) {
    Eigen::MatrixXd m(1, 2);
    m << x, y;
    return PointSet(std::move(m));
}

}  // namespace

TEST_CASE("joiner masks from closed balls") {
    const DistanceMatrix dmat(single_point(0.0, 0.0), single_point(3.0, 4.0));
    CHECK(faircenter::joiner_of(0, dmat, 5.0) == JoinerKey{1});  // boundary counts
    CHECK(faircenter::joiner_of(0, dmat, 4.999) == faircenter::kUnreachable);

    CHECK_THROWS_AS(faircenter::joiner_of(1, dmat, 5.0), faircenter::InputError);
    CHECK_THROWS_AS(faircenter::joiner_of(0, dmat, -1.0), faircenter::InputError);
}

TEST_CASE("mask_centers lists set bits ascending") {
    CHECK(faircenter::mask_centers(0b101) == std::vector<int>{0, 2});
    CHECK(faircenter::mask_centers(0) == std::vector<int>{});
    CHECK(faircenter::mask_centers(JoinerKey{1} << 63) == std::vector<int>{63});
}

TEST_CASE("fixture points get the expected overlap masks") {
    const DistanceMatrix dmat(vennfixture::points(),
                              vennfixture::centers().as_point_set());
    CHECK(faircenter::joiner_of(6, dmat, vennfixture::kLambda) == JoinerKey{0b010});
    CHECK(faircenter::joiner_of(12, dmat, vennfixture::kLambda) == JoinerKey{0b101});
    CHECK(faircenter::joiner_of(11, dmat, vennfixture::kLambda) == JoinerKey{0b111});
}

TEST_CASE("fixture table matches the hand-computed cells") {
    const FrequencyTable table = vennfixture::table();
    const auto expected = vennfixture::expected_cells();
    REQUIRE(table.cell_count() == static_cast<int>(expected.size()));
    CHECK(table.lambda == vennfixture::kLambda);

    const GroupModel model = vennfixture::model();
    auto it = table.entries.begin();
    for (const auto& cell : expected) {
        REQUIRE(it != table.entries.end());
        CHECK(it->first.first == cell.signature_id);
        CHECK(it->first.second == cell.mask);
        CHECK(it->second.count == cell.count);
        CHECK(it->second.count == static_cast<long long>(it->second.members.size()));
        for (int member : it->second.members)
            CHECK(model.signature_id(member) == cell.signature_id);
        ++it;
    }
    CHECK(it == table.entries.end());
    CHECK(table.total_count() == 16);
    CHECK(table.joiner_count() == 6);  // {0},{1},{2},{0,2},{1,2},{0,1,2}
}

TEST_CASE("huge lambda collapses the table to one full-mask cell per signature") {
    const auto pts = vennfixture::points();
    const auto model = vennfixture::model();
    const DistanceMatrix dmat(pts, vennfixture::centers().as_point_set());
    const FrequencyTable table = faircenter::build_frequency_table(model, dmat, 1e9);

    REQUIRE(table.cell_count() == model.distinct_signature_count());
    for (const auto& [key, entry] : table.entries) {
        CHECK(key.second == JoinerKey{0b111});
        CHECK(entry.count > 0);
    }
    CHECK(table.total_count() == 16);
}

TEST_CASE("table cells partition the points") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 40);
        const int k = 1 + static_cast<int>(rng() % 5);
        const int l = 1 + static_cast<int>(rng() % 3);
        const PointSet clients = testgen::random_points(rng, n, 2);
        const PointSet facilities = testgen::random_points(rng, k, 2);
        const GroupModel model = testgen::random_group_model(rng, n, l, 2);
        const DistanceMatrix dmat(clients, facilities);

        // lambda at the covering radius guarantees reachability
        const double lambda = dmat.max_row_min() * (1.0 + 0.5 * (trial % 3));
        const FrequencyTable table = faircenter::build_frequency_table(model, dmat, lambda);

        CHECK(table.total_count() == n);
        CHECK(table.joiner_count() <= std::min((1LL << k) - 1, static_cast<long long>(n)));

        std::vector<int> owner(n, -1);
        for (const auto& [key, entry] : table.entries) {
            CHECK(entry.count == static_cast<long long>(entry.members.size()));
            for (std::size_t m = 0; m < entry.members.size(); ++m) {
                const int point = entry.members[m];
                if (m > 0) CHECK(point > entry.members[m - 1]);
                CHECK(owner[point] == -1);  // disjoint cells
                owner[point] = 1;
                // membership agrees with a direct recomputation
                CHECK(model.signature_id(point) == key.first);
                JoinerKey recomputed = 0;
                for (int j = 0; j < k; ++j) {
                    const double d = faircenter::distance(clients.point(point),
                                                          facilities.point(j));
                    if (d <= lambda) recomputed |= JoinerKey{1} << j;
                }
                CHECK(recomputed == key.second);
            }
        }
        for (int i = 0; i < n; ++i) CHECK(owner[i] == 1);  // every point covered
    }
}

TEST_CASE("masks grow monotonically with lambda") {
    std::mt19937_64 rng(43);
    const PointSet clients = testgen::random_points(rng, 20, 3);
    const PointSet facilities = testgen::random_points(rng, 4, 3);
    const DistanceMatrix dmat(clients, facilities);
    for (int trial = 0; trial < 50; ++trial) {
        double a = dmat.max_entry() * (rng() % 1000) / 1000.0;
        double b = dmat.max_entry() * (rng() % 1000) / 1000.0;
        if (a > b) std::swap(a, b);
        for (int i = 0; i < 20; ++i) {
            const JoinerKey small = faircenter::joiner_of(i, dmat, a);
            const JoinerKey big = faircenter::joiner_of(i, dmat, b);
            CHECK((small & big) == small);  // subset
        }
    }
}

TEST_CASE("unreachable points abort table construction") {
    Eigen::MatrixXd cm(2, 1), fm(1, 1);
    cm << 0.0, 100.0;
    fm << 0.0;
    const DistanceMatrix dmat(PointSet(std::move(cm)), PointSet(std::move(fm)));
    const GroupModel model(2, 1, {{0}, {0}});
    bool threw = false;
    try {
        faircenter::build_frequency_table(model, dmat, 1.0);
    } catch (const faircenter::UnreachablePointError& e) {
        threw = true;
        CHECK(std::string(e.what()).find("point 1") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("more than 64 centers is rejected") {
    std::mt19937_64 rng(47);
    const PointSet clients = testgen::random_points(rng, 3, 2);
    const PointSet facilities = testgen::random_points(rng, 65, 2);
    const DistanceMatrix dmat(clients, facilities);
    const GroupModel model(3, 1, {{0}, {0}, {0}});
    CHECK_THROWS_AS(faircenter::joiner_of(0, dmat, 1e9), faircenter::SizeLimitError);
    CHECK_THROWS_AS(faircenter::build_frequency_table(model, dmat, 1e9),
                    faircenter::SizeLimitError);
}

TEST_CASE("csv dump walks the table in order") {
    std::ostringstream out;
    faircenter::dump_table_csv(vennfixture::table(), vennfixture::model(), out);
    std::istringstream in(out.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "mask,signature,count");
    REQUIRE(std::getline(in, line));
    CHECK(line == "0,0,1");  // red in ball 0
    REQUIRE(std::getline(in, line));
    CHECK(line == "1,0,2");  // red in ball 1
    int rows = 2;
    while (std::getline(in, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 13);
    // the triple-overlap cell shows the '+' separator
    CHECK(out.str().find("0+1+2,0,1") != std::string::npos);
    CHECK(out.str().find("0+2,2,1") != std::string::npos);
}

TEST_SUITE_END();

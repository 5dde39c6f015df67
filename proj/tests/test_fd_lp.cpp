#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "faircenter/fd_lp.hpp"
#include "generators.hpp"
#include "venn_fixture.hpp"

using faircenter::build_lp;
using faircenter::FrequencyDistributorLP;
using faircenter::FrequencyTable;
using faircenter::GroupModel;
using faircenter::Relation;
using faircenter::Variable;

TEST_SUITE_BEGIN("fd_lp");

namespace {

int rows_with(const FrequencyDistributorLP& lp, Relation rel) {
    int n = 0;
    for (const auto& row : lp.rows)
        if (row.rel == rel) ++n;
    return n;
}

FrequencyDistributorLP fixture_lp(double alpha) {
    return build_lp(vennfixture::table(), vennfixture::uniform_alpha(alpha),
                    vennfixture::model(), 3);
}

}  // namespace

TEST_CASE("fixture program has the known shape") {
    const FrequencyDistributorLP lp = fixture_lp(0.5);
    CHECK(lp.variables.size() == 18);
    CHECK(rows_with(lp, Relation::Equal) == 13);
    CHECK(rows_with(lp, Relation::LessEq) == 9);     // 3 groups x 3 centers
    CHECK(rows_with(lp, Relation::GreaterEq) == 0);  // beta == 0 dropped
    CHECK(lp.num_centers == 3);
    CHECK(lp.num_groups == 3);
    CHECK(lp.num_signatures == 3);
    CHECK(lp.num_points == 16);
}

TEST_CASE("variables follow cells lexicographically with centers ascending") {
    const FrequencyDistributorLP lp = fixture_lp(0.5);
    std::vector<Variable> expected;
    for (const auto& cell : vennfixture::expected_cells())
        for (int j : faircenter::mask_centers(cell.mask))
            expected.push_back({cell.signature_id, cell.mask, j});
    REQUIRE(lp.variables.size() == expected.size());
    for (std::size_t v = 0; v < expected.size(); ++v) {
        CHECK(lp.variables[v] == expected[v]);
        // the center a variable routes to is always inside its mask
        CHECK(((lp.variables[v].mask >> lp.variables[v].center) & 1) == 1);
    }
}

TEST_CASE("conservation rows carry the cell counts in table order") {
    const FrequencyDistributorLP lp = fixture_lp(0.5);
    const auto expected = vennfixture::expected_cells();
    std::size_t cell = 0;
    int next_var = 0;
    for (const auto& row : lp.rows) {
        if (row.rel != Relation::Equal) continue;
        REQUIRE(cell < expected.size());
        CHECK(row.rhs == static_cast<double>(expected[cell].count));
        CHECK(row.terms.size() == faircenter::mask_centers(expected[cell].mask).size());
        for (const auto& term : row.terms) {
            CHECK(term.coeff == 1.0);
            CHECK(term.var == next_var);  // contiguous block per cell
            ++next_var;
        }
        ++cell;
    }
    CHECK(cell == expected.size());
    CHECK(next_var == static_cast<int>(lp.variables.size()));
}

TEST_CASE("share rows are grouped by center, upper before lower") {
    Eigen::VectorXd a = Eigen::VectorXd::Constant(3, 0.5);
    Eigen::VectorXd b = Eigen::VectorXd::Constant(3, 0.1);
    const FrequencyDistributorLP lp = build_lp(
        vennfixture::table(), faircenter::FairnessParams(a, b), vennfixture::model(), 3);
    CHECK(rows_with(lp, Relation::GreaterEq) == 9);
    CHECK(rows_with(lp, Relation::LessEq) == 9);

    int at = 0;
    for (int j = 0; j < 3; ++j) {
        for (int g = 0; g < 3; ++g) {
            (void)g;
            for (const Relation rel : {Relation::LessEq, Relation::GreaterEq}) {
                REQUIRE(at < static_cast<int>(lp.rows.size()));
                const auto& row = lp.rows[at++];
                CHECK(row.rel == rel);
                CHECK(row.rhs == 0.0);
                for (const auto& term : row.terms)
                    CHECK(lp.variables[term.var].center == j);
            }
        }
    }
    // everything after the share block is conservation
    for (; at < static_cast<int>(lp.rows.size()); ++at)
        CHECK(lp.rows[at].rel == Relation::Equal);
}

TEST_CASE("share coefficients encode membership minus bound") {
    const FrequencyDistributorLP lp = fixture_lp(0.5);
    const GroupModel model = vennfixture::model();
    const auto& signatures = model.distinct_signatures();
    // rows come center-major: row index j*3 + a for center j, group a
    for (int j = 0; j < 3; ++j) {
        for (int a = 0; a < 3; ++a) {
            const auto& row = lp.rows[j * 3 + a];
            REQUIRE(row.rel == Relation::LessEq);
            for (const auto& term : row.terms) {
                const auto& sig = signatures[lp.variables[term.var].signature_id];
                const bool member =
                    std::find(sig.begin(), sig.end(), a) != sig.end();
                CHECK(term.coeff == (member ? 0.5 : -0.5));
            }
        }
    }
}

TEST_CASE("vacuous bounds leave only conservation rows") {
    // single group, alpha 1, beta 0: every share coefficient is zero
    std::mt19937_64 rng(53);
    const auto clients = testgen::random_points(rng, 6, 2);
    const auto facilities = testgen::random_points(rng, 2, 2);
    const faircenter::DistanceMatrix dmat(clients, facilities);
    const GroupModel model(6, 1, {{0}, {0}, {0}, {0}, {0}, {0}});
    const FrequencyTable table =
        faircenter::build_frequency_table(model, dmat, dmat.max_row_min());
    Eigen::VectorXd a(1), b(1);
    a << 1.0;
    b << 0.0;
    const FrequencyDistributorLP lp =
        build_lp(table, faircenter::FairnessParams(a, b), model, 2);
    CHECK(!lp.rows.empty());
    for (const auto& row : lp.rows) CHECK(row.rel == Relation::Equal);
}

TEST_CASE("emitted sizes respect the worst-case bounds") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 30);
        const int k = 1 + static_cast<int>(rng() % 5);
        const int l = 1 + static_cast<int>(rng() % 3);
        const auto clients = testgen::random_points(rng, n, 2);
        const auto facilities = testgen::random_points(rng, k, 2);
        const faircenter::DistanceMatrix dmat(clients, facilities);
        const GroupModel model = testgen::random_group_model(rng, n, l, 2);
        const double lambda = dmat.max_row_min() * (1.0 + (trial % 4) * 0.4);
        const FrequencyTable table = faircenter::build_frequency_table(model, dmat, lambda);
        const FrequencyDistributorLP lp =
            build_lp(table, testgen::random_params(rng, l), model, k);

        const faircenter::LpStats stats = faircenter::lp_stats(lp);
        CHECK(stats.variables == static_cast<long long>(lp.variables.size()));
        CHECK(stats.rows == static_cast<long long>(lp.rows.size()));
        CHECK(stats.variables <= stats.variable_bound);
        CHECK(stats.counted_rows <= stats.row_bound);
        CHECK(stats.variables <= static_cast<long long>(n) * k);
    }
}

TEST_CASE("cell-mates are interchangeable: swapping them rebuilds the same program") {
    // points 4 and 6 share the cell (red, ball 1); swapping their coordinates
    // permutes members but leaves every (signature, mask) count alone
    Eigen::MatrixXd coords = vennfixture::points().coords();
    coords.row(4).swap(coords.row(6));
    const faircenter::PointSet swapped(std::move(coords));

    const faircenter::DistanceMatrix original(vennfixture::points(),
                                              vennfixture::centers().as_point_set());
    const faircenter::DistanceMatrix permuted(swapped,
                                              vennfixture::centers().as_point_set());
    const GroupModel model = vennfixture::model();
    const auto params = vennfixture::uniform_alpha(0.5);

    std::ostringstream a, b;
    faircenter::write_lp_text(
        build_lp(faircenter::build_frequency_table(model, original, vennfixture::kLambda),
                 params, model, 3),
        a);
    faircenter::write_lp_text(
        build_lp(faircenter::build_frequency_table(model, permuted, vennfixture::kLambda),
                 params, model, 3),
        b);
    CHECK(a.str() == b.str());
}

TEST_CASE("text form round-trips exactly") {
    Eigen::VectorXd a = Eigen::VectorXd::Constant(3, 1.0 / 3.0);
    Eigen::VectorXd b = Eigen::VectorXd::Constant(3, 0.1);
    const FrequencyDistributorLP lp = build_lp(
        vennfixture::table(), faircenter::FairnessParams(a, b), vennfixture::model(), 3);

    std::ostringstream first;
    faircenter::write_lp_text(lp, first);
    std::istringstream in(first.str());
    const FrequencyDistributorLP reparsed = faircenter::parse_lp_text(in);

    REQUIRE(reparsed.variables.size() == lp.variables.size());
    for (std::size_t v = 0; v < lp.variables.size(); ++v)
        CHECK(reparsed.variables[v] == lp.variables[v]);
    REQUIRE(reparsed.rows.size() == lp.rows.size());
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        CHECK(reparsed.rows[r].rel == lp.rows[r].rel);
        CHECK(reparsed.rows[r].rhs == lp.rows[r].rhs);  // bit-exact through %.17g
        REQUIRE(reparsed.rows[r].terms.size() == lp.rows[r].terms.size());
        for (std::size_t t = 0; t < lp.rows[r].terms.size(); ++t) {
            CHECK(reparsed.rows[r].terms[t].var == lp.rows[r].terms[t].var);
            CHECK(reparsed.rows[r].terms[t].coeff == lp.rows[r].terms[t].coeff);
        }
    }

    std::ostringstream second;
    faircenter::write_lp_text(reparsed, second);
    CHECK(second.str() == first.str());
}

TEST_CASE("construction rejects malformed input") {
    const auto table = vennfixture::table();
    const auto model = vennfixture::model();
    const auto params = vennfixture::uniform_alpha(0.5);

    CHECK_THROWS_AS(build_lp(table, params, model, 0), faircenter::InputError);
    CHECK_THROWS_AS(build_lp(table, params, model, 65), faircenter::SizeLimitError);
    // masks in the table name center 2, so k = 2 cannot host it
    CHECK_THROWS_AS(build_lp(table, params, model, 2), faircenter::InputError);

    Eigen::VectorXd a(2), b(2);
    a << 0.5, 0.5;
    b << 0.0, 0.0;
    CHECK_THROWS_AS(build_lp(table, faircenter::FairnessParams(a, b), model, 3),
                    faircenter::InputError);

    std::istringstream garbage("nonsense");
    CHECK_THROWS_AS(faircenter::parse_lp_text(garbage), faircenter::InputError);
}

TEST_SUITE_END();

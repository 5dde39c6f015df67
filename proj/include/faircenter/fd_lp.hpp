#pragma once

#include <ostream>
#include <vector>

#include "faircenter/joiners.hpp"

namespace faircenter {

enum class Relation { LessEq, GreaterEq, Equal };

/// One distribution variable: how many points of cell (signature, mask) go
/// to center `center`. The center is always a member of the mask.
struct Variable {
    int signature_id = 0;
    JoinerKey mask = 0;
    int center = 0;

    friend bool operator==(const Variable&, const Variable&) = default;
};

struct Term {
    int var = 0;  // index into FrequencyDistributorLP::variables
    double coeff = 0.0;
};

struct Row {
    std::vector<Term> terms;
    Relation rel = Relation::Equal;
    double rhs = 0.0;
};

/// Feasibility program distributing each cell count among that cell's
/// centers. Three constraint families:
///   (1) per (group, center): group share between beta and alpha of the
///       cluster mass routed to that center;
///   (2) per cell: routed mass sums to the cell count;
///   (3) nonnegativity, kept as variable bounds rather than rows.
/// Variables are ordered lexicographically by (signature, mask, center).
struct FrequencyDistributorLP {
    std::vector<Variable> variables;
    std::vector<Row> rows;
    int num_centers = 0;
    int num_groups = 0;
    int num_signatures = 0;   // distinct signatures in the source model
    long long num_points = 0;  // total table count
};

/// Emitted sizes next to the worst-case bounds they must respect. For the
/// bound comparison each (group, center) share constraint counts once even
/// when emitted as two rows or dropped as vacuous, matching how the bound is
/// derived.
struct LpStats {
    long long variables = 0;
    long long rows = 0;             // rows actually emitted
    long long counted_rows = 0;     // share pairs + cells + variables
    long long variable_bound = 0;   // min(2^(k-1) * k * |I|, N * k)
    long long row_bound = 0;        // k*l + min(2^k * |I|, N*k) + variable_bound
};

/// Share rows with every coefficient zero are dropped (vacuous), and the
/// lower-share row of a group with beta == 0 is dropped as implied by
/// nonnegativity; both still count in LpStats::counted_rows.
FrequencyDistributorLP build_lp(const FrequencyTable& table, const FairnessParams& params,
                                const GroupModel& model, int k);

LpStats lp_stats(const FrequencyDistributorLP& lp);

/// Plain-text dump: variable labels, then one line per row with a sparse
/// coefficient list. Exact round-trip through parse_lp_text.
void write_lp_text(const FrequencyDistributorLP& lp, std::ostream& out);
FrequencyDistributorLP parse_lp_text(std::istream& in);

}  // namespace faircenter

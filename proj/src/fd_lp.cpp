#include "faircenter/fd_lp.hpp"

#include <algorithm>
#include <climits>
#include <cstdio>
#include <istream>
#include <sstream>
#include <string>

namespace faircenter {

namespace {

// 2^e * m saturating at LLONG_MAX, for the worst-case size bounds at k
// close to the 64-center cap.
long long pow2_times(int e, long long m) {
    if (e >= 62) return LLONG_MAX;
    const long long p = 1LL << e;
    if (m > LLONG_MAX / p) return LLONG_MAX;
    return p * m;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* rel_token(Relation rel) {
    switch (rel) {
        case Relation::LessEq: return "<=";
        case Relation::GreaterEq: return ">=";
        case Relation::Equal: return "=";
    }
    throw InternalError("rel_token: bad relation");
}

Relation parse_rel(const std::string& tok) {
    if (tok == "<=") return Relation::LessEq;
    if (tok == ">=") return Relation::GreaterEq;
    if (tok == "=") return Relation::Equal;
    throw InputError("parse_lp_text: bad relation token '" + tok + "'");
}

}  // namespace

FrequencyDistributorLP build_lp(const FrequencyTable& table, const FairnessParams& params,
                                const GroupModel& model, int k) {
    if (k <= 0) throw InputError("build_lp: need at least one center");
    if (k > kMaxCenters) throw SizeLimitError("build_lp: at most 64 centers supported");
    if (params.num_groups() != model.num_groups())
        throw InputError("build_lp: fairness bounds cover a different group set");

    FrequencyDistributorLP lp;
    lp.num_centers = k;
    lp.num_groups = model.num_groups();
    lp.num_signatures = model.distinct_signature_count();
    lp.num_points = table.total_count();

    // Variables in table order (already lexicographic by signature then mask)
    // with centers ascending inside each cell.
    std::vector<std::vector<int>> vars_by_center(k);
    for (const auto& [key, entry] : table.entries) {
        const auto& [sig_id, mask] = key;
        if (mask == kUnreachable) throw InternalError("build_lp: empty joiner key in table");
        for (int j : mask_centers(mask)) {
            if (j >= k) throw InputError("build_lp: table mask names center beyond k");
            vars_by_center[j].push_back(static_cast<int>(lp.variables.size()));
            lp.variables.push_back({sig_id, mask, j});
        }
    }

    const auto& signatures = model.distinct_signatures();
    std::vector<std::vector<char>> sig_has(signatures.size(),
                                           std::vector<char>(lp.num_groups, 0));
    for (std::size_t s = 0; s < signatures.size(); ++s)
        for (int g : signatures[s]) sig_has[s][g] = 1;

    // Family (1): group-share rows, center-major like the source formulation.
    // sum_{cells with j in mask, a in sig} x  <=> bound * sum_{cells with j} x
    // rearranged to a single-sided row with rhs 0.
    for (int j = 0; j < k; ++j) {
        for (int a = 0; a < lp.num_groups; ++a) {
            Row upper{{}, Relation::LessEq, 0.0};
            Row lower{{}, Relation::GreaterEq, 0.0};
            for (int v : vars_by_center[j]) {
                const double member = sig_has[lp.variables[v].signature_id][a] ? 1.0 : 0.0;
                const double cu = member - params.alpha[a];
                const double cl = member - params.beta[a];
                if (cu != 0.0) upper.terms.push_back({v, cu});
                if (cl != 0.0) lower.terms.push_back({v, cl});
            }
            if (!upper.terms.empty()) lp.rows.push_back(std::move(upper));
            // beta == 0 makes the lower row a consequence of x >= 0.
            if (params.beta[a] != 0.0 && !lower.terms.empty()) lp.rows.push_back(std::move(lower));
        }
    }

    // Family (2): each cell's mass is conserved.
    int v = 0;
    for (const auto& [key, entry] : table.entries) {
        Row row{{}, Relation::Equal, static_cast<double>(entry.count)};
        for (int j : mask_centers(key.second)) {
            (void)j;
            row.terms.push_back({v, 1.0});
            ++v;
        }
        lp.rows.push_back(std::move(row));
    }

    return lp;
}

LpStats lp_stats(const FrequencyDistributorLP& lp) {
    LpStats stats;
    stats.variables = static_cast<long long>(lp.variables.size());
    stats.rows = static_cast<long long>(lp.rows.size());

    long long cells = 0;
    for (const Row& row : lp.rows)
        if (row.rel == Relation::Equal) ++cells;

    const long long k = lp.num_centers;
    const long long l = lp.num_groups;
    const long long I = lp.num_signatures;
    const long long N = lp.num_points;

    stats.counted_rows = k * l + cells + stats.variables;
    stats.variable_bound = std::min(pow2_times(lp.num_centers - 1, k * I), N * k);
    stats.row_bound = k * l + std::min(pow2_times(lp.num_centers, I), N * k) +
                      stats.variable_bound;
    return stats;
}

void write_lp_text(const FrequencyDistributorLP& lp, std::ostream& out) {
    out << "lp " << lp.variables.size() << ' ' << lp.rows.size() << ' ' << lp.num_centers << ' '
        << lp.num_groups << ' ' << lp.num_signatures << ' ' << lp.num_points << '\n';
    for (std::size_t v = 0; v < lp.variables.size(); ++v) {
        const Variable& var = lp.variables[v];
        out << "var " << v << ' ' << var.signature_id << ' ' << var.mask << ' ' << var.center
            << '\n';
    }
    for (const Row& row : lp.rows) {
        out << "row " << rel_token(row.rel) << ' ' << fmt_double(row.rhs) << ' '
            << row.terms.size();
        for (const Term& term : row.terms)
            out << ' ' << term.var << ':' << fmt_double(term.coeff);
        out << '\n';
    }
}

FrequencyDistributorLP parse_lp_text(std::istream& in) {
    FrequencyDistributorLP lp;
    std::string tag;
    if (!(in >> tag) || tag != "lp") throw InputError("parse_lp_text: missing header");
    std::size_t nvars = 0, nrows = 0;
    in >> nvars >> nrows >> lp.num_centers >> lp.num_groups >> lp.num_signatures >> lp.num_points;
    if (!in) throw InputError("parse_lp_text: bad header");

    lp.variables.resize(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
        std::size_t idx = 0;
        if (!(in >> tag >> idx) || tag != "var" || idx != i)
            throw InputError("parse_lp_text: bad variable line");
        in >> lp.variables[i].signature_id >> lp.variables[i].mask >> lp.variables[i].center;
        if (!in) throw InputError("parse_lp_text: bad variable line");
    }

    lp.rows.resize(nrows);
    for (std::size_t r = 0; r < nrows; ++r) {
        std::string rel;
        std::size_t nterms = 0;
        if (!(in >> tag >> rel) || tag != "row") throw InputError("parse_lp_text: bad row line");
        Row& row = lp.rows[r];
        row.rel = parse_rel(rel);
        if (!(in >> row.rhs >> nterms)) throw InputError("parse_lp_text: bad row line");
        row.terms.resize(nterms);
        for (std::size_t t = 0; t < nterms; ++t) {
            std::string pair;
            if (!(in >> pair)) throw InputError("parse_lp_text: truncated row");
            const auto colon = pair.find(':');
            if (colon == std::string::npos) throw InputError("parse_lp_text: bad term '" + pair + "'");
            row.terms[t].var = std::stoi(pair.substr(0, colon));
            row.terms[t].coeff = std::stod(pair.substr(colon + 1));
        }
    }
    return lp;
}

}  // namespace faircenter

#include "faircenter/joiners.hpp"

#include <string>

namespace faircenter {

namespace {

void check_center_count(int k) {
    if (k > kMaxCenters)
        throw SizeLimitError("joiner masks support at most " + std::to_string(kMaxCenters) +
                             " centers, got " + std::to_string(k));
}

std::string join_plus(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += '+';
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

JoinerKey joiner_of(int point, const DistanceMatrix& dmat, double lambda) {
    if (point < 0 || point >= dmat.clients()) throw InputError("joiner_of: point out of range");
    if (lambda < 0.0) throw InputError("joiner_of: lambda must be nonnegative");
    check_center_count(dmat.centers());

    JoinerKey mask = 0;
    for (int j = 0; j < dmat.centers(); ++j) {
        if (dmat.entry(point, j) <= lambda) mask |= JoinerKey{1} << j;
    }
    return mask;
}

std::vector<int> mask_centers(JoinerKey mask) {
    std::vector<int> centers;
    for (int j = 0; j < kMaxCenters; ++j) {
        if (mask & (JoinerKey{1} << j)) centers.push_back(j);
    }
    return centers;
}

long long FrequencyTable::total_count() const {
    long long total = 0;
    for (const auto& [key, entry] : entries) total += entry.count;
    return total;
}

int FrequencyTable::joiner_count() const {
    std::map<JoinerKey, bool> seen;
    for (const auto& [key, entry] : entries) seen[key.second] = true;
    return static_cast<int>(seen.size());
}

FrequencyTable build_frequency_table(const GroupModel& model, const DistanceMatrix& dmat,
                                     double lambda) {
    if (model.num_points() != dmat.clients())
        throw InputError("build_frequency_table: group model and distance matrix disagree on N");
    check_center_count(dmat.centers());

    FrequencyTable table;
    table.lambda = lambda;
    for (int i = 0; i < dmat.clients(); ++i) {
        const JoinerKey mask = joiner_of(i, dmat, lambda);
        if (mask == kUnreachable)
            throw UnreachablePointError("point " + std::to_string(i) +
                                        " is outside every center ball at radius " +
                                        std::to_string(lambda));
        TableEntry& entry = table.entries[{model.signature_id(i), mask}];
        ++entry.count;
        entry.members.push_back(i);
    }
    return table;
}

void dump_table_csv(const FrequencyTable& table, const GroupModel& model, std::ostream& out) {
    out << "mask,signature,count\n";
    for (const auto& [key, entry] : table.entries) {
        out << join_plus(mask_centers(key.second)) << ','
            << join_plus(model.distinct_signatures()[key.first]) << ',' << entry.count << '\n';
    }
}

}  // namespace faircenter

#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "faircenter/fairness.hpp"
#include "faircenter/geometry.hpp"

namespace faircenter {

/// Subset of center positions as a bitmask: bit j set means the point lies
/// within the closed ball of radius lambda around center j. The all-zero mask
/// is not a valid key; joiner_of uses it to signal "reachable by no center".
/// The representation caps the number of centers at 64.
using JoinerKey = std::uint64_t;

constexpr JoinerKey kUnreachable = 0;
constexpr int kMaxCenters = 64;

/// Bitmask of centers within distance lambda of the point (closed balls,
/// exact d <= lambda with no tolerance). Returns kUnreachable when the point
/// lies outside every ball.
JoinerKey joiner_of(int point, const DistanceMatrix& dmat, double lambda);

/// Center positions present in a mask, ascending.
std::vector<int> mask_centers(JoinerKey mask);

/// Points sharing one (signature, joiner) cell. Such points are mutually
/// interchangeable: any assignment distribution valid for one is valid for
/// all of them.
struct TableEntry {
    long long count = 0;
    std::vector<int> members;  // ascending point indices; count == members.size()
};

/// Counts and member lists for every nonempty (signature, joiner) cell at a
/// fixed lambda. Keys are (signature id, mask); std::map keeps iteration in
/// lexicographic (signature, mask) order so downstream LP construction is
/// reproducible.
struct FrequencyTable {
    double lambda = 0.0;
    std::map<std::pair<int, JoinerKey>, TableEntry> entries;

    long long total_count() const;
    int cell_count() const { return static_cast<int>(entries.size()); }
    /// Distinct masks across all cells (nonempty joiners).
    int joiner_count() const;
};

/// Bucket every client by (signature, joiner mask) at the given lambda.
/// Throws UnreachablePointError naming the first point outside every ball;
/// the radius search consumes that as "lambda too small".
FrequencyTable build_frequency_table(const GroupModel& model, const DistanceMatrix& dmat,
                                     double lambda);

/// CSV dump, one line per cell: mask,signature,count with '+'-joined center
/// positions and group indices (e.g. "0+2,1,4"). Rows follow table order.
void dump_table_csv(const FrequencyTable& table, const GroupModel& model, std::ostream& out);

}  // namespace faircenter

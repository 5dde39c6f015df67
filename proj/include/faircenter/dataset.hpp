#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "faircenter/fairness.hpp"
#include "faircenter/geometry.hpp"

namespace faircenter {

/// Points plus their group model and the human-readable names behind both.
/// group_names[g] labels group index g in reports.
struct Dataset {
    PointSet points;
    GroupModel model;
    std::vector<std::string> feature_names;
    std::vector<std::string> group_names;
};

/// Which CSV columns mean what. Feature columns default to every column not
/// named as a group column. A group column whose values are all 0/1 is an
/// indicator for one group; any other column is categorical and expands into
/// one indicator group per distinct value, named "column=value".
struct ColumnSpec {
    std::vector<std::string> group_columns;    // required, at least one
    std::vector<std::string> feature_columns;  // empty = all remaining columns
    /// Min-max scale each feature to [0, 1] (constant columns become 0).
    /// Off by default; distances are otherwise taken on raw units.
    bool normalize = false;
};

/// Parse a headered CSV (comma-separated, no quoting) into a Dataset.
/// Throws LoadError on unreadable files, unknown column names, ragged rows,
/// non-numeric features, or a row in no group.
Dataset load_dataset(const std::string& path, const ColumnSpec& spec);
Dataset load_dataset_csv(std::istream& in, const ColumnSpec& spec);

/// Gaussian blobs with group labels correlated to the blobs. Each point
/// picks a blob uniformly, lands normally around its center, and takes the
/// blob's group; with probability group_mixing the group is redrawn
/// uniformly, and with probability overlap it gains a second distinct group.
struct SyntheticSpec {
    int num_points = 100;
    int dim = 2;
    int num_blobs = 3;
    int num_groups = 2;
    double spread = 1.0;        // within-blob standard deviation
    double box = 20.0;          // blob centers drawn uniformly in [0, box]^dim
    double group_mixing = 0.2;  // chance a point's group ignores its blob
    double overlap = 0.0;       // chance of a second group membership
    std::uint64_t seed = 1;
};

Dataset make_synthetic(const SyntheticSpec& spec);

/// Emit a Dataset as CSV: feature columns first, then one 0/1 indicator
/// column per group. Coordinates print with enough digits to reload
/// bit-identically.
void write_csv(const Dataset& data, std::ostream& out);
void write_csv_file(const Dataset& data, const std::string& path);

}  // namespace faircenter

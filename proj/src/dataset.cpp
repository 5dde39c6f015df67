#include "faircenter/dataset.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace faircenter {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream stream(line);
    while (std::getline(stream, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

bool parse_double(const std::string& text, double& out) {
    if (text.empty()) return false;
    char* end = nullptr;
    out = std::strtod(text.c_str(), &end);
    return end == text.c_str() + text.size();
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int column_index(const std::vector<std::string>& header, const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw LoadError("no column named '" + name + "' in header");
    return static_cast<int>(it - header.begin());
}

}  // namespace

Dataset load_dataset_csv(std::istream& in, const ColumnSpec& spec) {
    if (spec.group_columns.empty()) throw LoadError("at least one group column is required");

    std::string line;
    if (!std::getline(in, line)) throw LoadError("empty input: missing header row");
    const std::vector<std::string> header = split_csv_line(line);

    std::vector<int> group_cols;
    for (const std::string& name : spec.group_columns)
        group_cols.push_back(column_index(header, name));

    std::vector<int> feature_cols;
    if (spec.feature_columns.empty()) {
        for (int c = 0; c < static_cast<int>(header.size()); ++c)
            if (std::find(group_cols.begin(), group_cols.end(), c) == group_cols.end())
                feature_cols.push_back(c);
    } else {
        for (const std::string& name : spec.feature_columns)
            feature_cols.push_back(column_index(header, name));
    }
    if (feature_cols.empty()) throw LoadError("no feature columns left after group columns");

    std::vector<std::vector<std::string>> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw LoadError("row " + std::to_string(line_no) + " has " +
                            std::to_string(cells.size()) + " cells, header has " +
                            std::to_string(header.size()));
        rows.push_back(std::move(cells));
    }
    if (rows.empty()) throw LoadError("no data rows");
    const int n = static_cast<int>(rows.size());

    Eigen::MatrixXd coords(n, static_cast<int>(feature_cols.size()));
    for (int i = 0; i < n; ++i) {
        for (std::size_t f = 0; f < feature_cols.size(); ++f) {
            double v = 0.0;
            if (!parse_double(rows[i][feature_cols[f]], v))
                throw LoadError("non-numeric feature '" + rows[i][feature_cols[f]] +
                                "' in column '" + header[feature_cols[f]] + "', row " +
                                std::to_string(i + 2));
            coords(i, static_cast<int>(f)) = v;
        }
    }
    if (spec.normalize) {
        for (int f = 0; f < coords.cols(); ++f) {
            const double lo = coords.col(f).minCoeff();
            const double hi = coords.col(f).maxCoeff();
            if (hi > lo) coords.col(f) = (coords.col(f).array() - lo) / (hi - lo);
            else coords.col(f).setZero();
        }
    }

    // Group expansion. Pure 0/1 columns are single indicator groups named by
    // the column; anything else is categorical with one group per distinct
    // value, values in sorted order.
    std::vector<std::string> group_names;
    std::vector<std::vector<int>> memberships(n);
    for (int gc : group_cols) {
        bool indicator = true;
        for (int i = 0; i < n; ++i) {
            if (rows[i][gc] != "0" && rows[i][gc] != "1") {
                indicator = false;
                break;
            }
        }
        if (indicator) {
            const int g = static_cast<int>(group_names.size());
            group_names.push_back(header[gc]);
            for (int i = 0; i < n; ++i)
                if (rows[i][gc] == "1") memberships[i].push_back(g);
        } else {
            std::map<std::string, int> value_group;
            for (int i = 0; i < n; ++i) value_group[rows[i][gc]] = 0;
            for (auto& [value, g] : value_group) {
                g = static_cast<int>(group_names.size());
                group_names.push_back(header[gc] + "=" + value);
            }
            for (int i = 0; i < n; ++i)
                memberships[i].push_back(value_group[rows[i][gc]]);
        }
    }

    for (int i = 0; i < n; ++i)
        if (memberships[i].empty())
            throw LoadError("row " + std::to_string(i + 2) + " belongs to no group");

    std::vector<std::string> feature_names;
    for (int f : feature_cols) feature_names.push_back(header[f]);

    const int num_groups = static_cast<int>(group_names.size());
    return Dataset{PointSet(std::move(coords)),
                   GroupModel(n, num_groups, std::move(memberships)),
                   std::move(feature_names), std::move(group_names)};
}

Dataset load_dataset(const std::string& path, const ColumnSpec& spec) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open '" + path + "'");
    return load_dataset_csv(in, spec);
}

Dataset make_synthetic(const SyntheticSpec& spec) {
    if (spec.num_points <= 0 || spec.dim <= 0 || spec.num_blobs <= 0 || spec.num_groups <= 0)
        throw InputError("make_synthetic: sizes must be positive");
    if (spec.spread < 0.0 || spec.box < 0.0)
        throw InputError("make_synthetic: spread and box must be nonnegative");
    if (spec.group_mixing < 0.0 || spec.group_mixing > 1.0 || spec.overlap < 0.0 ||
        spec.overlap > 1.0)
        throw InputError("make_synthetic: mixing and overlap are probabilities");

    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> noise(0.0, spec.spread > 0.0 ? spec.spread : 1e-12);
    std::uniform_int_distribution<int> blob_of(0, spec.num_blobs - 1);
    std::uniform_int_distribution<int> group_of(0, spec.num_groups - 1);

    Eigen::MatrixXd blob_centers(spec.num_blobs, spec.dim);
    for (int b = 0; b < spec.num_blobs; ++b)
        for (int d = 0; d < spec.dim; ++d) blob_centers(b, d) = unit(rng) * spec.box;

    Eigen::MatrixXd coords(spec.num_points, spec.dim);
    std::vector<std::vector<int>> memberships(spec.num_points);
    for (int i = 0; i < spec.num_points; ++i) {
        const int b = blob_of(rng);
        for (int d = 0; d < spec.dim; ++d) coords(i, d) = blob_centers(b, d) + noise(rng);
        int g = b % spec.num_groups;
        if (unit(rng) < spec.group_mixing) g = group_of(rng);
        memberships[i].push_back(g);
        if (unit(rng) < spec.overlap && spec.num_groups > 1) {
            int extra = group_of(rng);
            if (extra == g) extra = (extra + 1) % spec.num_groups;
            memberships[i].push_back(extra);
        }
    }

    std::vector<std::string> feature_names, group_names;
    for (int d = 0; d < spec.dim; ++d) feature_names.push_back("x" + std::to_string(d));
    for (int g = 0; g < spec.num_groups; ++g) group_names.push_back("g" + std::to_string(g));

    return Dataset{PointSet(std::move(coords)),
                   GroupModel(spec.num_points, spec.num_groups, std::move(memberships)),
                   std::move(feature_names), std::move(group_names)};
}

void write_csv(const Dataset& data, std::ostream& out) {
    for (std::size_t f = 0; f < data.feature_names.size(); ++f) {
        if (f > 0) out << ',';
        out << data.feature_names[f];
    }
    for (const std::string& g : data.group_names) out << ',' << g;
    out << '\n';
    for (int i = 0; i < data.points.count(); ++i) {
        for (int d = 0; d < data.points.dim(); ++d) {
            if (d > 0) out << ',';
            out << fmt_double(data.points.coords()(i, d));
        }
        for (int g = 0; g < data.model.num_groups(); ++g)
            out << ',' << (data.model.in_group(i, g) ? 1 : 0);
        out << '\n';
    }
}

void write_csv_file(const Dataset& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    write_csv(data, out);
    if (!out.good()) throw InputError("failed while writing '" + path + "'");
}

}  // namespace faircenter

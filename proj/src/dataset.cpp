#include "stumpbounds/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stumpbounds/csv.hpp"
#include "stumpbounds/errors.hpp"

namespace stumpbounds {

LabeledDataset::LabeledDataset(std::vector<double> features,
                               std::vector<int> labels, std::size_t dim)
    : features_(std::move(features)), labels_(std::move(labels)), dim_(dim) {
    if (dim_ == 0) throw DataError("dataset dimension must be >= 1");
    if (labels_.empty()) throw DataError("dataset must contain at least one example");
    if (features_.size() != labels_.size() * dim_)
        throw DataError("feature matrix shape does not match n x d");
    for (int y : labels_)
        if (y != 1 && y != -1) throw DataError("labels must be exactly -1 or +1");
}

IntervalsConcept::IntervalsConcept(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
    if (intervals_.empty()) throw DataError("concept needs at least one interval");
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        const auto& iv = intervals_[i];
        if (!(iv.lo <= iv.hi) || iv.lo < 0.0 || iv.hi > 1.0)
            throw DataError("concept intervals must be ordered subintervals of [0,1]");
        if (i > 0 && !(intervals_[i - 1].hi < iv.lo))
            throw DataError("concept intervals must be disjoint and sorted");
    }
}

int IntervalsConcept::label(double x) const {
    for (const auto& iv : intervals_) {
        if (x < iv.lo) break;
        if (x <= iv.hi) return 1;
    }
    return -1;
}

double IntervalsConcept::positive_measure() const {
    double m = 0.0;
    for (const auto& iv : intervals_) m += iv.hi - iv.lo;
    return m;
}

std::pair<LabeledDataset, IntervalsConcept> gen_intervals(int num_intervals,
                                                          std::size_t n,
                                                          Rng& rng) {
    if (num_intervals < 1) throw ConfigError("num_intervals must be >= 1");
    if (n < 1) throw ConfigError("sample size must be >= 1");

    // [0,1] in 2k equal cells; cells 0, 2, 4, ... form the +1 concept.
    const double cell = 1.0 / (2.0 * num_intervals);
    std::vector<Interval> intervals;
    intervals.reserve(num_intervals);
    for (int j = 0; j < num_intervals; ++j)
        intervals.push_back({2 * j * cell, (2 * j + 1) * cell});
    IntervalsConcept target_concept(std::move(intervals));

    std::vector<double> xs(n);
    std::vector<int> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = rng.uniform01();
        ys[i] = target_concept.label(xs[i]);
    }
    return {LabeledDataset(std::move(xs), std::move(ys), 1), std::move(target_concept)};
}

LabeledDataset gen_twonorm(std::size_t n, std::size_t d, Rng& rng) {
    if (n < 1 || d < 1) throw ConfigError("twonorm requires n >= 1 and d >= 1");
    const double mu = 2.0 / std::sqrt(static_cast<double>(d));
    std::vector<double> xs(n * d);
    std::vector<int> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int y = rng.uniform01() < 0.5 ? 1 : -1;
        ys[i] = y;
        for (std::size_t j = 0; j < d; ++j)
            xs[i * d + j] = y * mu + rng.normal();
    }
    return LabeledDataset(std::move(xs), std::move(ys), d);
}

LabeledDataset load_csv(const std::string& path, int label_column,
                        const std::string& positive_label, bool has_header) {
    CsvTable table = read_csv(path);
    if (has_header && !table.rows.empty()) table.rows.erase(table.rows.begin());
    if (table.rows.empty()) throw DataError(path + ": no rows");

    const std::size_t cols = table.rows.front().size();
    if (cols < 2) throw DataError(path + ": need at least one feature column plus a label");
    const std::size_t label_idx =
        label_column < 0 ? cols - 1 : static_cast<std::size_t>(label_column);
    if (label_idx >= cols) throw DataError(path + ": label column out of range");

    const std::size_t d = cols - 1;
    std::vector<double> xs;
    xs.reserve(table.rows.size() * d);
    std::vector<int> ys;
    ys.reserve(table.rows.size());

    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::size_t file_row = r + (has_header ? 2 : 1);
        if (row.size() != cols)
            throw DataError(path + ": row " + std::to_string(file_row) +
                            " has " + std::to_string(row.size()) +
                            " columns, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) {
            if (c == label_idx) {
                ys.push_back(row[c] == positive_label ? 1 : -1);
            } else {
                try {
                    std::size_t pos = 0;
                    const double v = std::stod(row[c], &pos);
                    if (pos != row[c].size()) throw std::invalid_argument("trailing");
                    xs.push_back(v);
                } catch (const std::exception&) {
                    throw DataError(path + ": row " + std::to_string(file_row) +
                                    ", column " + std::to_string(c + 1) +
                                    ": not a number: '" + row[c] + "'");
                }
            }
        }
    }
    return LabeledDataset(std::move(xs), std::move(ys), d);
}

void save_csv(const LabeledDataset& ds, const std::string& path,
              bool with_header) {
    CsvWriter w(path);
    if (with_header) {
        std::vector<std::string> header;
        for (std::size_t j = 0; j < ds.dim(); ++j)
            header.push_back("x" + std::to_string(j));
        header.push_back("label");
        w.write_row(header);
    }
    std::vector<std::string> row(ds.dim() + 1);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t j = 0; j < ds.dim(); ++j) row[j] = format_number(ds.x(i, j));
        row[ds.dim()] = std::to_string(ds.y(i));
        w.write_row(row);
    }
}

std::pair<LabeledDataset, LabeledDataset> split(const LabeledDataset& ds,
                                                double train_fraction,
                                                Rng& rng) {
    const std::size_t n = ds.size();
    const auto train_n = static_cast<std::size_t>(
        std::floor(train_fraction * static_cast<double>(n) + 1e-9));
    if (train_n < 1 || train_n > n - 1)
        throw ConfigError("train fraction leaves an empty side");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    // Fisher-Yates with the shared generator for cross-platform determinism.
    for (std::size_t i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng.uniform_index(i + 1)]);

    auto take = [&](std::size_t from, std::size_t count) {
        std::vector<double> xs;
        xs.reserve(count * ds.dim());
        std::vector<int> ys;
        ys.reserve(count);
        for (std::size_t k = from; k < from + count; ++k) {
            const auto r = ds.row(order[k]);
            xs.insert(xs.end(), r.begin(), r.end());
            ys.push_back(ds.y(order[k]));
        }
        return LabeledDataset(std::move(xs), std::move(ys), ds.dim());
    };
    return {take(0, train_n), take(train_n, n - train_n)};
}

LabeledDataset bootstrap(const LabeledDataset& ds, Rng& rng) {
    const std::size_t n = ds.size();
    std::vector<double> xs;
    xs.reserve(n * ds.dim());
    std::vector<int> ys;
    ys.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = rng.uniform_index(n);
        const auto r = ds.row(k);
        xs.insert(xs.end(), r.begin(), r.end());
        ys.push_back(ds.y(k));
    }
    return LabeledDataset(std::move(xs), std::move(ys), ds.dim());
}

}  // namespace stumpbounds

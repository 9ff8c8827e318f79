#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace surro {

// Tabular measurement data: named real-valued feature columns plus one
// target column. Immutable by convention once built; every accessor is const.
struct Dataset {
    std::vector<std::string> feature_names;
    std::string target_name;
    std::vector<std::vector<double>> features;  // row-major
    std::vector<double> targets;
    std::string schema_tag;  // empty when the schema is not a known built-in

    std::size_t n_rows() const { return targets.size(); }
    std::size_t n_features() const { return feature_names.size(); }
};

// Throws when any structural invariant is broken: no rows, ragged rows,
// non-finite values, or duplicate/empty column names.
void validate(const Dataset& ds);

// Reads a numeric CSV (UTF-8, comma-separated, '.' decimal, header row).
// The target is the last column unless target_column names another one.
Dataset load_csv(const std::filesystem::path& path,
                 const std::optional<std::string>& target_column = std::nullopt);

// Writes header + rows with shortest-round-trip doubles and a trailing
// newline; load_csv(write_csv(ds)) reproduces ds exactly.
void write_csv(const Dataset& ds, const std::filesystem::path& path);

struct ColumnStats {
    double min = 0.0;
    double max = 0.0;
    bool degenerate() const { return !(min < max); }
};

// Per-column extrema plus the output interval the affine map targets.
struct NormStats {
    std::vector<ColumnStats> features;
    ColumnStats target;
    double out_lo = 0.1;
    double out_hi = 0.9;
};

NormStats fit_normalizer(const Dataset& ds, double out_lo = 0.1, double out_hi = 0.9);

// Affine map of [col.min, col.max] onto [out_lo, out_hi] and its inverse.
// Both throw DegenerateColumnError on a constant column.
double normalize_value(double x, const ColumnStats& col, double out_lo, double out_hi);
double denormalize_value(double y, const ColumnStats& col, double out_lo, double out_hi);

void normalize_features(std::span<const double> raw, const NormStats& norm,
                        std::vector<double>& out);

// Target-channel variants: a constant target column maps to the midpoint of
// the output interval and denormalizes back to the constant, so models can
// be fit to (and reproduce) constant targets.
double normalize_target(double y, const NormStats& norm);
double denormalize_target(double y, const NormStats& norm);

struct FoldPlan {
    int k = 0;
    std::uint64_t seed = 0;
    std::vector<int> assignments;  // fold index per row

    std::vector<std::size_t> fold_rows(int fold) const;
    std::vector<std::size_t> complement_rows(int fold) const;
};

// Seeded shuffle followed by contiguous assignment; the first (n mod k)
// folds hold one extra row.
FoldPlan kfold(const Dataset& ds, int k, std::uint64_t seed);

struct SplitResult {
    Dataset train;
    Dataset test;
};

// Deterministic shuffle split; test row count is n * test_fraction rounded
// to nearest. Row order within each part follows the original dataset.
SplitResult split(const Dataset& ds, double test_fraction, std::uint64_t seed);

// New dataset holding the given rows (copied) in the given order.
Dataset subset(const Dataset& ds, std::span<const std::size_t> row_indices);

}  // namespace surro

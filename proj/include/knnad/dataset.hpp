#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <string>

namespace knnad {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// An ordered collection of d-dimensional points, one per row.
struct Dataset {
  Matrix points;
  std::string provenance;

  Index size() const { return points.rows(); }
  Index dim() const { return points.cols(); }
};

/// Validates the dataset invariants: d >= 1 and every coordinate finite.
/// Throws std::invalid_argument naming the first offending row.
void validate(const Dataset& data);

Dataset make_dataset(Matrix points, std::string provenance);

struct SplitDataset {
  Dataset reference;   // size M, feeds the density estimate
  Dataset evaluation;  // size N, feeds the entropy average
  double fraction = 0.5;
};

/// Splits into evaluation (floor(fraction * n) points) and reference (the
/// rest) via a seeded uniform permutation. Deterministic per
/// (data, fraction, seed).
SplitDataset split_dataset(const Dataset& data, double fraction, std::uint64_t seed);

/// One point per row, d columns, '.' decimal separator. The header row is
/// optional and off by default.
Dataset read_dataset_csv(const std::filesystem::path& path, bool header = false);
void write_dataset_csv(const std::filesystem::path& path, const Dataset& data,
                       bool header = false);

Vector linspace(double lo, double hi, Index n);

}  // namespace knnad

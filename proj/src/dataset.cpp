#include "knnad/dataset.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "knnad/io.hpp"
#include "knnad/random.hpp"

namespace knnad {

void validate(const Dataset& data) {
  if (data.dim() < 1) {
    throw std::invalid_argument("dataset: dimension must be >= 1");
  }
  for (Index i = 0; i < data.size(); ++i) {
    for (Index j = 0; j < data.dim(); ++j) {
      if (!std::isfinite(data.points(i, j))) {
        throw std::invalid_argument("dataset: non-finite coordinate at row " +
                                    std::to_string(i));
      }
    }
  }
}

Dataset make_dataset(Matrix points, std::string provenance) {
  Dataset data{std::move(points), std::move(provenance)};
  validate(data);
  return data;
}

SplitDataset split_dataset(const Dataset& data, double fraction, std::uint64_t seed) {
  const Index n = data.size();
  if (n == 0) {
    throw std::invalid_argument("split_dataset: dataset is empty");
  }
  if (!(fraction > 0.0) || !(fraction < 1.0)) {
    throw std::invalid_argument("split_dataset: fraction must lie in (0, 1)");
  }
  const Index n_eval = static_cast<Index>(std::floor(fraction * static_cast<double>(n)));
  const Index m_ref = n - n_eval;
  if (n_eval == 0 || m_ref == 0) {
    throw std::invalid_argument("split_dataset: fraction produces an empty part");
  }

  Rng rng(seed);
  const auto order = rng.permutation(n);

  SplitDataset split;
  split.fraction = fraction;
  split.evaluation.points.resize(n_eval, data.dim());
  split.reference.points.resize(m_ref, data.dim());
  for (Index i = 0; i < n_eval; ++i) {
    split.evaluation.points.row(i) = data.points.row(order[static_cast<std::size_t>(i)]);
  }
  for (Index i = 0; i < m_ref; ++i) {
    split.reference.points.row(i) =
        data.points.row(order[static_cast<std::size_t>(n_eval + i)]);
  }
  split.evaluation.provenance = data.provenance + " [evaluation split]";
  split.reference.provenance = data.provenance + " [reference split]";
  return split;
}

Dataset read_dataset_csv(const std::filesystem::path& path, bool header) {
  const auto lines = io::read_lines(path);
  std::size_t first = 0;
  if (header) {
    if (lines.empty()) {
      throw std::runtime_error(path.string() + ": missing header row");
    }
    first = 1;
  }
  std::vector<std::vector<double>> rows;
  Index dim = -1;
  for (std::size_t li = first; li < lines.size(); ++li) {
    if (lines[li].empty()) {
      continue;
    }
    const auto fields = io::split_fields(lines[li]);
    if (dim < 0) {
      dim = static_cast<Index>(fields.size());
    } else if (static_cast<Index>(fields.size()) != dim) {
      throw std::runtime_error(path.string() + ": row " + std::to_string(li + 1) +
                               " has " + std::to_string(fields.size()) +
                               " columns, expected " + std::to_string(dim));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto f : fields) {
      row.push_back(io::parse_double(f, path.string() + ": row " + std::to_string(li + 1)));
    }
    rows.push_back(std::move(row));
  }
  Matrix points(static_cast<Index>(rows.size()), dim < 0 ? 1 : dim);
  for (Index i = 0; i < points.rows(); ++i) {
    for (Index j = 0; j < points.cols(); ++j) {
      points(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return make_dataset(std::move(points), "file:" + path.string());
}

void write_dataset_csv(const std::filesystem::path& path, const Dataset& data,
                       bool header) {
  std::string out;
  out.reserve(static_cast<std::size_t>(data.size()) * 24u + 64u);
  if (header) {
    for (Index j = 0; j < data.dim(); ++j) {
      if (j > 0) {
        out += ',';
      }
      out += "x" + std::to_string(j);
    }
    out += '\n';
  }
  for (Index i = 0; i < data.size(); ++i) {
    for (Index j = 0; j < data.dim(); ++j) {
      if (j > 0) {
        out += ',';
      }
      out += io::format_double(data.points(i, j));
    }
    out += '\n';
  }
  io::atomic_write_text(path, out);
}

Vector linspace(double lo, double hi, Index n) {
  if (n < 2) {
    throw std::invalid_argument("linspace: need at least 2 points");
  }
  Vector v(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (Index i = 0; i < n; ++i) {
    v(i) = lo + step * static_cast<double>(i);
  }
  v(n - 1) = hi;
  return v;
}

}  // namespace knnad

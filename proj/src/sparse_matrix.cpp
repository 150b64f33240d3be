#include "clusterconf/sparse_matrix.hpp"

#include "clusterconf/errors.hpp"

namespace clusterconf {

namespace {
const Int kZero = 0;

void check_index(std::int64_t r, std::int64_t c, std::int64_t rows, std::int64_t cols) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw invalid_input("matrix index (" + std::to_string(r) + "," +
                        std::to_string(c) + ") out of " + std::to_string(rows) +
                        "x" + std::to_string(cols));
}
} // namespace

SparseIntMatrix::SparseIntMatrix(std::int64_t rows, std::int64_t cols)
    : rows_(rows), cols_(cols), row_data_(static_cast<std::size_t>(rows)) {
  if (rows < 0 || cols < 0) throw invalid_input("negative matrix dimension");
}

SparseIntMatrix::SparseIntMatrix(std::int64_t rows, std::int64_t cols,
                                 const std::vector<Triplet>& triplets)
    : SparseIntMatrix(rows, cols) {
  for (const auto& t : triplets) add(t.row, t.col, t.value);
}

std::int64_t SparseIntMatrix::nonzeros() const {
  std::int64_t n = 0;
  for (const auto& row : row_data_) n += static_cast<std::int64_t>(row.size());
  return n;
}

const Int& SparseIntMatrix::at(std::int64_t r, std::int64_t c) const {
  check_index(r, c, rows_, cols_);
  const auto& row = row_data_[static_cast<std::size_t>(r)];
  auto it = row.find(c);
  return it == row.end() ? kZero : it->second;
}

void SparseIntMatrix::set(std::int64_t r, std::int64_t c, Int value) {
  check_index(r, c, rows_, cols_);
  auto& row = row_data_[static_cast<std::size_t>(r)];
  if (value == 0)
    row.erase(c);
  else
    row[c] = std::move(value);
}

void SparseIntMatrix::add(std::int64_t r, std::int64_t c, const Int& value) {
  check_index(r, c, rows_, cols_);
  if (value == 0) return;
  auto& row = row_data_[static_cast<std::size_t>(r)];
  auto [it, inserted] = row.emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) row.erase(it);
  }
}

std::vector<Triplet> SparseIntMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(static_cast<std::size_t>(nonzeros()));
  for (std::int64_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : row_data_[static_cast<std::size_t>(r)])
      out.push_back({r, c, v});
  return out;
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw invalid_input("matrix product shape mismatch: " + std::to_string(cols_) +
                        " vs " + std::to_string(rhs.rows_));
  SparseIntMatrix out(rows_, rhs.cols_);
  for (std::int64_t r = 0; r < rows_; ++r) {
    std::map<std::int64_t, Int> acc;
    for (const auto& [k, v] : row_data_[static_cast<std::size_t>(r)])
      for (const auto& [c, w] : rhs.row_data_[static_cast<std::size_t>(k)]) {
        auto [it, inserted] = acc.emplace(c, v * w);
        if (!inserted) it->second += v * w;
      }
    for (auto& [c, v] : acc)
      if (v != 0) out.row_data_[static_cast<std::size_t>(r)].emplace(c, std::move(v));
  }
  return out;
}

bool SparseIntMatrix::is_zero() const {
  for (const auto& row : row_data_)
    if (!row.empty()) return false;
  return true;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix out(cols_, rows_);
  for (std::int64_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : row_data_[static_cast<std::size_t>(r)])
      out.row_data_[static_cast<std::size_t>(c)].emplace(r, v);
  return out;
}

} // namespace clusterconf

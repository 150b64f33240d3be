#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "clusterconf/numbers.hpp"

namespace clusterconf {

struct Triplet {
  std::int64_t row = 0;
  std::int64_t col = 0;
  Int value;
  bool operator==(const Triplet&) const = default;
};

// Sparse matrix over Z with arbitrary-precision entries. Stored row-major as
// ordered maps so iteration order (and hence every downstream computation) is
// deterministic.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::int64_t rows, std::int64_t cols);
  SparseIntMatrix(std::int64_t rows, std::int64_t cols,
                  const std::vector<Triplet>& triplets);

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  std::int64_t nonzeros() const;

  const Int& at(std::int64_t r, std::int64_t c) const; // 0 if absent
  void set(std::int64_t r, std::int64_t c, Int value); // erases on 0
  void add(std::int64_t r, std::int64_t c, const Int& value);

  const std::map<std::int64_t, Int>& row(std::int64_t r) const {
    return row_data_[static_cast<std::size_t>(r)];
  }

  std::vector<Triplet> triplets() const; // row-major order

  SparseIntMatrix multiply(const SparseIntMatrix& rhs) const;
  bool is_zero() const;
  SparseIntMatrix transpose() const;

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<std::map<std::int64_t, Int>> row_data_;
};

} // namespace clusterconf

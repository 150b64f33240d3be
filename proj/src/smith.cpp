#include "clusterconf/smith.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "clusterconf/errors.hpp"

namespace clusterconf {

std::vector<Int> SmithResult::nontrivial_divisors() const {
  std::vector<Int> out;
  for (const Int& d : divisors)
    if (d > 1) out.push_back(d);
  return out;
}

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Mutable elimination state with dual row/column indexing. Rows own the
// values; columns only remember which rows touch them.
struct Elimination {
  std::vector<std::map<std::int64_t, Int>> rows;
  std::vector<std::set<std::int64_t>> cols;
  std::vector<char> row_active, col_active;
  // Bucket queue of column candidates keyed by nonzero count. Entries go
  // stale when a column changes; they are revalidated on pop.
  std::vector<std::vector<std::int64_t>> buckets;
  std::size_t bucket_cursor = 0;

  explicit Elimination(const SparseIntMatrix& m)
      : rows(static_cast<std::size_t>(m.rows())),
        cols(static_cast<std::size_t>(m.cols())),
        row_active(static_cast<std::size_t>(m.rows()), 1),
        col_active(static_cast<std::size_t>(m.cols()), 1),
        buckets(static_cast<std::size_t>(m.rows()) + 2) {
    for (std::int64_t r = 0; r < m.rows(); ++r) {
      rows[static_cast<std::size_t>(r)] = m.row(r);
      for (const auto& [c, v] : rows[static_cast<std::size_t>(r)])
        cols[static_cast<std::size_t>(c)].insert(r);
    }
    for (std::int64_t c = 0; c < m.cols(); ++c) enqueue(c);
  }

  std::size_t col_nnz(std::int64_t c) const {
    return cols[static_cast<std::size_t>(c)].size();
  }

  void enqueue(std::int64_t c) {
    if (!col_active[static_cast<std::size_t>(c)]) return;
    std::size_t b = col_nnz(c);
    if (b == 0) return;
    if (b >= buckets.size()) b = buckets.size() - 1;
    buckets[b].push_back(c);
    bucket_cursor = std::min(bucket_cursor, b);
  }

  // Smallest-nnz active column, or -1 when no nonzero column remains.
  std::int64_t pop_column() {
    while (bucket_cursor < buckets.size()) {
      auto& bucket = buckets[bucket_cursor];
      while (!bucket.empty()) {
        std::int64_t c = bucket.back();
        bucket.pop_back();
        if (!col_active[static_cast<std::size_t>(c)]) continue;
        std::size_t nnz = col_nnz(c);
        if (nnz == 0) continue;
        if (nnz != bucket_cursor && nnz < buckets.size()) {
          enqueue(c); // stale: repark at its true size
          continue;
        }
        return c;
      }
      ++bucket_cursor;
    }
    return -1;
  }

  const Int& entry(std::int64_t r, std::int64_t c) const {
    static const Int zero = 0;
    auto it = rows[static_cast<std::size_t>(r)].find(c);
    return it == rows[static_cast<std::size_t>(r)].end() ? zero : it->second;
  }

  void set_entry(std::int64_t r, std::int64_t c, Int v) {
    auto& row = rows[static_cast<std::size_t>(r)];
    auto it = row.find(c);
    if (v == 0) {
      if (it != row.end()) {
        row.erase(it);
        cols[static_cast<std::size_t>(c)].erase(r);
        enqueue(c);
      }
      return;
    }
    if (it == row.end()) {
      row.emplace(c, std::move(v));
      cols[static_cast<std::size_t>(c)].insert(r);
      enqueue(c);
    } else {
      it->second = std::move(v);
    }
  }

  // row_r -= q * row_p
  void row_axpy(std::int64_t r, std::int64_t p, const Int& q) {
    if (q == 0) return;
    auto& prow = rows[static_cast<std::size_t>(p)];
    for (const auto& [c, v] : prow) {
      auto& rrow = rows[static_cast<std::size_t>(r)];
      auto it = rrow.find(c);
      if (it == rrow.end()) {
        rrow.emplace(c, -q * v);
        cols[static_cast<std::size_t>(c)].insert(r);
        enqueue(c);
      } else {
        it->second -= q * v;
        if (it->second == 0) {
          rrow.erase(it);
          cols[static_cast<std::size_t>(c)].erase(r);
          enqueue(c);
        }
      }
    }
  }

  // Remove a finished pivot row/column from the active matrix.
  void retire(std::int64_t pr, std::int64_t pc) {
    for (const auto& [c, v] : rows[static_cast<std::size_t>(pr)]) {
      cols[static_cast<std::size_t>(c)].erase(pr);
      enqueue(c);
    }
    rows[static_cast<std::size_t>(pr)].clear();
    row_active[static_cast<std::size_t>(pr)] = 0;
    col_active[static_cast<std::size_t>(pc)] = 0;
  }
};

// Quotient with remainder of minimal absolute value (|rem| <= |den|/2), which
// is what keeps entries from blowing up during Euclidean steps.
Int nearest_quotient(const Int& num, const Int& den) {
  Int q = num / den; // truncates toward zero
  Int rem = num - q * den;
  if (2 * abs(rem) > abs(den)) {
    if ((rem > 0) == (den > 0))
      q += 1;
    else
      q -= 1;
  }
  return q;
}

// Clear pivot column by row operations; migrate the pivot whenever a
// remainder (necessarily smaller than the pivot) shows up. Returns the final
// pivot position whose row and column are clean.
std::pair<std::int64_t, std::int64_t> euclidean_cleanup(Elimination& e,
                                                        std::int64_t pr,
                                                        std::int64_t pc) {
  for (;;) {
    bool moved = false;
    // Column pass: eliminate every other entry in the pivot column.
    for (;;) {
      const auto& colset = e.cols[static_cast<std::size_t>(pc)];
      std::int64_t r = -1;
      for (std::int64_t cand : colset)
        if (cand != pr) {
          r = cand;
          break;
        }
      if (r < 0) break;
      Int p = e.entry(pr, pc);
      Int q = nearest_quotient(e.entry(r, pc), p);
      e.row_axpy(r, pr, q);
      if (e.entry(r, pc) != 0) {
        pr = r; // remainder is strictly smaller: better pivot
        moved = true;
      }
    }
    // Row pass: implicit column operations. The pivot column is clear, so
    // subtracting multiples of it only changes the pivot row itself.
    std::vector<std::pair<std::int64_t, Int>> row_entries(
        e.rows[static_cast<std::size_t>(pr)].begin(),
        e.rows[static_cast<std::size_t>(pr)].end());
    Int p = e.entry(pr, pc);
    for (const auto& [c, v] : row_entries) {
      if (c == pc) continue;
      Int q = nearest_quotient(v, p);
      Int rem = v - q * p;
      e.set_entry(pr, c, rem);
      if (rem != 0) {
        pc = c; // smaller pivot in this row; its column may be dirty
        moved = true;
        break;
      }
    }
    if (!moved) return {pr, pc};
  }
}

// diag(a, b) is equivalent to diag(gcd(a,b), lcm(a,b)); repeat until the
// divisor chain holds. Only non-unit entries can violate it.
void fix_divisor_chain(std::vector<Int>& divisors) {
  std::sort(divisors.begin(), divisors.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < divisors.size(); ++i)
      for (std::size_t j = i + 1; j < divisors.size(); ++j) {
        if (divisors[j] % divisors[i] == 0) continue;
        Int g = gcd(divisors[i], divisors[j]);
        divisors[j] = divisors[i] / g * divisors[j];
        divisors[i] = g;
        changed = true;
      }
    if (changed) std::sort(divisors.begin(), divisors.end());
  }
}

} // namespace

SmithResult smith_normal_form(const SparseIntMatrix& m) {
  Elimination e(m);
  std::vector<Int> units_count_only;
  std::vector<Int> divisors;
  std::int64_t unit_pivots = 0;

  // Phase A: unit pivots, cheapest column first. A unit pivot divides
  // everything, so elimination is exact and the pivot never migrates.
  // Phase B: no unit entry in the popped column; do Euclidean pivoting there.
  for (;;) {
    std::int64_t c = e.pop_column();
    if (c < 0) break;
    const auto& colset = e.cols[static_cast<std::size_t>(c)];
    std::int64_t best_row = -1;
    std::size_t best_nnz = 0;
    for (std::int64_t r : colset) {
      const Int& v = e.entry(r, c);
      if (v != 1 && v != -1) continue;
      std::size_t nnz = e.rows[static_cast<std::size_t>(r)].size();
      if (best_row < 0 || nnz < best_nnz) {
        best_row = r;
        best_nnz = nnz;
      }
    }
    if (best_row >= 0) {
      // exact elimination of the whole column
      std::vector<std::int64_t> others(colset.begin(), colset.end());
      Int p = e.entry(best_row, c);
      for (std::int64_t r : others) {
        if (r == best_row) continue;
        e.row_axpy(r, best_row, e.entry(r, c) * p); // q = a/p with p = +-1
      }
      e.retire(best_row, c);
      ++unit_pivots;
      continue;
    }
    // No unit in this column: pick its smallest entry and run Euclid. This
    // usually produces units that phase A then consumes.
    std::int64_t pr = -1;
    Int best_abs = 0;
    for (std::int64_t r : colset) {
      Int a = abs(e.entry(r, c));
      if (pr < 0 || a < best_abs) {
        pr = r;
        best_abs = a;
      }
    }
    auto [fr, fc] = euclidean_cleanup(e, pr, c);
    divisors.push_back(abs(e.entry(fr, fc)));
    e.retire(fr, fc);
  }

  fix_divisor_chain(divisors);
  std::vector<Int> all;
  all.reserve(static_cast<std::size_t>(unit_pivots) + divisors.size());
  for (std::int64_t i = 0; i < unit_pivots; ++i) all.push_back(1);
  for (Int& d : divisors) all.push_back(std::move(d));
  return SmithResult{std::move(all)};
}

} // namespace clusterconf

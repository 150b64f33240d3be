#include "clusterconf/fox_neuwirth.hpp"

#include <algorithm>
#include <numeric>

#include "clusterconf/errors.hpp"

namespace clusterconf {

namespace {

int inversion_sign(const std::vector<int>& v) {
  int inversions = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

ColourMultiset::ColourMultiset(const std::map<std::string, int>& counts) {
  for (const auto& [name, count] : counts) {
    if (name.empty()) throw invalid_input("empty colour name");
    if (count < 1) throw invalid_input("colour count must be >= 1: " + name);
    names_.push_back(name);
    counts_.push_back(count);
    total_ += count;
  }
}

std::vector<int> ColourMultiset::sorted_letters() const {
  std::vector<int> letters;
  letters.reserve(total_);
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    letters.insert(letters.end(), counts_[i], static_cast<int>(i));
  }
  return letters;
}

ParityMap ParityMap::trivial(const ColourMultiset& alpha) {
  ParityMap out;
  for (const std::string& name : alpha.names()) out.bits[name] = 0;
  return out;
}

std::vector<int> ParityMap::bits_for(const ColourMultiset& alpha) const {
  std::vector<int> out;
  out.reserve(alpha.names().size());
  for (const std::string& name : alpha.names()) {
    auto it = bits.find(name);
    if (it == bits.end()) throw invalid_input("parity map misses colour " + name);
    if (it->second != 0 && it->second != 1) {
      throw invalid_input("parity bit must be 0 or 1: " + name);
    }
    out.push_back(it->second);
  }
  return out;
}

int FNWord::degree() const {
  int q = 0;
  for (int a : seps) q += a - 1;
  return q;
}

int FNWord::dimension(int d) const { return points() * d - degree(); }

std::string FNWord::to_text(const ColourMultiset& alpha) const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += alpha.names().at(letters[i]);
  }
  if (!seps.empty()) {
    out += '|';
    for (std::size_t i = 0; i < seps.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(seps[i]);
    }
  }
  return out;
}

bool FNWord::operator<(const FNWord& other) const {
  if (letters != other.letters) return letters < other.letters;
  return seps < other.seps;
}

std::vector<std::vector<FNWord>> fn_cells(const ColourMultiset& alpha, int d, int bound) {
  if (d < 1) throw invalid_input("ambient dimension must be >= 1");
  if (d > kMaxAmbientDimension) {
    throw infeasible("ambient dimension " + std::to_string(d) + " exceeds bound " +
                     std::to_string(kMaxAmbientDimension));
  }
  const int n = alpha.total();
  if (n > bound) {
    throw infeasible(std::to_string(n) + " points exceed bound " + std::to_string(bound));
  }

  const int top = n > 0 ? (d - 1) * (n - 1) : 0;
  std::vector<std::vector<FNWord>> by_degree(top + 1);
  if (n == 0) {
    by_degree[0].push_back(FNWord{});
    return by_degree;
  }

  std::vector<int> word = alpha.sorted_letters();
  do {
    std::vector<int> seps(n - 1, 1);
    while (true) {
      FNWord cell{word, seps};
      by_degree[cell.degree()].push_back(std::move(cell));
      int i = n - 2;
      while (i >= 0 && seps[i] == d) seps[i--] = 1;
      if (i < 0) break;
      ++seps[i];
    }
  } while (std::next_permutation(word.begin(), word.end()));
  return by_degree;
}

namespace {

// Orientation bookkeeping for one cell: every position P leads the c-groups
// for c in start_P..d, listed in lexicographic (P, c) order.
struct GroupIndex {
  std::map<std::pair<int, int>, int> index; // (c, leader position) -> 1-based slot

  GroupIndex(const FNWord& cell, int d) {
    int next = 1;
    const int n = cell.points();
    for (int p = 0; p < n; ++p) {
      const int start = p == 0 ? 1 : cell.seps[p - 1];
      for (int c = start; c <= d; ++c) index[{c, p}] = next++;
    }
  }
};

int geometric_sign(const FNWord& sigma, const FNWord& tau,
                   const std::vector<int>& tau_to_sigma, int d, int level,
                   int region_start, int chosen_size) {
  const GroupIndex ref(sigma, d);
  const int n = tau.points();

  // Walk tau's groups in tau's own lexicographic order and record, for each,
  // its slot in the reference list: 0 for the normal direction nu (the
  // non-chosen group at level-1), the merged block's slot for the chosen
  // group, and the slot of the sigma-group with the same members otherwise.
  std::vector<int> perm;
  for (int p = 0; p < n; ++p) {
    const int start = p == 0 ? 1 : tau.seps[p - 1];
    for (int c = start; c <= d; ++c) {
      if (c == level - 1 && p == region_start) {
        perm.push_back(ref.index.at({level - 1, region_start}));
        continue;
      }
      if (c == level - 1 && p == region_start + chosen_size) {
        perm.push_back(0);
        continue;
      }
      int q = p;
      int leftmost = tau_to_sigma[p];
      while (q + 1 < n && tau.seps[q] >= c + 1) {
        ++q;
        leftmost = std::min(leftmost, tau_to_sigma[q]);
      }
      auto it = ref.index.find({c, leftmost});
      if (it == ref.index.end()) {
        throw consistency_error("boundary term group has no counterpart in the face");
      }
      perm.push_back(it->second);
    }
  }

  if (perm.size() != ref.index.size() + 1) {
    throw consistency_error("boundary term basis size mismatch");
  }
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != static_cast<int>(i)) {
      throw consistency_error("boundary term bases fail to correspond bijectively");
    }
  }
  return inversion_sign(perm);
}

int twist_character(const FNWord& sigma, const std::vector<int>& tau_to_sigma, int d,
                    const std::vector<int>& parity_bits) {
  int sign = 1;
  if (d % 2 == 1) sign *= inversion_sign(tau_to_sigma);
  for (std::size_t colour = 0; colour < parity_bits.size(); ++colour) {
    if (parity_bits[colour] == 0) continue;
    std::vector<int> induced;
    for (int s : tau_to_sigma) {
      if (sigma.letters[s] == static_cast<int>(colour)) induced.push_back(s);
    }
    sign *= inversion_sign(induced);
  }
  return sign;
}

} // namespace

std::vector<SplitTerm> fn_boundary_terms(const FNWord& cell, int d,
                                         const std::vector<int>& parity_bits) {
  const int n = cell.points();
  std::vector<SplitTerm> terms;

  for (int t = 2; t <= d; ++t) {
    int i = 0;
    while (i < n) {
      int j = i;
      while (j + 1 < n && cell.seps[j] >= t) ++j; // merged block [i..j]
      if (j == i) {
        i = j + 1;
        continue;
      }
      // Sub-blocks: cut at the separators equal to t.
      std::vector<std::pair<int, int>> blocks; // (first position, length)
      int bstart = i;
      for (int k = i; k < j; ++k) {
        if (cell.seps[k] == t) {
          blocks.emplace_back(bstart, k + 1 - bstart);
          bstart = k + 1;
        }
      }
      blocks.emplace_back(bstart, j + 1 - bstart);
      const int m = static_cast<int>(blocks.size());
      if (m < 2) {
        i = j + 1;
        continue;
      }

      const int region_size = j + 1 - i;
      for (int mask = 1; mask < (1 << m) - 1; ++mask) {
        std::vector<int> order;
        order.reserve(n);
        for (int p = 0; p < i; ++p) order.push_back(p);
        int chosen_size = 0;
        for (int b = 0; b < m; ++b) {
          if (!(mask & (1 << b))) continue;
          chosen_size += blocks[b].second;
          for (int p = blocks[b].first; p < blocks[b].first + blocks[b].second; ++p) {
            order.push_back(p);
          }
        }
        for (int b = 0; b < m; ++b) {
          if (mask & (1 << b)) continue;
          for (int p = blocks[b].first; p < blocks[b].first + blocks[b].second; ++p) {
            order.push_back(p);
          }
        }
        for (int p = j + 1; p < n; ++p) order.push_back(p);

        FNWord target;
        target.letters.reserve(n);
        for (int p : order) target.letters.push_back(cell.letters[p]);
        target.seps = cell.seps;
        for (int s = i; s < j; ++s) {
          if (s == i + chosen_size - 1) {
            target.seps[s] = t - 1; // the reopened gap
          } else if (order[s + 1] == order[s] + 1) {
            target.seps[s] = cell.seps[order[s]]; // contiguous piece, unchanged
          } else {
            target.seps[s] = t; // sub-blocks that slid past each other
          }
        }

        SplitTerm term;
        term.tau_to_sigma = order;
        term.level = t;
        term.region_start = i;
        term.region_size = region_size;
        term.chosen_size = chosen_size;
        term.geo_sign = geometric_sign(cell, target, order, d, t, i, chosen_size);
        term.twist_sign = twist_character(cell, order, d, parity_bits);
        term.target = std::move(target);
        terms.push_back(std::move(term));
      }
      i = j + 1;
    }
  }
  return terms;
}

ChainComplex fn_complex(const ColourMultiset& alpha, int d, const ParityMap& parity,
                        int bound) {
  const std::vector<int> parity_bits = parity.bits_for(alpha);
  const std::vector<std::vector<FNWord>> cells = fn_cells(alpha, d, bound);
  const int top = static_cast<int>(cells.size()) - 1;

  std::vector<std::vector<std::string>> labels(top + 1);
  std::vector<std::map<FNWord, int>> index(top + 1);
  for (int q = 0; q <= top; ++q) {
    labels[q].reserve(cells[q].size());
    for (std::size_t k = 0; k < cells[q].size(); ++k) {
      labels[q].push_back(cells[q][k].to_text(alpha));
      index[q].emplace(cells[q][k], static_cast<int>(k));
    }
  }

  std::vector<SparseIntMatrix> boundaries;
  boundaries.reserve(top + 1);
  for (int q = 0; q <= top; ++q) {
    const int rows = q == 0 ? 0 : static_cast<int>(cells[q - 1].size());
    SparseIntMatrix bd(rows, static_cast<int>(cells[q].size()));
    if (q > 0) {
      for (std::size_t col = 0; col < cells[q].size(); ++col) {
        for (const SplitTerm& term : fn_boundary_terms(cells[q][col], d, parity_bits)) {
          auto it = index[q - 1].find(term.target);
          if (it == index[q - 1].end()) {
            throw consistency_error("boundary term is not a cell of the complex");
          }
          bd.add(it->second, static_cast<int>(col), Int(term.geo_sign * term.twist_sign));
        }
      }
    }
    boundaries.push_back(std::move(bd));
  }
  return ChainComplex(std::move(labels), std::move(boundaries));
}

GradedAbelianGroup twisted_homology(const ColourMultiset& alpha, int d,
                                    const ParityMap& parity, int bound) {
  return fn_complex(alpha, d, parity, bound).homology();
}

} // namespace clusterconf

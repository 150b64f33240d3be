#include "clusterconf/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "clusterconf/errors.hpp"

namespace clusterconf {

Partition::Partition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 0) throw invalid_input("partition size must be >= 0");
  std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
  for (auto& block : blocks_) {
    if (block.empty()) throw invalid_input("partition has an empty block");
    std::sort(block.begin(), block.end());
    for (int x : block) {
      if (x < 1 || x > n_)
        throw invalid_input("partition element " + std::to_string(x) +
                            " out of range 1.." + std::to_string(n_));
      if (seen[x])
        throw invalid_input("partition element " + std::to_string(x) +
                            " covered twice");
      seen[x] = 1;
    }
  }
  for (int x = 1; x <= n_; ++x)
    if (!seen[x])
      throw invalid_input("partition misses element " + std::to_string(x));
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::vector<int> Partition::profile() const {
  std::vector<int> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& block : blocks_) sizes.push_back(static_cast<int>(block.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

int Partition::block_of(int x) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), x))
      return static_cast<int>(i);
  throw invalid_input("element " + std::to_string(x) + " not in partition");
}

bool Partition::operator<(const Partition& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  return blocks_ < other.blocks_;
}

Partition stack(const Partition& a, const Partition& b) {
  std::vector<std::vector<int>> blocks = a.blocks();
  for (const auto& block : b.blocks()) {
    std::vector<int> shifted;
    shifted.reserve(block.size());
    for (int x : block) shifted.push_back(x + a.size());
    blocks.push_back(std::move(shifted));
  }
  return Partition(a.size() + b.size(), std::move(blocks));
}

Partition remove_block(const Partition& p, int i) {
  if (i < 0 || i >= p.weight()) throw invalid_input("block index out of range");
  const auto& gone = p.blocks()[static_cast<std::size_t>(i)];
  // relabel[x] = rank of x among surviving elements
  std::vector<int> relabel(static_cast<std::size_t>(p.size()) + 1, 0);
  int next = 0;
  for (int x = 1; x <= p.size(); ++x) {
    if (std::binary_search(gone.begin(), gone.end(), x)) continue;
    relabel[x] = ++next;
  }
  std::vector<std::vector<int>> blocks;
  for (int j = 0; j < p.weight(); ++j) {
    if (j == i) continue;
    std::vector<int> block;
    block.reserve(p.blocks()[j].size());
    for (int x : p.blocks()[j]) block.push_back(relabel[x]);
    blocks.push_back(std::move(block));
  }
  return Partition(p.size() - static_cast<int>(gone.size()), std::move(blocks));
}

namespace {

// split_ok[m] for m in 1..n-1: no block straddles the cut between m and m+1,
// i.e. every block lies entirely in 1..m or entirely in m+1..n.
std::vector<char> splittable_cuts(const Partition& p) {
  // A block with min a and max b straddles every cut m with a <= m < b.
  std::vector<char> ok(static_cast<std::size_t>(std::max(p.size(), 1)), 1);
  for (const auto& block : p.blocks())
    for (int m = block.front(); m < block.back(); ++m) ok[m] = 0;
  return ok;
}

} // namespace

bool is_indecomposable(const Partition& p) {
  if (p.empty()) return false;
  auto ok = splittable_cuts(p);
  for (int m = 1; m < p.size(); ++m)
    if (ok[m]) return false;
  return true;
}

std::vector<Partition> factorize(const Partition& p) {
  std::vector<Partition> factors;
  if (p.empty()) return factors;
  auto ok = splittable_cuts(p);
  int start = 0; // elements start+1 .. m form the current segment
  for (int m = 1; m <= p.size(); ++m) {
    if (m < p.size() && !ok[m]) continue;
    // segment (start, m]: collect its blocks, shift down by start
    std::vector<std::vector<int>> blocks;
    for (const auto& block : p.blocks()) {
      if (block.front() <= start || block.front() > m) continue;
      std::vector<int> shifted;
      shifted.reserve(block.size());
      for (int x : block) shifted.push_back(x - start);
      blocks.push_back(std::move(shifted));
    }
    factors.emplace_back(m - start, std::move(blocks));
    start = m;
  }
  return factors;
}

int filtration_level(const Partition& p) {
  int level = 0;
  for (const auto& factor : factorize(p)) level = std::max(level, factor.weight());
  return level;
}

EntanglementType::EntanglementType(Partition p) : partition_(std::move(p)) {
  if (!is_indecomposable(partition_))
    throw invalid_input("partition '" + to_text(partition_) +
                        "' is not indecomposable");
  weight_ = partition_.weight();
  profile_ = partition_.profile();
}

std::vector<Partition> enumerate_partitions(int n, int bound) {
  if (n < 0) throw invalid_input("enumerate_partitions: n must be >= 0");
  if (n > bound)
    throw infeasible("enumerate_partitions: n = " + std::to_string(n) +
                     " exceeds bound " + std::to_string(bound));
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Restricted growth strings: a[0] = 0, a[i] <= max(a[0..i-1]) + 1. Element
  // i+1 goes to block a[i]; blocks are then automatically ordered by minima.
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> blocks;
  auto emit = [&] {
    int nblocks = *std::max_element(a.begin(), a.end()) + 1;
    blocks.assign(static_cast<std::size_t>(nblocks), {});
    for (int i = 0; i < n; ++i) blocks[a[i]].push_back(i + 1);
    out.emplace_back(n, blocks);
  };
  // Iterative odometer over restricted growth strings, lexicographic.
  for (;;) {
    emit();
    int i = n - 1;
    for (; i >= 1; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, a[j]);
      if (a[i] <= cap) break; // can still increment a[i] up to cap+1
      a[i] = 0;
    }
    if (i < 1) break;
    ++a[i];
    for (int j = i + 1; j < n; ++j) a[j] = 0;
  }
  return out;
}

std::vector<Partition> enumerate_partitions_with_sizes(int n,
                                                       const std::vector<int>& sizes,
                                                       int bound) {
  if (n < 0) throw invalid_input("enumerate_partitions_with_sizes: n must be >= 0");
  if (n > bound)
    throw infeasible("enumerate_partitions_with_sizes: n = " + std::to_string(n) +
                     " exceeds bound " + std::to_string(bound));
  std::vector<int> allowed(sizes);
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  for (int s : allowed)
    if (s < 1) throw invalid_input("block sizes must be >= 1");

  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Build the block containing the smallest unused element, recurse. Blocks
  // are produced in order of minima, so the result is already canonical, and
  // choosing partner sets in increasing lexicographic order makes the whole
  // enumeration deterministic.
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> blocks;

  auto smallest_unused = [&]() {
    for (int x = 1; x <= n; ++x)
      if (!used[x]) return x;
    return 0;
  };

  std::function<void()> rec = [&] {
    int x = smallest_unused();
    if (x == 0) {
      out.emplace_back(n, blocks);
      return;
    }
    used[x] = 1;
    // One buffer per recursion level: the nested rec() below builds the NEXT
    // block in its own buffer, so this one survives the backtracking.
    std::vector<int> current;
    std::function<void(int, int)> pick = [&](int from, int need) {
      if (need == 0) {
        blocks.push_back(current);
        rec();
        blocks.pop_back();
        return;
      }
      for (int y = from; y <= n - need + 1; ++y) {
        if (used[y]) continue;
        used[y] = 1;
        current.push_back(y);
        pick(y + 1, need - 1);
        current.pop_back();
        used[y] = 0;
      }
    };
    for (int s : allowed) {
      // choose s-1 partners > x from unused elements, lexicographically
      current.assign(1, x);
      pick(x + 1, s - 1);
    }
    used[x] = 0;
  };
  rec();
  return out;
}

std::vector<EntanglementType> enumerate_types(int n, int bound) {
  std::vector<EntanglementType> out;
  for (auto& p : enumerate_partitions(n, bound))
    if (is_indecomposable(p)) out.emplace_back(std::move(p));
  return out;
}

std::vector<EntanglementType> enumerate_types_uniform(int k, int w, int bound) {
  if (k < 1 || w < 0) throw invalid_input("enumerate_types_uniform: need k >= 1, w >= 0");
  std::vector<EntanglementType> out;
  if (w == 0) return out;
  for (auto& p : enumerate_partitions_with_sizes(w * k, {k}, bound))
    if (is_indecomposable(p)) out.emplace_back(std::move(p));
  return out;
}

std::vector<Int> bell_numbers(int n_max) {
  if (n_max < 0) throw invalid_input("bell_numbers: n_max must be >= 0");
  std::vector<Int> bell;
  bell.reserve(static_cast<std::size_t>(n_max) + 1);
  std::vector<Int> row{1};
  bell.push_back(1);
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Int> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const Int& x : row) next.push_back(next.back() + x);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

std::vector<Int> count_types_by_inversion(int n_max, std::optional<int> k) {
  if (n_max < 0 || n_max > 30)
    throw infeasible("count_types_by_inversion: n_max must be in 0..30");
  // Totals per weight: all partitions (Bell) or k-uniform (wk)!/(k!^w w!).
  std::vector<Int> total(static_cast<std::size_t>(n_max) + 1, 0);
  total[0] = 1;
  if (!k) {
    auto bell = bell_numbers(n_max);
    for (int n = 0; n <= n_max; ++n) total[n] = bell[n];
  } else {
    if (*k < 1) throw invalid_input("count_types_by_inversion: k must be >= 1");
    Int kfact = 1;
    for (int i = 2; i <= *k; ++i) kfact *= i;
    for (int w = 1; w <= n_max; ++w) {
      Int num = 1;
      for (int i = 2; i <= w * *k; ++i) num *= i;
      Int den = 1;
      for (int i = 2; i <= w; ++i) den *= i;
      for (int i = 0; i < w; ++i) den *= kfact;
      total[w] = num / den;
    }
  }
  // 1/(1 - E) = P  =>  E_n = P_n - sum_{j=1}^{n-1} E_j P_{n-j}.
  std::vector<Int> indecomposable(static_cast<std::size_t>(n_max) + 1, 0);
  for (int n = 1; n <= n_max; ++n) {
    Int e = total[n];
    for (int j = 1; j < n; ++j) e -= indecomposable[j] * total[n - j];
    indecomposable[n] = e;
  }
  return indecomposable;
}

std::string to_text(const Partition& p) {
  std::ostringstream os;
  for (int i = 0; i < p.weight(); ++i) {
    if (i) os << '|';
    const auto& block = p.blocks()[i];
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (j) os << ',';
      os << block[j];
    }
  }
  return os.str();
}

Partition partition_from_text(const std::string& text) {
  if (text.empty()) return Partition();
  // getline drops a trailing delimiter instead of yielding an empty token,
  // so trailing separators must be rejected up front.
  if (text.back() == '|') throw invalid_input("empty block in partition text");
  std::vector<std::vector<int>> blocks;
  int n = 0;
  std::stringstream blockstream(text);
  std::string blocktext;
  while (std::getline(blockstream, blocktext, '|')) {
    if (!blocktext.empty() && blocktext.back() == ',')
      throw invalid_input("bad partition element ''");
    std::vector<int> block;
    std::stringstream elemstream(blocktext);
    std::string elemtext;
    while (std::getline(elemstream, elemtext, ',')) {
      std::size_t pos = 0;
      int x;
      try {
        x = std::stoi(elemtext, &pos);
      } catch (const std::exception&) {
        throw invalid_input("bad partition element '" + elemtext + "'");
      }
      if (pos != elemtext.size())
        throw invalid_input("bad partition element '" + elemtext + "'");
      block.push_back(x);
      n = std::max(n, x);
    }
    if (block.empty()) throw invalid_input("empty block in partition text");
    blocks.push_back(std::move(block));
  }
  return Partition(n, std::move(blocks));
}

} // namespace clusterconf

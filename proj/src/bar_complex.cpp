#include "clusterconf/bar_complex.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "clusterconf/errors.hpp"

namespace clusterconf {

std::string DiscreteLabels::to_text() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : counts) {
    if (!first) os << ',';
    os << k << ':' << c;
    first = false;
  }
  return os.str();
}

DiscreteLabels DiscreteLabels::from_text(const std::string& text) {
  DiscreteLabels out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw invalid_input("label system entry '" + item + "' is not k:count");
    int k, c;
    try {
      k = std::stoi(item.substr(0, colon));
      c = std::stoi(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw invalid_input("label system entry '" + item + "' is not k:count");
    }
    if (k < 1 || c < 0) throw invalid_input("label system needs k >= 1, count >= 0");
    if (out.counts.count(k))
      throw invalid_input("duplicate label size " + std::to_string(k));
    if (c > 0) out.counts[k] = c;
  }
  return out;
}

std::string DElement::to_text() const {
  std::ostringstream os;
  os << clusterconf::to_text(xi) << ':';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ',';
    os << labels[i];
  }
  return os.str();
}

DElement make_element(const DiscreteLabels& labels, Partition xi,
                      std::vector<int> block_labels) {
  if (static_cast<int>(block_labels.size()) != xi.weight())
    throw invalid_input("need one label per block");
  for (int i = 0; i < xi.weight(); ++i) {
    int k = static_cast<int>(xi.blocks()[static_cast<std::size_t>(i)].size());
    int c = labels.count_for(k);
    if (block_labels[static_cast<std::size_t>(i)] < 0 ||
        block_labels[static_cast<std::size_t>(i)] >= c)
      throw invalid_input("label " + std::to_string(block_labels[static_cast<std::size_t>(i)]) +
                          " out of range for block size " + std::to_string(k));
  }
  return DElement{std::move(xi), std::move(block_labels)};
}

DElement multiply(const DElement& a, const DElement& b) {
  DElement out;
  out.xi = stack(a.xi, b.xi);
  out.labels = a.labels;
  out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
  return out;
}

std::vector<DElement> decompose_monoid_element(const DElement& m) {
  std::vector<DElement> out;
  std::size_t consumed = 0;
  for (auto& factor : factorize(m.xi)) {
    // Blocks are ordered by minima, and a factor's elements all precede the
    // next factor's, so each factor takes a contiguous slice of labels.
    std::size_t nblocks = factor.blocks().size();
    DElement piece;
    piece.xi = std::move(factor);
    piece.labels.assign(m.labels.begin() + static_cast<std::ptrdiff_t>(consumed),
                        m.labels.begin() + static_cast<std::ptrdiff_t>(consumed + nblocks));
    consumed += nblocks;
    out.push_back(std::move(piece));
  }
  return out;
}

std::vector<DElement> enumerate_elements(const DiscreteLabels& labels, int m,
                                         int bound) {
  std::vector<DElement> out;
  if (m == 0) {
    out.push_back(DElement{});
    return out;
  }
  for (auto& p : enumerate_partitions(m, bound)) {
    // Skip partitions with an unlabelable block; odometer over the rest.
    bool ok = true;
    std::vector<int> caps;
    caps.reserve(static_cast<std::size_t>(p.weight()));
    for (const auto& block : p.blocks()) {
      int c = labels.count_for(static_cast<int>(block.size()));
      if (c == 0) {
        ok = false;
        break;
      }
      caps.push_back(c);
    }
    if (!ok) continue;
    std::vector<int> assignment(caps.size(), 0);
    for (;;) {
      out.push_back(DElement{p, assignment});
      std::size_t i = caps.size();
      while (i > 0 && assignment[i - 1] + 1 == caps[i - 1]) assignment[--i] = 0;
      if (i == 0) break;
      ++assignment[i - 1];
    }
  }
  return out;
}

Int free_generator_count(const DiscreteLabels& labels, int n, int bound) {
  Int total = 0;
  for (const auto& e : enumerate_types(n, bound)) {
    Int prod = 1;
    for (const auto& block : e.partition().blocks())
      prod *= labels.count_for(static_cast<int>(block.size()));
    total += prod;
  }
  return total;
}

ChainComplex build_bar_complex(const DiscreteLabels& labels, int n,
                               int max_degree, int bound) {
  if (n < 0) throw invalid_input("bar complex weight must be >= 0");
  if (max_degree < 0) max_degree = n;
  max_degree = std::min(max_degree, n);

  if (n == 0) {
    // Trivial piece: just the empty tuple in degree 0.
    return ChainComplex({{std::string("()")}}, {SparseIntMatrix(0, 1)});
  }

  // Elements by size, cached once and sorted so merge results can be found by
  // binary search; tuples index into these.
  std::vector<std::vector<DElement>> by_size(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) {
    auto& pool = by_size[static_cast<std::size_t>(m)];
    pool = enumerate_elements(labels, m, bound);
    std::sort(pool.begin(), pool.end());
  }

  // A tuple is stored as the flat sequence (size_1, idx_1, ..., size_s, idx_s).
  using Tuple = std::vector<int>;
  std::vector<std::vector<Tuple>> tuples(static_cast<std::size_t>(max_degree) + 1);
  std::vector<std::map<Tuple, std::int64_t>> index(static_cast<std::size_t>(max_degree) + 1);

  // Generate degree s tuples: compositions of n into s positive parts in
  // lexicographic order, elements in enumeration order within each part.
  for (int s = 1; s <= max_degree; ++s) {
    Tuple current;
    std::function<void(int, int)> gen = [&](int remaining, int parts) {
      if (parts == 0) {
        if (remaining == 0) {
          auto& list = tuples[static_cast<std::size_t>(s)];
          index[static_cast<std::size_t>(s)].emplace(current, static_cast<std::int64_t>(list.size()));
          list.push_back(current);
        }
        return;
      }
      for (int w = 1; w + (parts - 1) <= remaining; ++w) {
        int count = static_cast<int>(by_size[static_cast<std::size_t>(w)].size());
        for (int i = 0; i < count; ++i) {
          current.push_back(w);
          current.push_back(i);
          gen(remaining - w, parts - 1);
          current.pop_back();
          current.pop_back();
        }
      }
    };
    gen(n, s);
  }

  std::vector<std::vector<std::string>> gen_labels(static_cast<std::size_t>(max_degree) + 1);
  gen_labels[0] = {}; // no empty tuple in positive weight
  for (int s = 1; s <= max_degree; ++s) {
    auto& out = gen_labels[static_cast<std::size_t>(s)];
    out.reserve(tuples[static_cast<std::size_t>(s)].size());
    for (const auto& t : tuples[static_cast<std::size_t>(s)]) {
      std::ostringstream os;
      for (std::size_t j = 0; j < t.size(); j += 2) {
        const auto& el = by_size[static_cast<std::size_t>(t[j])][static_cast<std::size_t>(t[j + 1])];
        os << '[' << el.to_text() << ']';
      }
      out.push_back(os.str());
    }
  }

  // Inner faces: d(m_1..m_s) = sum_{i=1}^{s-1} (-1)^i (.., m_i m_{i+1}, ..).
  std::vector<SparseIntMatrix> boundaries(static_cast<std::size_t>(max_degree) + 1);
  boundaries[0] = SparseIntMatrix(0, 0);
  if (max_degree >= 1)
    boundaries[1] = SparseIntMatrix(0, static_cast<std::int64_t>(tuples[1].size()));
  for (int s = 2; s <= max_degree; ++s) {
    SparseIntMatrix d(static_cast<std::int64_t>(tuples[static_cast<std::size_t>(s) - 1].size()),
                      static_cast<std::int64_t>(tuples[static_cast<std::size_t>(s)].size()));
    const auto& list = tuples[static_cast<std::size_t>(s)];
    for (std::int64_t col = 0; col < static_cast<std::int64_t>(list.size()); ++col) {
      const Tuple& t = list[static_cast<std::size_t>(col)];
      for (int i = 1; i <= s - 1; ++i) {
        // merge factors i and i+1 (1-based)
        const auto& a = by_size[static_cast<std::size_t>(t[2 * (i - 1)])]
                               [static_cast<std::size_t>(t[2 * (i - 1) + 1])];
        const auto& b = by_size[static_cast<std::size_t>(t[2 * i])]
                               [static_cast<std::size_t>(t[2 * i + 1])];
        DElement merged = multiply(a, b);
        int msize = merged.size();
        const auto& pool = by_size[static_cast<std::size_t>(msize)];
        auto pos = std::lower_bound(pool.begin(), pool.end(), merged);
        if (pos == pool.end() || !(*pos == merged))
          throw consistency_error("merged element missing from enumeration");
        Tuple reduced;
        reduced.reserve(t.size() - 2);
        for (int j = 0; j < i - 1; ++j) {
          reduced.push_back(t[2 * j]);
          reduced.push_back(t[2 * j + 1]);
        }
        reduced.push_back(msize);
        reduced.push_back(static_cast<int>(pos - pool.begin()));
        for (int j = i + 1; j < s; ++j) {
          reduced.push_back(t[2 * j]);
          reduced.push_back(t[2 * j + 1]);
        }
        auto it = index[static_cast<std::size_t>(s) - 1].find(reduced);
        if (it == index[static_cast<std::size_t>(s) - 1].end())
          throw consistency_error("boundary tuple missing from enumeration");
        d.add(it->second, col, (i % 2) ? -1 : 1);
      }
    }
    boundaries[static_cast<std::size_t>(s)] = std::move(d);
  }

  return ChainComplex(std::move(gen_labels), std::move(boundaries));
}

} // namespace clusterconf

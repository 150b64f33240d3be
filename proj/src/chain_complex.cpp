#include "clusterconf/chain_complex.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "clusterconf/errors.hpp"

namespace clusterconf {

std::string AbelianGroup::to_text() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (betti > 0) {
    os << "Z";
    if (betti > 1) os << "^" << betti;
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

const AbelianGroup& GradedAbelianGroup::at(int degree) const {
  static const AbelianGroup zero{};
  auto it = groups.find(degree);
  return it == groups.end() ? zero : it->second;
}

namespace {

void factor_into(std::map<Int, std::vector<int>>& buckets, Int t) {
  for (Int p = 2; p * p <= t; ++p) {
    if (t % p == 0) {
      int e = 0;
      while (t % p == 0) {
        t /= p;
        ++e;
      }
      buckets[p].push_back(e);
    }
  }
  if (t > 1) buckets[t].push_back(1);
}

} // namespace

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  AbelianGroup out;
  out.betti = a.betti + b.betti;
  // Rebuild the divisor chain from prime powers: the i-th factor from the top
  // collects the i-th largest power of every prime.
  std::map<Int, std::vector<int>> buckets;
  for (const Int& t : a.torsion) factor_into(buckets, t);
  for (const Int& t : b.torsion) factor_into(buckets, t);
  std::size_t chain_length = 0;
  for (auto& [p, exps] : buckets) {
    std::sort(exps.begin(), exps.end(), std::greater<int>());
    chain_length = std::max(chain_length, exps.size());
  }
  std::vector<Int> chain(chain_length, Int(1));
  for (const auto& [p, exps] : buckets) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      for (int e = 0; e < exps[i]; ++e) chain[i] *= p;
    }
  }
  std::reverse(chain.begin(), chain.end());
  out.torsion = std::move(chain);
  return out;
}

GradedAbelianGroup direct_sum(const GradedAbelianGroup& a, const GradedAbelianGroup& b) {
  GradedAbelianGroup out = a;
  for (const auto& [degree, group] : b.groups) {
    auto it = out.groups.find(degree);
    if (it == out.groups.end()) {
      out.groups.emplace(degree, group);
    } else {
      it->second = direct_sum(it->second, group);
    }
  }
  return out;
}

GradedAbelianGroup shifted(const GradedAbelianGroup& g, int amount) {
  GradedAbelianGroup out;
  for (const auto& [degree, group] : g.groups) out.groups.emplace(degree + amount, group);
  return out;
}

ChainComplex::ChainComplex(std::vector<std::vector<std::string>> generator_labels,
                           std::vector<SparseIntMatrix> boundaries)
    : labels_(std::move(generator_labels)), boundaries_(std::move(boundaries)) {
  if (labels_.empty()) throw invalid_input("chain complex needs at least degree 0");
  if (boundaries_.size() != labels_.size())
    throw invalid_input("chain complex needs one boundary matrix per degree");
  for (std::size_t q = 0; q < labels_.size(); ++q) {
    std::int64_t expected_rows = q == 0 ? 0 : static_cast<std::int64_t>(labels_[q - 1].size());
    if (boundaries_[q].rows() != expected_rows ||
        boundaries_[q].cols() != static_cast<std::int64_t>(labels_[q].size()))
      throw invalid_input("boundary matrix shape mismatch in degree " + std::to_string(q));
  }
  for (std::size_t q = 1; q + 1 < boundaries_.size(); ++q) {
    if (!boundaries_[q].multiply(boundaries_[q + 1]).is_zero())
      throw consistency_error("d^2 != 0 between degrees " + std::to_string(q + 1) +
                              " and " + std::to_string(q - 1));
  }
}

std::int64_t ChainComplex::rank(int degree) const {
  if (degree < 0 || degree > top_degree()) return 0;
  return static_cast<std::int64_t>(labels_[static_cast<std::size_t>(degree)].size());
}

const std::vector<std::string>& ChainComplex::labels(int degree) const {
  if (degree < 0 || degree > top_degree())
    throw invalid_input("degree out of range");
  return labels_[static_cast<std::size_t>(degree)];
}

const SparseIntMatrix& ChainComplex::boundary(int degree) const {
  if (degree < 0 || degree > top_degree())
    throw invalid_input("degree out of range");
  return boundaries_[static_cast<std::size_t>(degree)];
}

AbelianGroup ChainComplex::homology(int degree) const {
  if (degree < 0 || degree > top_degree()) return {};
  SmithResult out = degree < top_degree()
                        ? smith_normal_form(boundaries_[static_cast<std::size_t>(degree) + 1])
                        : SmithResult{};
  SmithResult in = smith_normal_form(boundaries_[static_cast<std::size_t>(degree)]);
  AbelianGroup h;
  h.betti = rank(degree) - in.rank() - out.rank();
  h.torsion = out.nontrivial_divisors();
  if (h.betti < 0)
    throw consistency_error("negative Betti number in degree " + std::to_string(degree));
  return h;
}

GradedAbelianGroup ChainComplex::homology() const {
  // One SNF per boundary matrix, shared between the two degrees it touches.
  std::vector<SmithResult> snf(boundaries_.size() + 1);
  for (std::size_t q = 0; q < boundaries_.size(); ++q)
    snf[q] = smith_normal_form(boundaries_[q]);
  GradedAbelianGroup out;
  for (int q = 0; q <= top_degree(); ++q) {
    AbelianGroup h;
    h.betti = rank(q) - snf[static_cast<std::size_t>(q)].rank() -
              snf[static_cast<std::size_t>(q) + 1].rank();
    h.torsion = snf[static_cast<std::size_t>(q) + 1].nontrivial_divisors();
    if (h.betti < 0)
      throw consistency_error("negative Betti number in degree " + std::to_string(q));
    if (!h.is_zero()) out.groups.emplace(q, std::move(h));
  }
  return out;
}

} // namespace clusterconf

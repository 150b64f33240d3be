#include "clusterconf/stable.hpp"

#include <algorithm>
#include <functional>

#include "clusterconf/errors.hpp"
#include "clusterconf/parallel.hpp"

namespace clusterconf {

int parity_of_type(const EntanglementType& e, int p) {
  if (p < 1) throw invalid_input("parity needs p >= 1");
  return (p * (e.weight() - 1)) % 2;
}

std::pair<int, int> r_and_s(const TypeMultiset& alpha) {
  int r = 0;
  int instances = 0;
  for (const auto& [e, count] : alpha) {
    r += count * e.weight();
    instances += count;
  }
  return {r, r - instances};
}

LambdaTuple::LambdaTuple(int k) : k_(k) {
  if (k < 1) throw invalid_input("cluster size k must be >= 1");
}

void LambdaTuple::set(const EntanglementType& e, int count) {
  if (count < 1) throw invalid_input("tuple multiplicities must be >= 1");
  if (e.weight() < 2) {
    throw invalid_input("the single-cluster type is implicit and cannot be set");
  }
  const std::vector<int>& profile = e.profile();
  if (profile.front() != profile.back()) {
    throw invalid_input("tuple entries must be uniform types");
  }
  if (k_ == 0) {
    k_ = profile.front();
  } else if (profile.front() != k_) {
    throw invalid_input("tuple entries must share one cluster size");
  }
  entries_[e] = count;
}

int LambdaTuple::size() const {
  int total = 0;
  for (const auto& [e, count] : entries_) total += count;
  return total;
}

int LambdaTuple::s() const {
  int total = 0;
  for (const auto& [e, count] : entries_) total += count * (e.weight() - 1);
  return total;
}

bool LambdaTuple::operator<(const LambdaTuple& other) const {
  if (k_ != other.k_) return k_ < other.k_;
  return std::lexicographical_compare(
      entries_.begin(), entries_.end(), other.entries_.begin(), other.entries_.end(),
      [](const auto& a, const auto& b) {
        if (TypeOrder{}(a.first, b.first)) return true;
        if (TypeOrder{}(b.first, a.first)) return false;
        return a.second < b.second;
      });
}

std::string LambdaTuple::to_text() const {
  if (entries_.empty()) return "{}";
  std::string out;
  for (const auto& [e, count] : entries_) {
    if (!out.empty()) out += "; ";
    out += clusterconf::to_text(e.partition()) + " x" + std::to_string(count);
  }
  return out;
}

TypeMultiset lambda_bracket(const LambdaTuple& lambda, int n) {
  if (lambda.k() < 1) {
    throw invalid_input("tuple has no cluster size; construct it with an explicit k");
  }
  if (n < lambda.size()) {
    throw invalid_input("bracket parameter below the tuple size");
  }
  TypeMultiset out = lambda.entries();
  if (n > lambda.size()) {
    std::vector<int> block(lambda.k());
    for (int i = 0; i < lambda.k(); ++i) block[i] = i + 1;
    EntanglementType single(Partition(lambda.k(), {block}));
    out[single] = n - lambda.size();
  }
  return out;
}

std::vector<LambdaTuple> enumerate_lambda(int k, int p, int degree_bound, int bound) {
  if (k < 1 || p < 1) throw invalid_input("enumeration needs k >= 1 and p >= 1");
  if (degree_bound < 0) throw invalid_input("negative degree bound");

  const int s_budget = degree_bound / p;
  std::vector<EntanglementType> types;
  for (int w = 2; w <= s_budget + 1; ++w) {
    for (const EntanglementType& e : enumerate_types_uniform(k, w, bound)) {
      types.push_back(e);
    }
  }

  std::vector<LambdaTuple> out;
  std::vector<int> counts(types.size(), 0);
  std::function<void(std::size_t, int)> descend = [&](std::size_t idx, int budget) {
    if (idx == types.size()) {
      LambdaTuple lambda(k);
      for (std::size_t i = 0; i < types.size(); ++i) {
        if (counts[i] > 0) lambda.set(types[i], counts[i]);
      }
      out.push_back(std::move(lambda));
      return;
    }
    const int step = types[idx].weight() - 1;
    for (int c = 0; c * step <= budget; ++c) {
      counts[idx] = c;
      descend(idx + 1, budget - c * step);
    }
    counts[idx] = 0;
  };
  descend(0, s_budget);
  return out;
}

ColourMultiset colours_of(const TypeMultiset& alpha) {
  std::map<std::string, int> counts;
  for (const auto& [e, count] : alpha) counts[to_text(e.partition())] = count;
  return ColourMultiset(counts);
}

ParityMap parity_of(const TypeMultiset& alpha, int p) {
  ParityMap out;
  for (const auto& [e, count] : alpha) {
    out.bits[to_text(e.partition())] = parity_of_type(e, p);
  }
  return out;
}

StableModule stabilize_M(const LambdaTuple& lambda, int p, int degree_bound,
                         int point_bound) {
  if (p < 1) throw invalid_input("stabilisation needs p >= 1");
  if (degree_bound < 0) throw invalid_input("negative degree bound");
  const int base = lambda.size();

  // Reading degree i off lambda[n] is certified for i <= (n - |lambda|)/2;
  // aim for n covering degree_bound, clamped by what the cell engine accepts,
  // and keep one more n for the agreement check.
  int n_hi = std::min(2 * degree_bound + base + 1, point_bound);
  int n_lo = n_hi - 1;
  if (n_lo < base) {
    throw infeasible("tuple with " + std::to_string(base) +
                     " instances leaves no room to stabilise under the point bound");
  }

  StableModule out;
  out.certified_max = std::min(degree_bound, (n_lo - base) / 2);

  const int d = p + 1;
  GradedAbelianGroup lo =
      twisted_homology(colours_of(lambda_bracket(lambda, n_lo)), d,
                       parity_of(lambda_bracket(lambda, n_lo), p), point_bound);
  GradedAbelianGroup hi =
      twisted_homology(colours_of(lambda_bracket(lambda, n_hi)), d,
                       parity_of(lambda_bracket(lambda, n_hi), p), point_bound);

  for (int i = 0; i <= out.certified_max; ++i) {
    if (!(lo.at(i) == hi.at(i))) {
      throw consistency_error(
          "stabilisation disagrees inside the certified range at degree " +
          std::to_string(i) + " (tuple " + lambda.to_text() + ")");
    }
    if (!lo.at(i).is_zero()) out.values.groups.emplace(i, lo.at(i));
    out.stable_at.emplace(i, n_lo);
  }
  return out;
}

StableAssembly stable_homology(int k, int p, int degree_bound, int point_bound,
                               int threads) {
  if (degree_bound < 0) throw invalid_input("negative degree bound");
  if (threads <= 0) threads = default_thread_count();
  const std::vector<LambdaTuple> lambdas = enumerate_lambda(k, p, degree_bound);

  std::vector<StableContribution> parts(lambdas.size());
  parallel_for(lambdas.size(), threads, [&](std::size_t i) {
    StableContribution c;
    c.lambda = lambdas[i];
    c.shift = p * lambdas[i].s();
    c.module = stabilize_M(lambdas[i], p, degree_bound - c.shift, point_bound);
    parts[i] = std::move(c);
  });

  StableAssembly out;
  out.certified_max_degree = degree_bound;
  for (const StableContribution& c : parts) {
    const int needed = degree_bound - c.shift;
    if (c.module.certified_max < needed) {
      out.certified_max_degree =
          std::min(out.certified_max_degree, c.shift + c.module.certified_max);
    }
    out.total = direct_sum(out.total, shifted(c.module.values, c.shift));
  }
  out.total.groups.erase(out.total.groups.upper_bound(out.certified_max_degree),
                         out.total.groups.end());
  out.contributions = std::move(parts);
  return out;
}

namespace {

// Multisets of weight >= 2 types with s-value exactly `s` and at most
// `max_instances` instances, in canonical order.
std::vector<TypeMultiset> heavy_multisets(int k, int s, int max_instances, int bound) {
  std::vector<EntanglementType> types;
  for (int w = 2; w <= s + 1; ++w) {
    for (const EntanglementType& e : enumerate_types_uniform(k, w, bound)) {
      types.push_back(e);
    }
  }
  std::vector<TypeMultiset> out;
  TypeMultiset current;
  std::function<void(std::size_t, int, int)> descend = [&](std::size_t idx, int left,
                                                           int instances) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    if (idx == types.size()) return;
    const int step = types[idx].weight() - 1;
    for (int c = 0; c * step <= left && c <= instances; ++c) {
      if (c > 0) current[types[idx]] = c;
      descend(idx + 1, left - c * step, instances - c);
      if (c > 0) current.erase(types[idx]);
    }
  };
  descend(0, s, max_instances);
  return out;
}

} // namespace

GradedAssembly associated_graded(int r, int s, int k, int p, int degree_bound,
                                 int point_bound) {
  if (k < 1 || p < 1) throw invalid_input("assembly needs k >= 1 and p >= 1");
  if (r < 0 || s < 0) throw invalid_input("negative invariants");
  if (degree_bound < 0) throw invalid_input("negative degree bound");

  GradedAssembly out;
  const int instances = r - s;
  if (instances < 0) return out; // no multiset has s > r
  if (instances > point_bound) {
    throw infeasible("multisets with r - s = " + std::to_string(instances) +
                     " instances exceed the point bound");
  }

  std::vector<int> block(k);
  for (int i = 0; i < k; ++i) block[i] = i + 1;
  const EntanglementType single{Partition(k, {block})};

  for (TypeMultiset alpha : heavy_multisets(k, s, instances, kDefaultEnumBound)) {
    int used = 0;
    for (const auto& [e, count] : alpha) used += count;
    if (used < instances) alpha[single] = instances - used;

    GradedContribution c;
    c.shift = p * s;
    c.groups = shifted(
        twisted_homology(colours_of(alpha), p + 1, parity_of(alpha, p), point_bound),
        c.shift);
    c.groups.groups.erase(c.groups.groups.upper_bound(degree_bound),
                          c.groups.groups.end());
    c.alpha = std::move(alpha);
    out.total = direct_sum(out.total, c.groups);
    out.contributions.push_back(std::move(c));
  }
  return out;
}

GradedAssembly predicted_unstable(int r, int k, int p, int degree_bound,
                                  int point_bound) {
  if (r < 0) throw invalid_input("negative cluster count");
  GradedAssembly out;
  out.conjectural = true;
  const int s_top = r == 0 ? 0 : r - 1;
  for (int s = 0; s <= s_top; ++s) {
    if (p * s > degree_bound) break; // shifts beyond the requested degrees
    GradedAssembly part = associated_graded(r, s, k, p, degree_bound, point_bound);
    out.total = direct_sum(out.total, part.total);
    for (GradedContribution& c : part.contributions) {
      out.contributions.push_back(std::move(c));
    }
  }
  return out;
}

} // namespace clusterconf

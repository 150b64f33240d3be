#include "clusterconf/graded.hpp"

#include <algorithm>
#include <limits>

#include "clusterconf/errors.hpp"

namespace clusterconf {

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) {
    throw invalid_input("mixed coefficient fields: " + a.to_text() + " vs " + b.to_text());
  }
}

void drop_above(std::map<int, Int>& ranks, int degree) {
  ranks.erase(ranks.upper_bound(degree), ranks.end());
}

} // namespace

Int GradedModule::rank_at(int degree) const {
  auto it = ranks.find(degree);
  return it == ranks.end() ? Int(0) : it->second;
}

std::optional<int> GradedModule::lowest_possible_degree() const {
  if (!ranks.empty()) return ranks.begin()->first;
  if (trunc) return *trunc + 1;
  return std::nullopt;
}

GradedModule GradedModule::shifted(int amount) const {
  GradedModule out;
  out.field = field;
  for (const auto& [degree, rank] : ranks) out.ranks[degree + amount] = rank;
  if (trunc) out.trunc = *trunc + amount;
  return out;
}

void GradedModule::truncate(int new_trunc) {
  drop_above(ranks, new_trunc);
  trunc = trunc ? std::min(*trunc, new_trunc) : new_trunc;
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
  require_same_field(a.field, b.field);
  GradedModule out = a;
  for (const auto& [degree, rank] : b.ranks) {
    Int& slot = out.ranks[degree];
    slot += rank;
    if (slot == 0) out.ranks.erase(degree);
  }
  if (b.trunc) out.trunc = out.trunc ? std::min(*out.trunc, *b.trunc) : *b.trunc;
  if (out.trunc) drop_above(out.ranks, *out.trunc);
  return out;
}

GradedModule tensor(const GradedModule& a, const GradedModule& b) {
  require_same_field(a.field, b.field);
  GradedModule out;
  out.field = a.field;
  // An exactly-zero factor kills the product exactly, truncation or not on
  // the other side.
  if (a.known_zero() || b.known_zero()) return out;

  for (const auto& [da, ra] : a.ranks) {
    for (const auto& [db, rb] : b.ranks) {
      out.ranks[da + db] += ra * rb;
    }
  }
  // Degree g of the product is certain iff every contributing split g = x + y
  // lies in known territory; the first uncertain degree is trunc_a + lowest_b
  // + 1 (and symmetrically), where "lowest" is the lowest possibly-nonzero
  // degree of the other factor.
  std::optional<int> t;
  if (a.trunc) t = *a.trunc + *b.lowest_possible_degree();
  if (b.trunc) {
    int cand = *b.trunc + *a.lowest_possible_degree();
    t = t ? std::min(*t, cand) : cand;
  }
  out.trunc = t;
  if (out.trunc) drop_above(out.ranks, *out.trunc);
  return out;
}

void LabelSystem::set_discrete(int k, int non_basepoint_count) {
  if (k < 1) throw invalid_input("label size must be >= 1");
  if (non_basepoint_count < 0) throw invalid_input("negative label count");
  entries_[k] = non_basepoint_count;
}

void LabelSystem::set_module(int k, GradedModule m) {
  if (k < 1) throw invalid_input("label size must be >= 1");
  require_same_field(field_, m.field);
  // Reduced homology of a pointed space vanishes below degree 0; allowing
  // negative degrees here would also unsound the weight bounds downstream.
  if (!m.ranks.empty() && m.ranks.begin()->first < 0)
    throw invalid_input("label homology must vanish in negative degrees");
  entries_[k] = std::move(m);
}

std::vector<int> LabelSystem::sizes() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& [k, entry] : entries_) out.push_back(k);
  return out;
}

GradedModule LabelSystem::reduced(int k) const {
  auto it = entries_.find(k);
  GradedModule out;
  out.field = field_;
  if (it == entries_.end()) return out; // basepoint only
  if (const int* count = std::get_if<int>(&it->second)) {
    // Finite discrete pointed set with `count` non-basepoint elements: its
    // reduced homology is free of that rank in degree 0, exactly.
    if (*count > 0) out.ranks[0] = *count;
    return out;
  }
  return std::get<GradedModule>(it->second);
}

bool LabelSystem::all_discrete() const {
  for (const auto& [k, entry] : entries_) {
    if (!std::holds_alternative<int>(entry)) return false;
  }
  return true;
}

GradedModule smash_homology(const LabelSystem& labels, const std::vector<int>& profile) {
  GradedModule acc;
  acc.field = labels.field();
  acc.ranks[0] = 1; // empty smash product is S^0
  for (int k : profile) {
    if (!labels.has(k)) {
      throw invalid_input("no label entry for block size " + std::to_string(k));
    }
    acc = tensor(acc, labels.reduced(k));
  }
  return acc;
}

namespace {

// Sizes whose label could contribute (possibly nonzero reduced homology),
// restricted by the optional filter, each tagged with the lowest degree it
// can occupy.
struct ActiveSizes {
  std::vector<int> sizes;
  int min_lowest = std::numeric_limits<int>::max();
  int max_size = 0;
};

ActiveSizes active_sizes(const LabelSystem& labels, std::optional<int> k_filter) {
  ActiveSizes out;
  for (int k : labels.sizes()) {
    if (k_filter && k != *k_filter) continue;
    auto lowest = labels.reduced(k).lowest_possible_degree();
    if (!lowest) continue;
    out.sizes.push_back(k);
    out.min_lowest = std::min(out.min_lowest, *lowest);
    out.max_size = std::max(out.max_size, k);
  }
  return out;
}

// Shared evaluator: enumerate types with sizes among `active`, weight up to
// `weight_limit`, shift each smash contribution by `shift(weight)`, truncate
// at `degree_bound`, and aggregate per (weight, size).
template <typename ShiftFn>
FormulaResult evaluate_formula(const LabelSystem& labels, const ActiveSizes& active,
                               int weight_limit, ShiftFn shift, int degree_bound,
                               int bound) {
  FormulaResult result;
  result.total.field = labels.field();
  result.total.trunc = degree_bound;
  result.max_weight = weight_limit;

  if (active.sizes.empty() || weight_limit < 1) return result;

  const int size_cap = weight_limit * active.max_size;
  if (size_cap > bound) {
    throw infeasible("type enumeration needs partitions of up to " +
                     std::to_string(size_cap) + " elements (bound " +
                     std::to_string(bound) + ")");
  }

  std::map<std::pair<int, int>, GradedModule> blocks;
  for (int n = 1; n <= size_cap; ++n) {
    for (const Partition& p : enumerate_partitions_with_sizes(n, active.sizes, bound)) {
      if (p.weight() > weight_limit || !is_indecomposable(p)) continue;
      GradedModule part = smash_homology(labels, p.profile()).shifted(shift(p.weight()));
      part.truncate(degree_bound);
      if (part.trunc && *part.trunc < degree_bound) {
        result.note = "label data incomplete below requested degree bound";
      }
      if (part.ranks.empty()) continue;
      auto key = std::make_pair(p.weight(), n);
      auto [it, fresh] = blocks.emplace(key, part);
      if (!fresh) it->second = direct_sum(it->second, part);
      result.total = direct_sum(result.total, part);
    }
  }
  for (auto& [key, part] : blocks) {
    result.blocks.push_back({key.first, key.second, std::move(part)});
  }
  return result;
}

} // namespace

FormulaResult bar_formula(const LabelSystem& labels, int degree_bound,
                          std::optional<int> k_filter, std::optional<int> weight_cap,
                          int bound) {
  if (degree_bound < 0) throw invalid_input("negative degree bound");
  const ActiveSizes active = active_sizes(labels, k_filter);

  // A weight-w type contributes at degree >= 1 + w * min_lowest, so the
  // enumeration is finite iff the labels start in positive degree -- except
  // that size-1-only systems have just the one type regardless.
  std::optional<int> certified_weight;
  if (active.sizes.empty()) {
    certified_weight = 0;
  } else if (active.min_lowest >= 1) {
    certified_weight = std::max(0, (degree_bound - 1) / active.min_lowest);
  } else if (active.max_size == 1) {
    certified_weight = 1; // only indecomposable with singleton blocks
  }

  int weight_limit = 0;
  bool certified = false;
  std::string note;
  if (certified_weight && (!weight_cap || *weight_cap >= *certified_weight)) {
    weight_limit = *certified_weight;
    certified = true;
  } else if (weight_cap) {
    weight_limit = *weight_cap;
    note = certified_weight
               ? "weight cap below the certified requirement"
               : "labels in degree 0: contributing weight is unbounded";
  } else {
    throw infeasible(
        "formula not certifiable at this degree bound: labels in degree 0 admit "
        "contributing types of every weight; pass a weight cap for a partial answer");
  }

  FormulaResult result = evaluate_formula(
      labels, active, weight_limit, [](int) { return 1; }, degree_bound, bound);
  result.certified = certified && result.note.empty();
  if (!note.empty()) result.note = note;
  return result;
}

FormulaResult iterated_formula(const LabelSystem& labels, int p, int degree_bound,
                               std::optional<int> k_filter, int bound) {
  if (p < 1) throw invalid_input("iterated formula needs p >= 1 (use bar_formula for p = 0)");
  if (degree_bound < 0) throw invalid_input("negative degree bound");
  const ActiveSizes active = active_sizes(labels, k_filter);

  // Weight-w contribution sits in degree >= 1 + w * (p + min_lowest) and
  // p >= 1 makes that grow with w, so certification always succeeds.
  int weight_limit = 0;
  if (!active.sizes.empty()) {
    const int growth = p + std::max(0, active.min_lowest);
    weight_limit = std::max(0, (degree_bound - 1) / growth);
  }

  FormulaResult result = evaluate_formula(
      labels, active, weight_limit, [p](int w) { return (p + 1) + p * (w - 1); },
      degree_bound, bound);
  result.certified = result.note.empty();
  return result;
}

LabelSystem segal_formula(const LabelSystem& labels, int p) {
  if (p < 0) throw invalid_input("negative shift");
  if (p == 0) return labels;
  LabelSystem out(labels.field());
  for (const auto& [k, entry] : labels.entries()) {
    if (const int* count = std::get_if<int>(&entry)) {
      GradedModule m;
      m.field = labels.field();
      if (*count > 0) m.ranks[p] = *count;
      out.set_module(k, std::move(m));
    } else {
      out.set_module(k, std::get<GradedModule>(entry).shifted(p));
    }
  }
  return out;
}

} // namespace clusterconf

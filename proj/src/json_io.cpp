#include "clusterconf/json_io.hpp"

#include <limits>

#include "clusterconf/errors.hpp"

namespace clusterconf {

namespace {

const Int kInt64Min{std::numeric_limits<std::int64_t>::min()};
const Int kInt64Max{std::numeric_limits<std::int64_t>::max()};

[[noreturn]] void bad(const std::string& what) { throw invalid_input(what); }

} // namespace

Json int_to_json(const Int& v) {
  if (v >= kInt64Min && v <= kInt64Max) return v.convert_to<std::int64_t>();
  return v.str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      bad("not an integer: " + j.get<std::string>());
    }
  }
  bad("expected an integer (number or decimal string)");
}

Json rational_to_json(const Rational& v) {
  const Int num = boost::multiprecision::numerator(v);
  const Int den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number()) bad("floats are not accepted; pass exact values as \"a/b\"");
  if (!j.is_string()) bad("expected a rational as \"a/b\" or an integer");
  const std::string text = j.get<std::string>();
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    if (den == 0) bad("zero denominator: " + text);
    return Rational(num, den);
  } catch (const invalid_input&) {
    throw;
  } catch (const std::exception&) {
    bad("not a rational: " + text);
  }
}

Json to_json(const Partition& p) {
  Json blocks = Json::array();
  for (const auto& block : p.blocks()) blocks.push_back(block);
  return blocks;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) bad("a partition is an array of blocks");
  std::vector<std::vector<int>> blocks;
  int n = 0;
  for (const Json& block : j) {
    if (!block.is_array()) bad("a block is an array of integers");
    std::vector<int> b;
    for (const Json& x : block) {
      if (!x.is_number_integer()) bad("block elements are integers");
      b.push_back(x.get<int>());
      ++n;
    }
    blocks.push_back(std::move(b));
  }
  return Partition(n, std::move(blocks));
}

Json to_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const Int& t : g.torsion) torsion.push_back(int_to_json(t));
  return Json{{"betti", g.betti}, {"torsion", std::move(torsion)}};
}

Json to_json(const GradedAbelianGroup& g) {
  Json out = Json::array();
  for (const auto& [degree, group] : g.groups) {
    Json row = to_json(group);
    row["degree"] = degree;
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const GradedModule& m) {
  Json ranks = Json::array();
  for (const auto& [degree, rank] : m.ranks) {
    ranks.push_back(Json{{"degree", degree}, {"rank", int_to_json(rank)}});
  }
  Json out{{"field", m.field.to_text()}, {"ranks", std::move(ranks)}};
  out["trunc"] = m.trunc ? Json(*m.trunc) : Json(nullptr);
  return out;
}

Json to_json(const FormulaResult& r) {
  Json blocks = Json::array();
  for (const FormulaContribution& c : r.blocks) {
    blocks.push_back(Json{
        {"weight", c.weight}, {"size", c.size}, {"part", to_json(c.part)}});
  }
  Json out{{"total", to_json(r.total)},
           {"certified", r.certified},
           {"max_weight", r.max_weight},
           {"blocks", std::move(blocks)}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json to_json(const ClusterConfiguration& c) {
  Json clusters = Json::array();
  for (const Cluster& cluster : c.clusters()) {
    Json points = Json::array();
    for (const auto& point : cluster.points) {
      Json coords = Json::array();
      for (const Rational& x : point) coords.push_back(rational_to_json(x));
      points.push_back(std::move(coords));
    }
    clusters.push_back(Json{{"label", cluster.label}, {"points", std::move(points)}});
  }
  return Json{{"d", c.d()}, {"p", c.p()}, {"clusters", std::move(clusters)}};
}

ClusterConfiguration configuration_from_json(const Json& j) {
  try {
    if (!j.is_object()) bad("a configuration is an object with d, p, clusters");
    const int d = j.at("d").get<int>();
    const int p = j.value("p", 0);
    std::vector<Cluster> clusters;
    for (const Json& entry : j.at("clusters")) {
      Cluster cluster;
      cluster.label = entry.value("label", std::string(kBasepointLabel));
      for (const Json& point : entry.at("points")) {
        std::vector<Rational> coords;
        for (const Json& x : point) coords.push_back(rational_from_json(x));
        cluster.points.push_back(std::move(coords));
      }
      clusters.push_back(std::move(cluster));
    }
    return ClusterConfiguration(d, p, std::move(clusters));
  } catch (const Json::exception& e) {
    bad(std::string("malformed configuration: ") + e.what());
  }
}

std::tuple<ColourMultiset, int, ParityMap> fn_request_from_json(const Json& j) {
  try {
    std::map<std::string, int> counts;
    for (const Json& entry : j.at("alpha")) {
      const std::string colour = entry.at("colour").get<std::string>();
      if (counts.count(colour)) bad("duplicate colour " + colour);
      counts[colour] = entry.at("count").get<int>();
    }
    ColourMultiset alpha(counts);
    const int d = j.at("d").get<int>();
    ParityMap parity = ParityMap::trivial(alpha);
    if (j.contains("parity")) {
      for (const auto& [colour, bit] : j.at("parity").items()) {
        parity.bits[colour] = bit.get<int>();
      }
    }
    return {std::move(alpha), d, std::move(parity)};
  } catch (const Json::exception& e) {
    bad(std::string("malformed request: ") + e.what());
  }
}

Json to_json(const ChainComplex& c) {
  Json degrees = Json::array();
  for (int q = 0; q <= c.top_degree(); ++q) {
    Json boundary = Json::array();
    for (const Triplet& t : c.boundary(q).triplets()) {
      boundary.push_back(Json::array({t.row, t.col, int_to_json(t.value)}));
    }
    degrees.push_back(Json{{"degree", q},
                           {"generators", c.labels(q)},
                           {"boundary", std::move(boundary)}});
  }
  return Json{{"degrees", std::move(degrees)}};
}

Json to_json(const TypeMultiset& alpha) {
  Json out = Json::array();
  for (const auto& [e, count] : alpha) {
    out.push_back(Json{{"type", to_json(e.partition())}, {"count", count}});
  }
  return out;
}

Json to_json(const LambdaTuple& lambda) { return to_json(lambda.entries()); }

Json to_json(const StableAssembly& assembly) {
  Json contributions = Json::array();
  for (const StableContribution& c : assembly.contributions) {
    int read_at = -1;
    if (!c.module.stable_at.empty()) read_at = c.module.stable_at.begin()->second;
    contributions.push_back(Json{{"lambda", to_json(c.lambda)},
                                 {"lambda_text", c.lambda.to_text()},
                                 {"shift", c.shift},
                                 {"stable_at_n", read_at},
                                 {"certified_max", c.module.certified_max},
                                 {"values", to_json(c.module.values)}});
  }
  return Json{{"certified_max_degree", assembly.certified_max_degree},
              {"degrees", to_json(assembly.total)},
              {"contributions", std::move(contributions)}};
}

Json to_json(const GradedAssembly& assembly) {
  Json contributions = Json::array();
  for (const GradedContribution& c : assembly.contributions) {
    contributions.push_back(Json{{"alpha", to_json(c.alpha)},
                                 {"shift", c.shift},
                                 {"degrees", to_json(c.groups)}});
  }
  return Json{{"conjectural", assembly.conjectural},
              {"degrees", to_json(assembly.total)},
              {"contributions", std::move(contributions)}};
}

} // namespace clusterconf

// Command-line front end. Every printed number is exact: big integers render
// as decimal text, rationals as "a/b". Output for a fixed invocation is
// byte-identical across runs and thread counts.
//
// Exit codes: 0 success, 1 bad usage or bad input, 2 infeasible request
// (whatever partial output was certified is still printed first).

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "clusterconf/bar_complex.hpp"
#include "clusterconf/errors.hpp"
#include "clusterconf/json_io.hpp"
#include "clusterconf/parallel.hpp"
#include "clusterconf/selftest.hpp"

using namespace clusterconf;

namespace {

// ---------------------------------------------------------------------------
// Output plumbing

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

void print_csv(std::ostream& out, const Table& table) {
  const auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_field(row[i]);
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

void print_aligned(std::ostream& out, const Table& table) {
  std::vector<std::size_t> width(table.header.size(), 0);
  const auto grow = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  };
  grow(table.header);
  for (const auto& row : table.rows) grow(row);
  const auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size()) out << std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

void print_table(std::ostream& out, const Table& table, const std::string& format) {
  if (format == "csv") print_csv(out, table);
  else print_aligned(out, table);
}

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string int_text(const Int& v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

std::string torsion_text(const std::vector<Int>& torsion) {
  std::string out;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) out += ';';
    out += int_text(torsion[i]);
  }
  return out;
}

// Rows for degrees lo..hi, zeros included so the range is explicit.
Table homology_table(const GradedAbelianGroup& g, int lo, int hi) {
  Table table;
  table.header = {"degree", "betti", "torsion"};
  for (int q = lo; q <= hi; ++q) {
    const AbelianGroup h = g.at(q);
    table.rows.push_back({std::to_string(q), std::to_string(h.betti),
                          torsion_text(h.torsion)});
  }
  return table;
}

void print_homology_lines(std::ostream& out, const GradedAbelianGroup& g, int lo,
                          int hi) {
  for (int q = lo; q <= hi; ++q)
    out << "H_" << q << " = " << g.at(q).to_text() << "\n";
}

// ---------------------------------------------------------------------------
// Input plumbing

int parse_int_field(const std::string& text) {
  try {
    std::size_t pos = 0;
    const int value = std::stoi(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw invalid_input("not an integer: '" + text + "'");
  }
}

// "a:2,b:1" -> {{"a",2},{"b",1}}
std::map<std::string, int> parse_counts_text(const std::string& text) {
  std::map<std::string, int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos || colon == 0)
      throw invalid_input("expected name:count, got '" + item + "'");
    const std::string name = item.substr(0, colon);
    if (out.count(name)) throw invalid_input("duplicate name '" + name + "'");
    out.emplace(name, parse_int_field(item.substr(colon + 1)));
  }
  if (out.empty()) throw invalid_input("empty list: '" + text + "'");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw invalid_input(std::string("bad JSON: ") + e.what());
  }
}

// --file wins over --json; exactly one of them must be present.
Json load_json_input(const std::string& file, const std::string& inline_json) {
  if (!file.empty() && !inline_json.empty())
    throw invalid_input("give --file or --json, not both");
  if (!file.empty()) return parse_json_text(read_file(file));
  if (!inline_json.empty()) return parse_json_text(inline_json);
  throw invalid_input("no input: give --file or --json");
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_types_enum(int n, int k, int w, int bound, const std::string& format) {
  std::vector<EntanglementType> types;
  if (n > 0 && (k > 0 || w > 0))
    throw invalid_input("give --n alone, or --k with --weight");
  if (n > 0) {
    types = enumerate_types(n, bound);
  } else if (k > 0 && w > 0) {
    types = enumerate_types_uniform(k, w, bound);
  } else {
    throw invalid_input("give --n, or --k with --weight");
  }

  if (format == "json") {
    Json list = Json::array();
    for (const EntanglementType& t : types) {
      list.push_back({{"partition", to_json(t.partition())},
                      {"text", to_text(t.partition())},
                      {"weight", t.weight()},
                      {"size", t.size()}});
    }
    emit_json({{"count", types.size()}, {"types", list}});
    return 0;
  }
  Table table;
  table.header = {"partition", "weight", "size"};
  for (const EntanglementType& t : types)
    table.rows.push_back({to_text(t.partition()), std::to_string(t.weight()),
                          std::to_string(t.size())});
  print_table(std::cout, table, format);
  return 0;
}

int cmd_types_count(int n, int k, const std::string& format) {
  const std::optional<int> uniform = k > 0 ? std::optional<int>(k) : std::nullopt;
  const std::vector<Int> counts = count_types_by_inversion(n, uniform);

  if (format == "json") {
    Json list = Json::array();
    for (int i = 1; i <= n; ++i) list.push_back(int_to_json(counts[static_cast<std::size_t>(i)]));
    Json j = {{"counts", list}};
    if (uniform) j["k"] = *uniform;
    emit_json(j);
    return 0;
  }
  if (format == "csv") {
    Table table;
    table.header = {uniform ? "weight" : "n", "count"};
    for (int i = 1; i <= n; ++i)
      table.rows.push_back({std::to_string(i), int_text(counts[static_cast<std::size_t>(i)])});
    print_csv(std::cout, table);
    return 0;
  }
  for (int i = 1; i <= n; ++i) {
    if (i > 1) std::cout << ',';
    std::cout << counts[static_cast<std::size_t>(i)];
  }
  std::cout << "\n";
  return 0;
}

int cmd_factorize(const std::string& text, const std::string& format) {
  const Partition p = partition_from_text(text);
  const std::vector<Partition> factors = factorize(p);
  const int level = filtration_level(p);

  if (format == "json") {
    Json list = Json::array();
    for (const Partition& f : factors) {
      list.push_back({{"partition", to_json(f)},
                      {"text", to_text(f)},
                      {"weight", f.weight()},
                      {"size", f.size()}});
    }
    emit_json({{"input", to_json(p)},
               {"factors", list},
               {"filtration_level", level}});
    return 0;
  }
  Table table;
  table.header = {"factor", "weight", "size"};
  for (const Partition& f : factors)
    table.rows.push_back({to_text(f), std::to_string(f.weight()),
                          std::to_string(f.size())});
  print_table(std::cout, table, format);
  if (format == "table") std::cout << "filtration level " << level << "\n";
  return 0;
}

int cmd_chi(const std::string& file, const std::string& inline_json,
            const std::string& format) {
  const ClusterConfiguration config =
      configuration_from_json(load_json_input(file, inline_json));
  const Partition p = chi(config);

  if (format == "json") {
    emit_json({{"partition", to_json(p)},
               {"text", to_text(p)},
               {"weight", p.weight()},
               {"size", p.size()}});
    return 0;
  }
  if (format == "csv") {
    Table table;
    table.header = {"partition", "weight", "size"};
    table.rows.push_back(
        {to_text(p), std::to_string(p.weight()), std::to_string(p.size())});
    print_csv(std::cout, table);
    return 0;
  }
  std::cout << to_text(p) << "\n";
  return 0;
}

int cmd_bar_homology(const std::string& labels_text, int n, int max_degree,
                     int bound, const std::string& format) {
  const DiscreteLabels labels = DiscreteLabels::from_text(labels_text);
  const ChainComplex complex = build_bar_complex(labels, n, max_degree, bound);
  const GradedAbelianGroup h = complex.homology();
  const int hi = complex.top_degree();

  if (format == "json") {
    emit_json({{"labels", labels.to_text()},
               {"size", n},
               {"top_degree", hi},
               {"homology", to_json(h)}});
  } else if (format == "csv") {
    print_csv(std::cout, homology_table(h, 0, hi));
  } else {
    print_homology_lines(std::cout, h, 0, hi);
  }
  return 0;
}

int cmd_colored_homology(const std::string& file, const std::string& inline_json,
                         const std::string& alpha_text, int d,
                         const std::string& parity_text, int point_bound,
                         const std::string& format) {
  ColourMultiset alpha({{"a", 1}});
  ParityMap parity;
  int dim = 0;
  if (!file.empty() || !inline_json.empty()) {
    if (!alpha_text.empty() || !parity_text.empty())
      throw invalid_input("give JSON input or --alpha flags, not both");
    std::tie(alpha, dim, parity) =
        fn_request_from_json(load_json_input(file, inline_json));
  } else if (!alpha_text.empty()) {
    alpha = ColourMultiset(parse_counts_text(alpha_text));
    if (d < 1) throw invalid_input("--alpha needs --d >= 1");
    dim = d;
    parity = parity_text.empty()
                 ? ParityMap::trivial(alpha)
                 : ParityMap{parse_counts_text(parity_text)};
  } else {
    throw invalid_input("no input: give --file, --json, or --alpha with --d");
  }

  const GradedAbelianGroup h = twisted_homology(alpha, dim, parity, point_bound);
  const int hi = std::max(0, (dim - 1) * (alpha.total() - 1));

  if (format == "json") {
    Json alpha_json = Json::array();
    for (std::size_t i = 0; i < alpha.names().size(); ++i)
      alpha_json.push_back(
          {{"colour", alpha.names()[i]}, {"count", alpha.counts()[i]}});
    emit_json({{"alpha", alpha_json},
               {"d", dim},
               {"parity", parity.bits},
               {"homology", to_json(h)}});
  } else if (format == "csv") {
    print_csv(std::cout, homology_table(h, 0, hi));
  } else {
    print_homology_lines(std::cout, h, 0, hi);
  }
  return 0;
}

int cmd_stable(int k, int p, int degree_bound, int point_bound, int threads,
               const std::string& format) {
  const StableAssembly assembly =
      stable_homology(k, p, degree_bound, point_bound, threads);
  const int hi = std::min(degree_bound, assembly.certified_max_degree);

  if (format == "json") {
    Json j = to_json(assembly);
    j["k"] = k;
    j["p"] = p;
    j["degree_bound"] = degree_bound;
    emit_json(j);
  } else if (format == "csv") {
    print_csv(std::cout, homology_table(assembly.total, 0, hi));
  } else {
    print_homology_lines(std::cout, assembly.total, 0, hi);
    std::cout << "certified through degree " << assembly.certified_max_degree
              << "\n";
  }
  if (!assembly.complete(degree_bound)) {
    std::cerr << "infeasible: certified only through degree "
              << assembly.certified_max_degree << " of " << degree_bound
              << "; raise --point-bound\n";
    return 2;
  }
  return 0;
}

int cmd_assoc_graded(int r, int s, int k, int p, int degree_bound,
                     int point_bound, const std::string& format) {
  const GradedAssembly assembly =
      associated_graded(r, s, k, p, degree_bound, point_bound);

  if (format == "json") {
    Json j = to_json(assembly);
    j["r"] = r;
    j["s"] = s;
    j["k"] = k;
    j["p"] = p;
    emit_json(j);
  } else if (format == "csv") {
    print_csv(std::cout, homology_table(assembly.total, 0, degree_bound));
  } else {
    print_homology_lines(std::cout, assembly.total, 0, degree_bound);
  }
  return 0;
}

int cmd_predict_unstable(int r, int k, int p, int degree_bound, int point_bound,
                         const std::string& format) {
  const GradedAssembly assembly =
      predicted_unstable(r, k, p, degree_bound, point_bound);

  if (format == "json") {
    Json j = to_json(assembly);
    j["r"] = r;
    j["k"] = k;
    j["p"] = p;
    emit_json(j);
  } else if (format == "csv") {
    Table table = homology_table(assembly.total, 0, degree_bound);
    table.header.push_back("conjectural");
    for (auto& row : table.rows) row.push_back("true");
    print_csv(std::cout, table);
  } else {
    std::cout << "conjectural: assumes the finite-level filtration collapses\n";
    print_homology_lines(std::cout, assembly.total, 0, degree_bound);
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"homology of cluster configuration spaces"};
  app.require_subcommand(1);

  std::string format = "table";
  int threads = 0;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--threads", threads,
                 "worker threads (0: CLUSTERCONF_THREADS, else 1)");

  int rc = 0;
  const auto sub = [&](const char* name, const char* description) {
    CLI::App* s = app.add_subcommand(name, description);
    s->fallthrough();
    return s;
  };

  // types-enum
  int te_n = 0, te_k = 0, te_w = 0, te_bound = kDefaultEnumBound;
  CLI::App* te = sub("types-enum", "list entanglement types");
  te->add_option("--n", te_n, "underlying size");
  te->add_option("--k", te_k, "uniform block size (with --weight)");
  te->add_option("--weight", te_w, "number of blocks (with --k)");
  te->add_option("--bound", te_bound, "size cap for enumeration");
  te->callback([&] { rc = cmd_types_enum(te_n, te_k, te_w, te_bound, format); });

  // types-count
  int tc_n = 0, tc_k = 0;
  CLI::App* tc = sub("types-count", "count entanglement types up to a size");
  tc->add_option("--n", tc_n, "largest size (or weight with --k)")->required();
  tc->add_option("--k", tc_k, "restrict to k-uniform types, count by weight");
  tc->callback([&] { rc = cmd_types_count(tc_n, tc_k, format); });

  // factorize
  std::string fz_text;
  CLI::App* fz = sub("factorize", "split a partition into indecomposables");
  fz->add_option("--partition", fz_text, "partition text, e.g. \"1,3|2\"")
      ->required();
  fz->callback([&] { rc = cmd_factorize(fz_text, format); });

  // chi
  std::string chi_file, chi_json;
  CLI::App* ch = sub("chi", "entanglement partition of a line configuration");
  ch->add_option("--file", chi_file, "configuration JSON file");
  ch->add_option("--json", chi_json, "inline configuration JSON");
  ch->callback([&] { rc = cmd_chi(chi_file, chi_json, format); });

  // bar-homology
  std::string bh_labels;
  int bh_n = 0, bh_max_degree = -1, bh_bound = kDefaultEnumBound;
  CLI::App* bh = sub("bar-homology", "homology of the weight-graded bar complex");
  bh->add_option("--labels", bh_labels, "label counts, e.g. \"1:2,2:1\"")
      ->required();
  bh->add_option("--n", bh_n, "total size of the grading piece")->required();
  bh->add_option("--max-degree", bh_max_degree, "truncate the complex (-1: full)");
  bh->add_option("--bound", bh_bound, "size cap for enumeration");
  bh->callback(
      [&] { rc = cmd_bar_homology(bh_labels, bh_n, bh_max_degree, bh_bound, format); });

  // colored-homology
  std::string fn_file, fn_json, fn_alpha, fn_parity;
  int fn_d = 0, fn_point_bound = kDefaultPointBound;
  CLI::App* fn = sub("colored-homology",
                     "twisted homology of a coloured configuration space");
  fn->add_option("--file", fn_file, "request JSON file");
  fn->add_option("--json", fn_json, "inline request JSON");
  fn->add_option("--alpha", fn_alpha, "colour counts, e.g. \"a:2,b:1\"");
  fn->add_option("--d", fn_d, "ambient dimension");
  fn->add_option("--parity", fn_parity, "parity bits, e.g. \"a:1,b:0\"");
  fn->add_option("--point-bound", fn_point_bound, "cap on total points");
  fn->callback([&] {
    rc = cmd_colored_homology(fn_file, fn_json, fn_alpha, fn_d, fn_parity,
                              fn_point_bound, format);
  });

  // stable
  int st_k = 0, st_p = 0, st_degree = 0, st_point_bound = kDefaultPointBound;
  CLI::App* st = sub("stable", "stable homology of the vertical cluster theory");
  st->add_option("--k", st_k, "cluster size")->required();
  st->add_option("--p", st_p, "codimension parameter")->required();
  st->add_option("--max-degree", st_degree, "degree bound")->required();
  st->add_option("--point-bound", st_point_bound, "cap on points per cell engine run");
  st->callback([&] {
    rc = cmd_stable(st_k, st_p, st_degree, st_point_bound, threads, format);
  });

  // assoc-graded
  int ag_r = 0, ag_s = 0, ag_k = 0, ag_p = 0, ag_degree = 0,
      ag_point_bound = kDefaultPointBound;
  CLI::App* ag = sub("assoc-graded", "associated-graded value at (r, s)");
  ag->add_option("--r", ag_r, "number of clusters")->required();
  ag->add_option("--s", ag_s, "filtration shift")->required();
  ag->add_option("--k", ag_k, "cluster size")->required();
  ag->add_option("--p", ag_p, "codimension parameter")->required();
  ag->add_option("--max-degree", ag_degree, "degree bound")->required();
  ag->add_option("--point-bound", ag_point_bound, "cap on points per cell engine run");
  ag->callback([&] {
    rc = cmd_assoc_graded(ag_r, ag_s, ag_k, ag_p, ag_degree, ag_point_bound, format);
  });

  // predict-unstable
  int pu_r = 0, pu_k = 0, pu_p = 0, pu_degree = 0,
      pu_point_bound = kDefaultPointBound;
  CLI::App* pu = sub("predict-unstable",
                     "conjectural homology at finite cluster count");
  pu->add_option("--r", pu_r, "number of clusters")->required();
  pu->add_option("--k", pu_k, "cluster size")->required();
  pu->add_option("--p", pu_p, "codimension parameter")->required();
  pu->add_option("--max-degree", pu_degree, "degree bound")->required();
  pu->add_option("--point-bound", pu_point_bound, "cap on points per cell engine run");
  pu->callback([&] {
    rc = cmd_predict_unstable(pu_r, pu_k, pu_p, pu_degree, pu_point_bound, format);
  });

  // selftest
  unsigned st_seed = 12345;
  CLI::App* se = sub("selftest", "run the cross-module invariant suite");
  se->add_option("--seed", st_seed, "seed for the randomized checks");
  se->callback([&] {
    const int workers = threads > 0 ? threads : default_thread_count();
    rc = run_selftest(std::cout, workers, st_seed) == 0 ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

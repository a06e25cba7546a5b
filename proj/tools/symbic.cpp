#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "symbic/correspondence.hpp"
#include "symbic/enumeration.hpp"
#include "symbic/fan.hpp"
#include "symbic/io.hpp"
#include "symbic/matroid.hpp"
#include "symbic/selftest.hpp"
#include "symbic/shelling.hpp"

using namespace symbic;
using nlohmann::json;

namespace {

struct Options {
  int n = 0;
  std::string matrix;
  std::string tree;
  std::string out;
  std::string dot;
  std::string report;
  std::string exported;
  std::string filter = "all";
  std::string method = "all";
  std::uint64_t seed = 0;
  int jobs = 1;
  bool verify = false;
  bool long_running = false;
  int criterion = 0;
};

void emit(const Options& o, const json& j) {
  if (!o.out.empty()) io::write_file(o.out, j.dump(2) + "\n");
}

std::string show(const TropMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) os << (j ? " " : "  ") << m(i, j);
    os << "\n";
  }
  return os.str();
}

int cmd_rank(const Options& o) {
  const TropMatrix m = io::read_matrix(o.matrix);
  const int tr = trop_rank(m);
  json j{{"n", m.size()}, {"tropical_rank", tr}};
  std::cout << "tropical_rank=" << tr;
  if (m.is_symmetric()) {
    const int sr = sym_trop_rank(m);
    j["symmetric_tropical_rank"] = sr;
    std::cout << " symmetric_tropical_rank=" << sr;
  }
  std::cout << "\n";
  emit(o, j);
  return 0;
}

int cmd_tree_from_matrix(const Options& o) {
  const SymbicTree t = tree_from_matrix(io::read_matrix(o.matrix));
  std::cout << describe(t) << "\n";
  std::cout << "trunk vertices: " << t.trunk().size() << "\n";
  emit(o, io::tree_to_json(t));
  if (!o.dot.empty()) io::write_file(o.dot, io::tree_to_dot(t));
  return 0;
}

int cmd_matrix_from_tree(const Options& o) {
  const SymbicTree t = io::read_tree(o.tree);
  const TropMatrix a = matrix_A_from_tree(t);
  const TropMatrix b = matrix_B_from_tree(t);
  std::cout << describe(t) << "\nA_T:\n" << show(a) << "B_T:\n" << show(b);
  json d = json::array();
  for (const Rat& x : base_distances(t, t.anchor())) d.push_back(x.str());
  emit(o, {{"A", io::matrix_to_json(a)}, {"B", io::matrix_to_json(b)}, {"D", d}});
  if (!o.dot.empty()) io::write_file(o.dot, io::tree_to_dot(t));
  return 0;
}

int cmd_enumerate(const Options& o) {
  const TreeCatalog c = enumerate_regular(o.n);
  std::cout << c.size() << " regular " << o.n << "+" << o.n << " trees\n";
  emit(o, io::catalog_to_json(c));
  return 0;
}

int cmd_count(const Options& o) {
  if (o.n < 0) throw InvalidInput("n must be nonnegative");
  json j{{"n", o.n}};
  std::vector<BigInt> values;
  auto report = [&](const std::string& name, const BigInt& v) {
    std::cout << name << ": " << v << "\n";
    j[name] = v.str();
    values.push_back(v);
  };
  if (o.method == "all" || o.method == "recurrence") report("recurrence", count_regular(o.n));
  if (o.method == "all" || o.method == "egf") {
    if (o.n > kMaxSeriesOrder) throw UnsupportedSize("EGF coefficients support n <= 30");
    report("egf", egf_coefficients(Egf::all)[static_cast<std::size_t>(o.n)]);
  }
  if (o.method == "all" || o.method == "constructive") {
    if (o.n > kMaxEnumerationN) throw UnsupportedSize("constructive counting supports n <= 7");
    report("constructive", o.n == 0 ? BigInt(1) : BigInt(enumerate_regular(o.n).size()));
  }
  for (const auto& v : values) {
    if (v != values.front()) throw Error("counting methods disagree");
  }
  emit(o, j);
  return 0;
}

int cmd_shelling(const Options& o) {
  const auto order = shelling_order(o.n);
  std::cout << order.size() << " cells in shelling order\n";
  json j = io::order_to_json(o.n, order);
  int code = 0;
  if (o.verify) {
    const auto bad = verify_shelling(order);
    if (bad) {
      std::cout << "shelling condition fails:\n  earlier #" << bad->earlier << ":";
      for (LeafSet s : order[bad->earlier]) std::cout << " " << format_split(s, o.n);
      std::cout << "\n  later   #" << bad->later << ":";
      for (LeafSet s : order[bad->later]) std::cout << " " << format_split(s, o.n);
      std::cout << "\n";
      j["verified"] = false;
      j["counterexample"] = {{"earlier", bad->earlier}, {"later", bad->later}};
      code = 1;
    } else {
      std::cout << "shelling verified\n";
      j["verified"] = true;
    }
  }
  if (!o.exported.empty()) io::write_file(o.exported, j.dump(2) + "\n");
  emit(o, j);
  return code;
}

int cmd_matroid(const Options& o) {
  const TreeFilter f = parse_filter(o.filter);
  const BasisSet b = union_bases(o.n, f);
  std::cout << b.size() << " bases (filter " << to_string(f) << ")\n";
  emit(o, io::bases_to_json(o.n, to_string(f), b));
  return 0;
}

int cmd_conjecture(const Options& o) {
  const ConjectureReport r = conjecture_scan(o.n);
  std::cout << "all trees: " << r.all_count << " bases, caterpillars: " << r.caterpillar_count
            << " bases, equal: " << (r.equal ? "yes" : "no") << "\n";
  if (!o.report.empty()) io::write_file(o.report, r.text);
  json missing = json::array();
  for (ColumnSet m : r.missing) missing.push_back(format_columns(m, o.n));
  emit(o, {{"n", o.n}, {"equal", r.equal}, {"missing_bases", missing}});
  return 0;
}

int cmd_fan(const Options& o) {
  const auto bad = refinement_check(o.n, 5);
  const auto groups = signature_groups(o.n);
  std::size_t cones = 0;
  for (const auto& g : groups) cones += g.second.size();
  std::cout << "refinement: " << (bad ? "disagreement" : "ok") << "\n"
            << cones << " symbic cones, " << groups.size() << " coarse signatures\n";
  std::ostringstream md;
  md << "# Fan comparison, n = " << o.n << "\n\n- symbic cones: " << cones << "\n- coarse signatures: " << groups.size()
     << "\n- refinement (5 samples per tree): " << (bad ? "disagreement" : "ok") << "\n";
  if (o.n == 3) {
    md << "\n| signature | trees |\n|---|---|\n";
    int k = 0;
    for (const auto& [sig, keys] : groups) {
      md << "| " << ++k << " |";
      for (const auto& key : keys) {
        md << " ";
        for (LeafSet s : key) md << format_split(s, o.n);
        md << ";";
      }
      md << " |\n";
    }
  }
  if (!o.report.empty()) io::write_file(o.report, md.str());
  emit(o, {{"n", o.n}, {"cones", cones}, {"signatures", groups.size()}, {"refinement_ok", !bad}});
  return bad ? 1 : 0;
}

int cmd_selftest(const Options& o) {
  SelftestOptions opts{o.long_running, o.seed};
  bool all = true;
  json results = json::array();
  for (int id = 1; id <= kCriteria; ++id) {
    if (o.criterion != 0 && id != o.criterion) continue;
    const auto r = run_criterion(id, opts);
    std::cout << summary_line(r) << "\n";
    for (const auto& d : r.details) std::cout << "    " << d << "\n";
    results.push_back({{"criterion", id}, {"title", r.title}, {"passed", r.passed}, {"details", r.details}});
    all = all && r.passed;
  }
  emit(o, results);
  return all ? 0 : 1;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ValidationError*>(&e) != nullptr) return "validation";
  if (dynamic_cast<const UnsupportedSize*>(&e) != nullptr) return "size_cap";
  if (dynamic_cast<const NotRankTwo*>(&e) != nullptr) return "not_rank_two";
  if (dynamic_cast<const RankOneInput*>(&e) != nullptr) return "rank_one";
  if (dynamic_cast<const InvalidInput*>(&e) != nullptr) return "bad_input";
  if (dynamic_cast<const OverflowError*>(&e) != nullptr) return "overflow";
  return "error";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric tropical rank-2 matrices and symbic trees"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--jobs", o.jobs, "Worker count (computations run sequentially)")->check(CLI::PositiveNumber);

  auto n_opt = [&](CLI::App* c) { c->add_option("--n", o.n, "Leaf pairs")->required(); };
  auto out_opt = [&](CLI::App* c) { c->add_option("--out", o.out, "JSON output file"); };

  auto* rank = app.add_subcommand("rank", "Tropical and symmetric tropical rank");
  rank->add_option("--matrix", o.matrix, "Matrix file (JSON or CSV)")->required();
  out_opt(rank);

  auto* t2m = app.add_subcommand("tree-from-matrix", "Symbic tree of a symmetric rank-2 matrix");
  t2m->add_option("--matrix", o.matrix, "Matrix file (JSON or CSV)")->required();
  t2m->add_option("--dot", o.dot, "DOT output file");
  out_opt(t2m);

  auto* m2t = app.add_subcommand("matrix-from-tree", "A_T, B_T and D of a tree");
  m2t->add_option("--tree", o.tree, "Tree JSON file")->required();
  m2t->add_option("--dot", o.dot, "DOT output file");
  out_opt(m2t);

  auto* enumerate = app.add_subcommand("enumerate", "All regular trees");
  n_opt(enumerate);
  out_opt(enumerate);

  auto* count = app.add_subcommand("count", "Count regular trees");
  n_opt(count);
  count->add_option("--method", o.method, "recurrence, egf, constructive or all")
      ->check(CLI::IsMember({"all", "recurrence", "egf", "constructive"}));
  out_opt(count);

  auto* shelling = app.add_subcommand("shelling", "Shelling order of maximal cells");
  n_opt(shelling);
  shelling->add_flag("--verify", o.verify, "Check the shelling condition");
  shelling->add_option("--export", o.exported, "Order JSON file");
  out_opt(shelling);

  auto* matroid = app.add_subcommand("matroid", "Union of Cayley-matrix bases");
  n_opt(matroid);
  matroid->add_option("--filter", o.filter, "all, catbranch or caterpillar")
      ->check(CLI::IsMember({"all", "catbranch", "caterpillar"}));
  out_opt(matroid);

  auto* conjecture = app.add_subcommand("conjecture", "Compare all-tree and caterpillar bases");
  n_opt(conjecture);
  conjecture->add_option("--report", o.report, "Markdown report file");
  out_opt(conjecture);

  auto* fan = app.add_subcommand("fan", "Symbic cones against 3x3 minor signatures");
  n_opt(fan);
  fan->add_option("--report", o.report, "Markdown report file");
  out_opt(fan);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("criterion", o.criterion, "Only this criterion")->check(CLI::Range(1, kCriteria));
  selftest->add_flag("--long", o.long_running, "Include long-running checks");
  out_opt(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }

  try {
    if (*rank) return cmd_rank(o);
    if (*t2m) return cmd_tree_from_matrix(o);
    if (*m2t) return cmd_matrix_from_tree(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*count) return cmd_count(o);
    if (*shelling) return cmd_shelling(o);
    if (*matroid) return cmd_matroid(o);
    if (*conjecture) return cmd_conjecture(o);
    if (*fan) return cmd_fan(o);
    return cmd_selftest(o);
  } catch (const ValidationError& e) {
    std::cerr << json{{"error", "validation"},
                      {"condition", static_cast<int>(e.violation().condition)},
                      {"message", e.what()}}
                     .dump()
              << "\n";
  } catch (const std::exception& e) {
    std::cerr << json{{"error", error_kind(e)}, {"message", e.what()}}.dump() << "\n";
  }
  return 1;
}

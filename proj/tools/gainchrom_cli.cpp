// gainchrom: evaluate chromatic functions of integral gain graphs, print
// polynomials, count regions, run the identity checks and realize lower
// degree sequences.

#include "gainchrom/gainchrom.hpp"
#include "gainchrom/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace gainchrom;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string file;
  std::string family;
  int n = 0;
  std::string partition;
  std::string minus_edges;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph", file, "graph JSON file");
    cmd->add_option("--family", family, "catalan | hollow-catalan | shi | linial | sc");
    cmd->add_option("--n", n, "number of vertices");
    cmd->add_option("--partition", partition, "partition for sc, e.g. \"1 3|2 5|4 6\"");
    cmd->add_option("--minus-edges", minus_edges, "graph JSON of -1 edges for sc");
  }

  std::optional<FamilySpec> spec() const {
    if (family.empty()) return std::nullopt;
    FamilySpec s;
    s.n = n;
    if (family == "catalan") {
      s.kind = FamilyKind::catalan;
    } else if (family == "hollow-catalan") {
      s.kind = FamilyKind::hollow_catalan;
    } else if (family == "shi") {
      s.kind = FamilyKind::shi;
    } else if (family == "linial") {
      s.kind = FamilyKind::linial;
    } else if (family == "sc") {
      if (partition.empty() == minus_edges.empty()) throw UsageError("--family sc needs --partition or --minus-edges");
      if (!partition.empty()) {
        s.kind = FamilyKind::sc_partition;
        s.partition = parse_partition(partition, n > 0 ? n : -1);
        s.n = s.partition->size();
      } else {
        s.kind = FamilyKind::sc_graph;
        s.minus_edges = simple_graph_from_json(read_json_file(minus_edges));
        s.n = s.minus_edges->order();
      }
      return s;
    } else {
      throw UsageError("unknown family: " + family);
    }
    if (n < 1) throw UsageError("--family " + family + " needs --n >= 1");
    return s;
  }

  IntegralGainGraph graph() const {
    if (file.empty() == family.empty()) throw UsageError("give exactly one of --graph and --family");
    if (!file.empty()) return graph_from_json(read_json_file(file));
    return build(*spec());
  }

  ClosedForms closed_forms() const {
    const auto s = spec();
    if (!s) throw UsageError("--closed-form needs --family");
    switch (s->kind) {
      case FamilyKind::catalan: return catalan_closed_forms(s->n);
      case FamilyKind::hollow_catalan: return hollow_catalan_closed_forms(s->n);
      case FamilyKind::shi: return shi_closed_forms(s->n);
      case FamilyKind::linial: return linial_closed_forms(s->n);
      case FamilyKind::sc_graph: return sc_path_closed_forms(*s->minus_edges);
      case FamilyKind::sc_partition: return sc_partition_closed_forms(*s->partition);
    }
    throw UsageError("no closed form");
  }
};

struct Common {
  GraphSource source;
  std::string function = "integral";
  std::vector<long long> qs;
  long long z = 0;
  bool json = false;
  bool closed_form = false;
  unsigned threads = 1;
  std::size_t bound = kDefaultEdgeBound;

  ExpansionOptions options() const { return {bound, threads}; }
};

void add_expansion_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--threads", c.threads, "threads for the subset expansion")->check(CLI::PositiveNumber);
  cmd->add_option("--bound", c.bound, "largest edge count for the subset expansion");
}

/// Closed-form polynomial for a counting function with its threshold.
std::pair<Poly1, long long> closed_form_for(const Common& c) {
  const auto f = c.source.closed_forms();
  if (c.function == "integral") return {f.integral, f.integral_valid_from};
  if (c.function == "modular") return {f.modular, f.modular_valid_from};
  if (c.function == "zero-free") return {f.zero_free, std::numeric_limits<long long>::min()};
  throw UsageError("no closed form for function " + c.function);
}

int run_eval(const Common& c) {
  const auto g = c.source.graph();
  const std::string& fn = c.function;
  Json results = Json::array();
  std::optional<Poly2> poly;
  std::optional<std::pair<Poly1, long long>> closed;
  if (c.closed_form) closed = closed_form_for(c);

  if (fn == "regions") {
    const Int r = regions(g);
    if (c.json) {
      std::cout << Json{{"function", fn}, {"graph", graph_to_json(g)}, {"results", {{{"value", int_to_json(r)}}}}}
                << "\n";
    } else {
      std::cout << r << "\n";
    }
    return 0;
  }
  if (c.qs.empty()) throw UsageError("eval needs at least one --q");
  if (!closed) {
    if (fn == "zero-free") poly = Poly2(zero_free_chromatic_poly(g));
    else if (fn == "chromatic") poly = Poly2(chromatic_poly(g, c.options()));
    else if (fn == "total") poly = total_chromatic_poly(g, c.options());
    else if (fn != "integral" && fn != "modular") throw UsageError("unknown function: " + fn);
  }

  for (long long q : c.qs) {
    Int value;
    bool below = false;
    if (closed) {
      value = closed->first.eval(q);
      below = q < closed->second;
    } else if (fn == "integral") {
      value = chi_integral(g, q);
    } else if (fn == "modular") {
      if (q < 1) throw UsageError("modular colorings need q >= 1");
      value = chi_modular(g, q);
    } else {
      value = poly->eval(q, fn == "total" ? c.z : (fn == "chromatic" ? 1 : 0));
    }
    if (c.json) {
      Json row{{"q", q}, {"z", fn == "total" ? c.z : 0}, {"value", int_to_json(value)}};
      if (closed) row["below_valid_range"] = below;
      results.push_back(row);
    } else {
      if (below) std::cout << "# q=" << q << " below valid range (q >= " << closed->second << ")\n";
      std::cout << q << "\t" << value << "\n";
    }
  }
  if (c.json) {
    Json out{{"function", fn}, {"graph", graph_to_json(g)}, {"results", results}};
    if (closed) out["polynomial"] = poly_to_json(closed->first);
    else if (poly) out["polynomial"] = poly_to_json(*poly);
    std::cout << out << "\n";
  }
  return 0;
}

int run_poly(const Common& c, const std::string& parse) {
  Poly2 p;
  Json meta{{"function", c.function}};
  if (!parse.empty()) {
    p = parse_poly(parse);
    meta["function"] = "parse";
  } else if (c.closed_form) {
    p = closed_form_for(c).first;
  } else {
    const auto g = c.source.graph();
    meta["graph"] = graph_to_json(g);
    if (c.function == "zero-free") p = zero_free_chromatic_poly(g);
    else if (c.function == "chromatic") p = chromatic_poly(g, c.options());
    else if (c.function == "total") p = total_chromatic_poly(g, c.options());
    else throw UsageError("poly supports zero-free, chromatic, total (or --closed-form integral|modular)");
  }
  if (c.json) {
    meta["polynomial"] = poly_to_json(p);
    std::cout << meta << "\n";
  } else {
    std::cout << to_string(p) << "\n";
  }
  return 0;
}

struct VerifyOptions {
  std::string suite = "all";
  int n = 3;
  std::string graph;
  bool json = false;
};

class Verifier {
 public:
  explicit Verifier(const VerifyOptions& o) : o_(o) {}

  int run() {
    const std::string& s = o_.suite;
    const bool all = s == "all";
    if (all || s == "first" || s == "second" || s == "complete") theorems(all ? "" : s);
    if (all || s == "catalan") catalan_suite();
    if (all || s == "linial") linial_suite();
    if (all || s == "total") total_suite();
    if (all || s == "invariance") invariance_suite();
    if (!all && ran_ == 0) throw UsageError("unknown suite: " + s);
    if (!o_.json) {
      for (const auto& [id, t] : tallies_)
        std::cout << (t.second == 0 ? "PASS " : "FAIL ") << id << " " << t.first - t.second << "/" << t.first << "\n";
    }
    return failures_ == 0 ? 0 : kExitFailure;
  }

 private:
  std::vector<IntegralGainGraph> graphs() const {
    if (!o_.graph.empty()) return {graph_from_json(read_json_file(o_.graph))};
    return fixture_corpus(o_.n);
  }

  void emit(const CheckReport& r) {
    ++ran_;
    auto& t = tallies_[r.identity_id];
    ++t.first;
    if (!r.pass) {
      ++t.second;
      ++failures_;
    }
    if (o_.json) {
      std::cout << report_to_json(r) << "\n";
    } else if (!r.pass) {
      std::cout << "FAIL " << r.identity_id << " " << r.instance << ": " << r.witness.value_or("") << "\n";
    }
  }

  static std::vector<long long> range(long long from, long long to) {
    std::vector<long long> qs;
    for (long long q = from; q <= to; ++q) qs.push_back(q);
    return qs;
  }

  void theorems(const std::string& only) {
    using S = ChromaticFunctionSelector;
    for (const auto& g : graphs()) {
      const auto qs = range(0, 2LL * g.order() + 3);
      for (S f : {S::integral, S::zero_free_poly}) {
        if (only.empty() || only == "first") emit(check_theorem_first(g, f, qs));
        if (only.empty() || only == "second") emit(check_theorem_second(g, f, qs));
        if ((only.empty() || only == "complete") && g.neutral_edges().empty())
          emit(check_corollary_complete(g, f, qs));
      }
    }
  }

  void catalan_suite() {
    using S = ChromaticFunctionSelector;
    for (int n = 1; n <= o_.n; ++n) {
      emit(check_prop_catalan(n, S::integral, range(0, 2LL * n + 3)));
      emit(check_prop_catalan(n, S::modular, range(2, 2LL * n + 3)));
      emit(check_prop_catalan(n, S::zero_free_poly, {}));
      const auto r = catalan_regions(n);
      CheckReport rep;
      rep.identity_id = "catalan-regions";
      rep.instance = "n=" + std::to_string(n);
      rep.lhs = std::vector<Int>{r.recurrence};
      rep.rhs = std::vector<Int>{r.direct};
      rep.pass = r.recurrence == r.direct;
      emit(rep);
    }
  }

  void closed_form_report(const std::string& id, const std::string& instance, const IntegralGainGraph& g,
                          const ClosedForms& f, long long top) {
    std::vector<Int> lhs, rhs;
    std::vector<long long> qs;
    for (long long q = std::max<long long>(f.integral_valid_from, 0); q <= top; ++q) {
      qs.push_back(q);
      lhs.push_back(chi_integral(g, q));
      rhs.push_back(f.integral.eval(q));
    }
    for (long long q = std::max<long long>(f.modular_valid_from, 1); q <= top; ++q) {
      qs.push_back(q);
      lhs.push_back(chi_modular(g, q));
      rhs.push_back(f.modular.eval(q));
    }
    CheckReport r;
    r.identity_id = id;
    r.instance = instance;
    r.pass = lhs == rhs && Poly2(f.zero_free) == Poly2(zero_free_chromatic_poly(g));
    if (!r.pass) r.witness = "closed form disagrees with the coloring count or zero-free polynomial";
    r.lhs = lhs;
    r.rhs = rhs;
    r.sample_q = qs;
    emit(r);
  }

  void linial_suite() {
    using S = ChromaticFunctionSelector;
    for (int n = 1; n <= o_.n; ++n) {
      emit(check_linial_expansion(n, S::integral, range(0, 2LL * n + 3)));
      emit(check_linial_expansion(n, S::modular, range(2, 2LL * n + 3)));
      emit(check_linial_expansion(n, S::zero_free_poly, {}));
      closed_form_report("linial-closed-forms", "n=" + std::to_string(n), linial(n), linial_closed_forms(n), n + 4);
      CheckReport r;
      r.identity_id = "linial-athanasiadis";
      r.instance = "n=" + std::to_string(n);
      r.lhs = Poly2(linial_athanasiadis(n));
      r.rhs = Poly2(linial_closed_forms(n).zero_free);
      r.pass = r.lhs == r.rhs;
      emit(r);
    }
  }

  void total_suite() {
    for (const auto& g : graphs())
      if (g.size() <= 10) emit(check_total_expansion(g));
    for (auto k : {FamilyKind::catalan, FamilyKind::hollow_catalan, FamilyKind::shi, FamilyKind::linial})
      for (int n = 1; n <= std::min(o_.n, 4); ++n) emit(check_total_complete_uniform(k, n));
  }

  void invariance_suite() {
    for (const auto& r : run_invariance_suite(graphs())) emit(r);
  }

  VerifyOptions o_;
  std::size_t ran_ = 0;
  std::size_t failures_ = 0;
  std::map<std::string, std::pair<std::size_t, std::size_t>> tallies_;
};

DegreeSequence parse_sequence(const std::vector<int>& values) { return DegreeSequence(values.begin(), values.end()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chromatic functions of integral gain graphs"};
  app.require_subcommand(1);

  Common c;
  auto* eval = app.add_subcommand("eval", "evaluate a chromatic function at sampled q");
  c.source.attach(eval);
  eval->add_option("--function", c.function, "integral | modular | zero-free | chromatic | total | regions")
      ->check(CLI::IsMember({"integral", "modular", "zero-free", "chromatic", "total", "regions"}));
  eval->add_option("--q", c.qs, "sample point (repeatable)");
  eval->add_option("--z", c.z, "z value for the total polynomial");
  eval->add_flag("--json", c.json, "JSON output");
  eval->add_flag("--closed-form", c.closed_form, "use the family's closed form");
  add_expansion_flags(eval, c);

  Common pc;
  pc.function = "total";
  std::string parse;
  auto* poly = app.add_subcommand("poly", "print a chromatic polynomial");
  pc.source.attach(poly);
  poly->add_option("--function", pc.function, "zero-free | chromatic | total, or integral | modular with --closed-form")
      ->check(CLI::IsMember({"integral", "modular", "zero-free", "chromatic", "total"}));
  poly->add_option("--parse", parse, "parse and normalize a polynomial expression");
  poly->add_flag("--json", pc.json, "JSON output");
  poly->add_flag("--closed-form", pc.closed_form, "use the family's closed form");
  add_expansion_flags(poly, pc);

  Common rc;
  rc.function = "regions";
  auto* reg = app.add_subcommand("regions", "count regions of the associated arrangement");
  rc.source.attach(reg);
  reg->add_flag("--json", rc.json, "JSON output");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "check the reduction identities");
  verify->add_option("--suite", vo.suite, "all | first | second | complete | catalan | linial | total | invariance")
      ->check(CLI::IsMember({"all", "first", "second", "complete", "catalan", "linial", "total", "invariance"}));
  verify->add_option("--n", vo.n, "largest order")->check(CLI::Range(1, 6));
  verify->add_option("--graph", vo.graph, "check one graph instead of the fixture corpus");
  verify->add_flag("--json", vo.json, "one JSON report per line");

  auto* lds = app.add_subcommand("lds", "lower degree sequences");
  lds->require_subcommand(1);
  std::vector<int> seq;
  int lds_n = -1;
  auto* realize = lds->add_subcommand("realize", "partition with the given lower degrees");
  realize->add_option("d", seq, "d_1 ... d_k")->required();
  realize->add_option("--n", lds_n, "size of the ground set (default n_D)");
  auto* check = lds->add_subcommand("check", "test the necessary conditions");
  check->add_option("d", seq, "d_1 ... d_k")->required();
  check->add_option("--n", lds_n, "size of the ground set")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (eval->parsed()) return run_eval(c);
    if (poly->parsed()) return run_poly(pc, parse);
    if (reg->parsed()) return run_eval(rc);
    if (verify->parsed()) return Verifier(vo).run();
    if (realize->parsed()) {
      std::cout << to_string(realize_lds(parse_sequence(seq), lds_n)) << "\n";
      return 0;
    }
    if (check->parsed()) {
      const auto d = parse_sequence(seq);
      std::cout << "vertex-order\t" << (is_vertex_order_lds(d, lds_n) ? "yes" : "no") << "\n"
                << "increasing\t" << (is_increasing_lds(d, lds_n) ? "yes" : "no") << "\n";
      return 0;
    }
  } catch (const TooManyEdges& e) {
    std::cerr << "error: " << e.what() << " (raise --bound)\n";
    return kExitGuard;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "usage error: bad JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidSequence& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

// chipdual command-line tool.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "chipdual/checks.hpp"
#include "chipdual/duality.hpp"
#include "chipdual/errors.hpp"
#include "chipdual/frackets.hpp"
#include "chipdual/io.hpp"
#include "chipdual/reference.hpp"
#include "chipdual/signed_graph.hpp"

using namespace chipdual;

namespace {

const char* kFormats = R"(Input formats:
  --pair FILE     {"L": [[...]], "M": [[...]]} with integer or "a/b" entries,
                  or a graph in JSON or edge-list form (see --graph)
  --graph FILE    edge list: a header line "n <count> sink <id>" and one
                  "u v +" or "u v -" line per edge ('#' starts a comment),
                  or JSON {"n": 4, "sink": 3, "edges": [[0, 1, "-"], ...]}
  --fixture NAME  run3, run3-unsigned or c6
Rationals print as "a/b" in lowest terms. Exit status: 0 on success,
1 when a requested verification fails, 2 on bad input.)";

enum class Format { Table, Json, Csv };

struct Options {
  std::string pair_file, graph_file, fixture, out_file;
  std::string format = "table";
  std::size_t threads = 1;
};

struct Output {
  Format format;
  std::ostringstream text;
};

Format parse_format(const std::string& f) {
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  return Format::Table;
}

ChipFiringPair load_input(const Options& o) {
  const int given = !o.pair_file.empty() + !o.graph_file.empty() + !o.fixture.empty();
  if (given != 1) throw InvalidInput("give exactly one of --pair, --graph or --fixture");
  if (!o.fixture.empty()) return reference::fixture(o.fixture);
  if (!o.graph_file.empty()) return reduced_laplacians(load_graph(o.graph_file));
  return load_pair(o.pair_file);
}

// Raw matrices, without requiring a valid pair.
ReducedLaplacians load_matrices(const Options& o) {
  if (!o.fixture.empty()) {
    const ChipFiringPair p = reference::fixture(o.fixture);
    return {p.L(), p.M().matrix()};
  }
  const std::string path = !o.graph_file.empty() ? o.graph_file : o.pair_file;
  if (path.empty()) throw InvalidInput("give one of --pair, --graph or --fixture");
  const std::string text = read_file(path);
  if (text.find_first_not_of(" \t\r\n") != std::string::npos &&
      text[text.find_first_not_of(" \t\r\n")] == '{') {
    const json j = json::parse(text);
    if (j.contains("edges")) return reduced_laplacian_matrices(graph_from_json(j));
    return {int_matrix_from_json(j.at("L")), int_matrix_from_json(j.at("M"))};
  }
  return reduced_laplacian_matrices(SignedGraph::parse(text));
}

void emit(Output& out, const TextTable& t) {
  out.text << (out.format == Format::Csv ? t.csv() : t.render());
}

void emit(Output& out, const json& j) { out.text << j.dump(2) << '\n'; }

std::vector<std::string> triple(const PairConfiguration& c) {
  return {to_string(c.config), to_string(c.preimage), to_string(c.floor)};
}

int cmd_check_mmatrix(const Options& o, Output& out) {
  const ReducedLaplacians r = load_matrices(o);
  const bool m_ok = is_m_matrix(r.M);
  const Integer det_l = determinant(r.L), det_m = determinant(r.M);
  if (out.format == Format::Json) {
    emit(out, json{{"M_is_m_matrix", m_ok}, {"L_is_m_matrix", is_m_matrix(r.L)},
                   {"det_M", to_json(det_m)}, {"det_L", to_json(det_l)}});
  } else {
    TextTable t{{"matrix", "M-matrix", "det"}, {}};
    t.add({"M", m_ok ? "yes" : "no", to_string(det_m)});
    t.add({"L", is_m_matrix(r.L) ? "yes" : "no", to_string(det_l)});
    emit(out, t);
  }
  return m_ok ? 0 : 1;
}

int cmd_show_pair(const Options& o, Output& out) {
  const ChipFiringPair p = load_input(o);
  if (out.format == Format::Json) {
    emit(out, json{{"L", to_json(p.L())},
                   {"M", to_json(p.M().matrix())},
                   {"LM^-1", to_json(p.l_m_inv())},
                   {"ML^-1", to_json(p.m_l_inv())},
                   {"det_L", to_json(p.det_l())},
                   {"det_M", to_json(p.det_m())},
                   {"c_max", to_json(p.M().c_max())}});
    return 0;
  }
  if (out.format == Format::Csv) {
    TextTable t{{"quantity", "value"}, {}};
    t.add({"det_L", to_string(p.det_l())});
    t.add({"det_M", to_string(p.det_m())});
    t.add({"c_max", to_string(p.M().c_max())});
    emit(out, t);
    return 0;
  }
  out.text << "L =\n" << render_matrix(p.L()) << "M =\n" << render_matrix(p.M().matrix())
           << "L M^-1 =\n" << render_matrix(p.l_m_inv()) << "M L^-1 =\n" << render_matrix(p.m_l_inv())
           << "det L = " << to_string(p.det_l()) << "\ndet M = " << to_string(p.det_m())
           << "\nc_max = " << to_string(p.M().c_max()) << '\n';
  return 0;
}

int cmd_enumerate(const Options& o, Output& out, const std::string& kind, bool preimages) {
  const ChipFiringPair p = load_input(o);
  const bool sst = kind == "superstable";
  const auto& primary = sst ? p.superstables() : p.criticals();
  if (out.format == Format::Json) {
    json list = json::array();
    for (const auto& c : primary)
      list.push_back(preimages ? to_json(c) : to_json(c.config));
    emit(out, list);
    return 0;
  }
  if (!preimages) {
    TextTable t{{sst ? "Superstables" : "Criticals"}, {}};
    for (const auto& c : primary) t.add({to_string(c.config)});
    emit(out, t);
    return 0;
  }
  const std::vector<std::string> ss_head = {"LM^-1(sstab)", "sstab", "floor(sstab)"};
  const std::vector<std::string> cr_head = {"LM^-1(crit)", "crit", "floor(crit)"};
  TextTable t;
  t.header = sst ? ss_head : cr_head;
  t.header.insert(t.header.end(), (sst ? cr_head : ss_head).begin(), (sst ? cr_head : ss_head).end());
  for (const auto& c : primary) {
    const Preimage partner = sst ? duality(p, c.preimage) : duality_inverse(p, c.preimage);
    const auto slot = sst ? p.find_critical(partner) : p.find_superstable(partner);
    const PairConfiguration& q = sst ? p.criticals()[*slot] : p.superstables()[*slot];
    auto row = triple(c);
    auto rest = triple(q);
    row.insert(row.end(), rest.begin(), rest.end());
    t.add(row);
  }
  emit(out, t);
  return 0;
}

int cmd_duality(const Options& o, Output& out, bool show_mu, bool inverse) {
  const ChipFiringPair p = load_input(o);
  std::vector<DualityRecord> table = duality_table(p);
  if (inverse) {
    // critical order; every entry goes back through the inverse map
    std::vector<DualityRecord> inv;
    for (const auto& c : p.criticals()) {
      const auto slot = p.find_superstable(duality_inverse(p, c.preimage));
      if (!slot) throw VerificationFailure("inverse image of " + to_string(c.preimage) + " is not superstable");
      const PairConfiguration& s = p.superstables()[*slot];
      inv.push_back({s, c, mu_case(p, s.floor)});
    }
    table = std::move(inv);
  }
  if (out.format == Format::Json) {
    json list = json::array();
    for (const auto& r : table) list.push_back(to_json(r));
    emit(out, list);
    return 0;
  }
  TextTable t;
  t.header = inverse ? std::vector<std::string>{"Criticals", "Superstables"}
                     : std::vector<std::string>{"Superstables", "Criticals"};
  if (show_mu) t.header.push_back("mu");
  for (const auto& r : table) {
    std::vector<std::string> row = {to_string(r.superstable.config), to_string(r.critical.config)};
    if (inverse) std::swap(row[0], row[1]);
    if (show_mu) row.push_back(to_string(r.mu_case));
    t.add(row);
  }
  emit(out, t);
  return 0;
}

int cmd_fixed_points(const Options& o, Output& out, bool predict) {
  const ChipFiringPair p = load_input(o);
  const auto points = fixed_points(p);
  std::optional<FixedPointPrediction> fp;
  if (predict) fp = predicted_fixed_point_count(p);
  if (out.format == Format::Json) {
    json j{{"fixed_points", json::array()}};
    for (const auto& s : points) j["fixed_points"].push_back(to_json(s));
    if (fp) {
      j["actual"] = to_json(fp->actual);
      j["predicted"] = to_json(fp->predicted);
      j["zero_fracket_order"] = to_json(fp->zero_fracket_order);
      j["order_le2_count"] = to_json(fp->order_le2_count);
      j["consistent"] = fp->consistent();
    }
    emit(out, j);
  } else {
    TextTable t{{"fixed points of mu"}, {}};
    for (const auto& s : points) t.add({to_string(s)});
    emit(out, t);
    if (fp && out.format == Format::Table)
      out.text << "actual=" << fp->actual << " predicted=" << fp->predicted
               << " (|F_0^M|=" << fp->zero_fracket_order << ", d=" << fp->order_le2_count << ")\n";
  }
  return fp && !fp->consistent() ? 1 : 0;
}

int cmd_frackets(const Options& o, Output& out, const std::string& side, bool verify) {
  const ChipFiringPair p = load_input(o);
  if (verify) {
    const LargestFactorReport lf = verify_largest_invariant_factor(p);
    const SizeFormulaReport sf = zero_fracket_size_formula(p);
    const CyclicShortcut cl = cyclic_shortcut(p, Side::L), cm = cyclic_shortcut(p, Side::M);
    const bool ok = lf.holds() && sf.holds() && cl.biconditional_holds() && cm.biconditional_holds();
    if (out.format == Format::Json) {
      emit(out, json{{"largest_invariant_factor",
                      {{"L", to_json(lf.l_largest_factor)}, {"flcm_ML^-1", to_json(lf.l_flcm)},
                       {"M", to_json(lf.m_largest_factor)}, {"flcm_LM^-1", to_json(lf.m_flcm)},
                       {"holds", lf.holds()}}},
                     {"size_formula",
                      {{"predicted", to_json(sf.predicted)}, {"actual_L", to_json(sf.actual_l)},
                       {"actual_M", to_json(sf.actual_m)}, {"holds", sf.holds()}}},
                     {"cyclic_shortcut",
                      {{"L", {{"cyclic", cl.cyclic}, {"gcd", to_json(cl.gcd_value)}, {"holds", cl.biconditional_holds()}}},
                       {"M", {{"cyclic", cm.cyclic}, {"gcd", to_json(cm.gcd_value)}, {"holds", cm.biconditional_holds()}}}}},
                     {"passed", ok}});
    } else {
      TextTable t{{"check", "computed", "expected", "result"}, {}};
      auto mark = [](bool b) { return std::string(b ? "ok" : "FAILED"); };
      t.add({"largest factor K(L)/F_0^L", to_string(lf.l_largest_factor), "flcm(ML^-1) = " + to_string(lf.l_flcm),
             mark(lf.l_largest_factor == lf.l_flcm)});
      t.add({"largest factor K(M)/F_0^M", to_string(lf.m_largest_factor), "flcm(LM^-1) = " + to_string(lf.m_flcm),
             mark(lf.m_largest_factor == lf.m_flcm)});
      t.add({"|F_0|", to_string(sf.actual_l) + " / " + to_string(sf.actual_m), "formula " + to_string(sf.predicted),
             mark(sf.holds())});
      t.add({"cyclic shortcut (L side)", cl.cyclic ? "cyclic" : "not cyclic", "gcd " + to_string(cl.gcd_value),
             mark(cl.biconditional_holds())});
      t.add({"cyclic shortcut (M side)", cm.cyclic ? "cyclic" : "not cyclic", "gcd " + to_string(cm.gcd_value),
             mark(cm.biconditional_holds())});
      emit(out, t);
    }
    return ok ? 0 : 1;
  }

  std::vector<Side> sides;
  if (side.empty() || side == "L") sides.push_back(Side::L);
  if (side.empty() || side == "M") sides.push_back(Side::M);
  if (out.format == Format::Json) {
    if (sides.size() == 1) {
      emit(out, fracket_report(p, sides[0]));
    } else {
      emit(out, json::array({fracket_report(p, Side::L), fracket_report(p, Side::M)}));
    }
    return 0;
  }
  std::vector<FracketPartition> parts;
  for (Side s : sides) parts.push_back(fracket_partition(p, s));
  TextTable t;
  std::size_t rows = 0;
  for (const auto& part : parts) {
    t.header.push_back(to_string(part.side) + "-Frackets");
    t.header.push_back("size");
    rows = std::max(rows, part.frackets.size());
  }
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<std::string> row;
    for (const auto& part : parts) {
      if (i < part.frackets.size()) {
        row.push_back(to_string(part.frackets[i].key));
        row.push_back(std::to_string(part.frackets[i].classes.size()));
      } else {
        row.insert(row.end(), {"", ""});
      }
    }
    t.add(row);
  }
  emit(out, t);
  if (out.format == Format::Table)
    for (Side s : sides)
      out.text << "K(" << to_string(s) << ")/F_0 = " << fracket_quotient(p, s).to_string()
               << ", |F_0| = " << zero_fracket_order(p, s) << '\n';
  return 0;
}

int cmd_group(const Options& o, Output& out) {
  const ChipFiringPair p = load_input(o);
  const AbelianGroup gl = p.l_classes().group(), gm = p.M().classes().group();
  if (out.format == Format::Json) {
    emit(out, json{{"L", {{"invariant_factors", to_json(gl)}, {"group", gl.to_string()}}},
                   {"M", {{"invariant_factors", to_json(gm)}, {"group", gm.to_string()}}}});
    return 0;
  }
  TextTable t{{"matrix", "critical group", "order"}, {}};
  t.add({"L", gl.to_string(), to_string(gl.order())});
  t.add({"M", gm.to_string(), to_string(gm.order())});
  emit(out, t);
  return 0;
}

int cmd_family_scan(const Options& o, Output& out, const std::string& kind_name, std::size_t n,
                    const std::string& verify) {
  const GraphFamily kind = parse_family(kind_name);
  const Sweep s = sweep(kind, n, o.threads);
  if (verify.empty()) {
    if (out.format == Format::Json) {
      json list = json::array();
      for (const auto& e : s.entries)
        list.push_back({{"pattern", e.pattern}, {"det_L", to_json(e.pair.det_l())},
                        {"group", to_json(e.pair.l_classes().group())}});
      emit(out, json{{"kind", kind_name}, {"n", n}, {"pairs", list}, {"singular", s.singular}});
    } else {
      TextTable t{{"pattern", "det L", "K(L)"}, {}};
      for (const auto& e : s.entries)
        t.add({std::to_string(e.pattern), to_string(e.pair.det_l()), e.pair.l_classes().group().to_string()});
      for (auto pat : s.singular) t.add({std::to_string(pat), "0", "singular"});
      emit(out, t);
    }
    return 0;
  }
  if (verify == "half-n") {
    if (kind != GraphFamily::Complete) throw InvalidInput("--verify half-n needs --kind complete");
    const HalfNReport r = verify_half_n_integrality(n, o.threads);
    if (out.format == Format::Json)
      emit(out, json{{"n", n}, {"patterns_checked", r.patterns_checked}, {"failures", r.failures}, {"holds", r.holds()}});
    else
      out.text << "(n/2) L M^-1 integral on " << r.patterns_checked - r.failures.size() << "/"
               << r.patterns_checked << " patterns of K_" << n << '\n';
    return r.holds() ? 0 : 1;
  }
  if (verify == "z2-subgroup") {
    if (kind != GraphFamily::Complete) throw InvalidInput("--verify z2-subgroup needs --kind complete");
    TextTable t{{"pattern", "subgroup", "F_0^L", "result"}, {}};
    json list = json::array();
    bool all = true;
    for (const auto& e : s.entries) {
      const Z2SubgroupReport z = kn_z2_subgroup(e.pair, n);
      all = all && z.holds();
      t.add({std::to_string(e.pattern), z.subgroup.to_string(), z.zero_fracket.to_string(), z.holds() ? "ok" : "FAILED"});
      list.push_back({{"pattern", e.pattern}, {"subgroup", to_json(z.subgroup)},
                      {"zero_fracket", to_json(z.zero_fracket)}, {"holds", z.holds()}});
    }
    if (out.format == Format::Json)
      emit(out, json{{"n", n}, {"patterns", list}, {"holds", all}});
    else
      emit(out, t);
    return all ? 0 : 1;
  }
  if (verify == "critical-groups") {
    const CriticalGroupScan scan = scan_critical_groups(s, o.threads);
    if (out.format == Format::Json) {
      json groups = json::array();
      for (const auto& g : scan.groups) groups.push_back(to_json(g));
      emit(out, json{{"groups", groups},
                     {"count", scan.groups.size()},
                     {"patterns_without_z2", scan.patterns_without_z2},
                     {"zero_frackets_without_z2", scan.zero_frackets_without_z2},
                     {"certificate", scan.certificate_holds()}});
    } else {
      TextTable t{{"critical group", "order"}, {}};
      for (const auto& g : scan.groups) t.add({g.to_string(), to_string(g.order())});
      emit(out, t);
      if (out.format == Format::Table) {
        out.text << scan.groups.size() << " groups over " << s.entries.size() << " patterns";
        if (kind == GraphFamily::Complete)
          out.text << "; Z_2^" << n - 2 << " in every K(L) and F_0^L: "
                   << (scan.certificate_holds() ? "yes" : "no");
        out.text << '\n';
      }
    }
    return scan.certificate_holds() ? 0 : 1;
  }
  throw InvalidInput("unknown --verify value '" + verify + "'");
}

int cmd_acceptance(const Options& o, Output& out) {
  const auto results = run_all_criteria(o.threads);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (out.format == Format::Json) {
    json list = json::array();
    for (const auto& r : results)
      list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds},
                      {"limit_seconds", r.limit_seconds}, {"detail", r.detail}});
    emit(out, json{{"criteria", list}, {"passed", ok}});
  } else {
    TextTable t{{"#", "criterion", "result", "seconds", "detail"}, {}};
    for (const auto& r : results) {
      char secs[32];
      std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
      t.add({std::to_string(r.id), r.name, r.passed ? "PASS" : "FAIL", secs, r.detail});
    }
    emit(out, t);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chip-firing pairs: superstable / critical enumeration, duality and fracket analysis"};
  app.footer(kFormats);
  app.require_subcommand(1);

  Options o;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--pair", o.pair_file, "pair JSON file (or graph file)");
    sub->add_option("--graph", o.graph_file, "signed graph, edge list or JSON");
    sub->add_option("--fixture", o.fixture, "built-in fixture: run3, run3-unsigned, c6");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", o.out_file, "write to this file instead of stdout");
    sub->add_option("--threads", o.threads, "worker threads for sweeps (0 = all cores)")
        ->capture_default_str();
  };

  auto* check_mm = app.add_subcommand("check-mmatrix", "test whether M (and L) are M-matrices");
  add_input(check_mm);
  add_common(check_mm);

  auto* show = app.add_subcommand("show-pair", "print L, M, L M^-1, M L^-1, determinants and c_max");
  add_input(show);
  add_common(show);

  std::string kind = "superstable";
  bool preimages = false;
  auto* enumerate = app.add_subcommand("enumerate", "superstable or critical configurations of the pair");
  add_input(enumerate);
  add_common(enumerate);
  enumerate->add_option("--kind", kind)->check(CLI::IsMember({"superstable", "critical"}))->capture_default_str();
  enumerate->add_flag("--preimages", preimages, "show preimages, floors and the dual configuration");

  bool show_mu = false, inverse = false;
  auto* dual = app.add_subcommand("duality", "superstable / critical pairing under the duality map");
  add_input(dual);
  add_common(dual);
  dual->add_flag("--show-mu-cases", show_mu, "add the involution branch taken on each row");
  dual->add_flag("--inverse", inverse, "list criticals with their inverse images");

  bool predict = false;
  auto* fixed = app.add_subcommand("fixed-points", "fixed points of the involution mu");
  add_input(fixed);
  add_common(fixed);
  fixed->add_flag("--predict", predict, "compare with |F_0^M| times the number of order <= 2 elements");

  std::string side;
  bool verify_frackets = false;
  auto* frk = app.add_subcommand("frackets", "fracket partition of K(L) and K(M)");
  add_input(frk);
  add_common(frk);
  frk->add_option("--side", side, "L or M (default: both)")->check(CLI::IsMember({"L", "M"}));
  frk->add_flag("--verify", verify_frackets, "largest-invariant-factor, size-formula and cyclic-shortcut checks");

  auto* group = app.add_subcommand("group", "invariant factors of K(L) and K(M)");
  add_input(group);
  add_common(group);

  std::string family_kind;
  std::size_t family_n = 0;
  std::string family_verify;
  auto* scan = app.add_subcommand("family-scan", "sweep every sign pattern of K_n or C_n (sink n-1)");
  add_common(scan);
  scan->add_option("--kind", family_kind)->required()->check(CLI::IsMember({"complete", "cycle"}));
  scan->add_option("--n", family_n)->required()->check(CLI::Range(3, 12));
  scan->add_option("--verify", family_verify)
      ->check(CLI::IsMember({"half-n", "z2-subgroup", "critical-groups"}));

  auto* accept = app.add_subcommand("paper-check", "run every acceptance criterion and print a pass/fail matrix");
  accept->alias("acceptance");
  add_common(accept);

  CLI11_PARSE(app, argc, argv);

  Output out{parse_format(o.format), {}};
  int status = 0;
  try {
    if (*check_mm) status = cmd_check_mmatrix(o, out);
    else if (*show) status = cmd_show_pair(o, out);
    else if (*enumerate) status = cmd_enumerate(o, out, kind, preimages);
    else if (*dual) status = cmd_duality(o, out, show_mu, inverse);
    else if (*fixed) status = cmd_fixed_points(o, out, predict);
    else if (*frk) status = cmd_frackets(o, out, side, verify_frackets);
    else if (*group) status = cmd_group(o, out);
    else if (*scan) status = cmd_family_scan(o, out, family_kind, family_n, family_verify);
    else if (*accept) status = cmd_acceptance(o, out);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (o.out_file.empty()) {
    std::cout << out.text.str();
  } else {
    std::ofstream f(o.out_file, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << o.out_file << '\n';
      return 2;
    }
    f << out.text.str();
  }
  return status;
}

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pearl/arith.hpp"
#include "pearl/checks.hpp"
#include "pearl/enumerate.hpp"
#include "pearl/invariants.hpp"
#include "pearl/mult.hpp"
#include "pearl/qpoly.hpp"

namespace {

using nlohmann::json;
using namespace pearl;

json laurent_json(const HalfLaurent& p) {
  json obj = json::object();
  for (const auto& [e, c] : p.terms()) obj[std::to_string(e)] = c.str();
  return obj;
}

json value_json(const InvariantValue& v) {
  if (v.is_refined()) return laurent_json(v.refined());
  return v.classical().str();
}

InvariantName parse_name(const std::string& s) {
  if (s == "M") return InvariantName::M;
  if (s == "N") return InvariantName::N;
  if (s == "Nprim") return InvariantName::Nprim;
  if (s == "BG") return InvariantName::BG;
  if (s == "R") return InvariantName::R;
  throw CLI::ValidationError("--name", "expected one of M|N|Nprim|BG|R");
}

/// The cover-formula route. Nprim and the a = 1 classes reduce to the
/// primitive class of the same square.
InvariantValue invariant_by_cover(const InvariantQuery& q) {
  if (q.name == InvariantName::Nprim)
    return {q, primitive_closed_classical(q.genus, q.d1 * q.d2, q.kind)};
  if (q.a == 1) {
    if (q.name == InvariantName::BG)
      return {q, primitive_closed_refined(q.genus, q.d1 * q.d2, q.kind)};
    return {q, primitive_closed_classical(q.genus, q.d1 * q.d2, q.kind)};
  }
  if (q.a != 0)
    throw CLI::ValidationError("--via", "no closed route for a >= 2; use --via diagrams");
  return multiple_cover(q.genus, q.d1, q.d2, q.name, q.kind);
}

struct Output {
  std::string text;
  std::optional<std::string> path;

  int emit() const {
    if (path) {
      std::ofstream f(*path, std::ios::binary);
      if (!f) {
        std::cerr << "cannot open " << *path << "\n";
        return 2;
      }
      f << text;
      return 0;
    }
    std::cout << text;
    return 0;
  }
};

int run_invariant(const InvariantQuery& q, const std::string& via, const std::string& format,
                  Output& out) {
  std::optional<InvariantValue> via_diagrams, via_cover;
  if (via == "diagrams" || via == "both") via_diagrams = invariant_by_diagrams(q);
  if (via == "cover" || via == "both") via_cover = invariant_by_cover(q);
  const bool match = !via_diagrams || !via_cover || *via_diagrams == *via_cover;

  std::ostringstream text;
  if (format == "json") {
    json j;
    j["query"] = {{"name", invariant_name_string(q.name)}, {"genus", q.genus},
                  {"d1", q.d1},     {"d2", q.d2},
                  {"a", q.a},       {"kind", kind_name(q.kind)}};
    if (via_diagrams) j["diagrams"] = value_json(*via_diagrams);
    if (via_cover) j["cover"] = value_json(*via_cover);
    if (via == "both") j["match"] = match;
    text << j.dump(2) << "\n";
  } else if (format == "csv") {
    text << "name,genus,d1,d2,a,kind,via,value\n";
    auto row = [&](const char* route, const InvariantValue& v) {
      text << invariant_name_string(q.name) << "," << q.genus << "," << q.d1 << "," << q.d2 << ","
           << q.a << "," << kind_name(q.kind) << "," << route << ",\"" << v.to_string() << "\"\n";
    };
    if (via_diagrams) row("diagrams", *via_diagrams);
    if (via_cover) row("cover", *via_cover);
  } else {
    if (via == "both") {
      text << "diagrams: " << via_diagrams->to_string() << "\n";
      text << "cover:    " << via_cover->to_string() << "\n";
      text << "verdict:  " << (match ? "MATCH" : "MISMATCH") << "\n";
    } else {
      text << (via_diagrams ? via_diagrams->to_string() : via_cover->to_string()) << "\n";
    }
  }
  out.text = text.str();
  const int rc = out.emit();
  if (rc != 0) return rc;
  if (!match) {
    std::cerr << "mismatch: diagrams " << via_diagrams->to_string() << " != cover "
              << via_cover->to_string() << "\n";
    return 1;
  }
  return 0;
}

json diagram_record(const Diagram& d, const std::string& mult_kind, std::int64_t a,
                    std::int64_t k) {
  json rec = to_json(d);
  if (mult_kind.empty()) return rec;
  json mv;
  if (mult_kind == "m0") mv = m0(d).str();
  else if (mult_kind == "M0") mv = laurent_json(M0(d));
  else if (mult_kind == "ma") mv = m_a(d, a).str();
  else if (mult_kind == "Ma") mv = laurent_json(M_a(d, a));
  else if (mult_kind == "mu") mv = mu(d).str();
  else if (mult_kind == "mu1") mv = mu1(d).str();
  else if (mult_kind == "Upsilon") mv = laurent_json(Upsilon(d));
  else if (mult_kind == "Upsilon1") mv = laurent_json(Upsilon1(d));
  else if (mult_kind == "omega") mv = omega(d).str();
  else if (mult_kind == "Omega") mv = laurent_json(Omega(d));
  else if (mult_kind == "omega_k") mv = omega_k(d, k).str();
  else if (mult_kind == "Omega_k") mv = laurent_json(Omega_k(d, k));
  else throw CLI::ValidationError("--multiplicity", "unknown multiplicity kind " + mult_kind);
  rec["multiplicity"] = {{"kind", mult_kind}, {"value", mv}};
  return rec;
}

int run_diagrams(int genus, std::int64_t d1, std::int64_t d2, DiagramKind kind,
                 const std::string& mult_kind, std::int64_t a, std::int64_t k,
                 const std::string& format, Output& out) {
  const auto diagrams = enumerate_diagrams(genus, d1, d2, kind);
  std::ostringstream text;
  if (format == "csv") {
    text << "index,kind,genus,d1,d2,gcd,record\n";
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
      json rec = diagram_record(diagrams[i], mult_kind, a, k);
      std::string dump = rec.dump();
      std::string esc;
      for (char c : dump) {
        if (c == '"') esc += "\"\"";
        else esc += c;
      }
      text << i << "," << kind_name(kind) << "," << genus << "," << d1 << "," << d2 << ","
           << diagram_gcd(diagrams[i]) << ",\"" << esc << "\"\n";
    }
  } else if (format == "json") {
    json arr = json::array();
    for (const auto& d : diagrams) arr.push_back(diagram_record(d, mult_kind, a, k));
    text << arr.dump(2) << "\n";
  } else {
    for (const auto& d : diagrams) text << diagram_record(d, mult_kind, a, k).dump() << "\n";
  }
  out.text = text.str();
  return out.emit();
}

int run_series(int genus, std::int64_t d, DiagramKind kind, const std::string& which, int max_n,
               const std::string& format, Output& out) {
  SeriesPrefix s;
  if (which == "F") s = series_f(genus, d, max_n, kind);
  else if (which == "S") s = s_series_prefix(max_n);
  else if (which == "DG2") s = dg2_prefix(max_n);
  else if (which == "D2G2") s = d2g2_prefix(max_n);
  else throw CLI::ValidationError("--which", "expected one of F|S|DG2|D2G2");

  std::ostringstream text;
  if (format == "json") {
    json arr = json::array();
    for (int n = 1; n <= s.size(); ++n) {
      const HalfLaurent& c = s.at(n);
      json jc = c.terms().size() == 1 && c.terms().begin()->first == 0
                    ? json(c.terms().begin()->second.str())
                    : laurent_json(c);
      if (c.is_zero()) jc = "0";
      arr.push_back({{"n", n}, {"coefficient", jc}});
    }
    text << arr.dump(2) << "\n";
  } else if (format == "csv") {
    text << "n,coefficient\n";
    for (int n = 1; n <= s.size(); ++n) text << n << ",\"" << s.at(n).to_string() << "\"\n";
  } else {
    for (int n = 1; n <= s.size(); ++n) text << n << ": " << s.at(n).to_string() << "\n";
  }
  out.text = text.str();
  return out.emit();
}

int run_check(const std::vector<std::string>& suites, const CheckOptions& opts,
              const std::string& format, Output& out) {
  const auto results = run_checks(suites.empty() ? std::vector<std::string>{"all"} : suites, opts);
  std::ostringstream text;
  bool all_pass = true;
  std::string first_counterexample;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"suite", r.suite},
                     {"pass", r.pass},
                     {"report", r.report},
                     {"counterexample", r.counterexample}});
      if (!r.pass && first_counterexample.empty()) first_counterexample = r.counterexample;
      all_pass = all_pass && r.pass;
    }
    text << arr.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      text << "== " << r.suite << " ==\n" << r.report;
      text << r.suite << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
      if (!r.pass && first_counterexample.empty()) first_counterexample = r.counterexample;
      all_pass = all_pass && r.pass;
    }
  }
  out.text = text.str();
  const int rc = out.emit();
  if (rc != 0) return rc;
  if (!all_pass) {
    std::cerr << "first counterexample: " << first_counterexample << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pearl: tropical curve counts in abelian surfaces via pearl diagrams"};
  app.require_subcommand(1);

  int genus = 2;
  std::int64_t d1 = 1, d2 = 1, a = 0, k = 1, d = 1;
  bool fls = false;
  std::string name = "N", via = "cover", format = "text", which = "F";
  std::string mult_kind;
  int max_n = 8;
  std::optional<std::string> out_path;
  std::vector<std::string> suites;
  CheckOptions copts;

  auto add_common = [&](CLI::App* cmd, bool with_bidegree) {
    cmd->add_option("--genus", genus, "genus (>= 2)");
    if (with_bidegree) {
      cmd->add_option("--d1", d1, "first bidegree entry");
      cmd->add_option("--d2", d2, "second bidegree entry");
    }
    cmd->add_flag("--fls", fls, "fixed-linear-system variant");
    cmd->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  auto* inv = app.add_subcommand("invariant", "compute one invariant");
  add_common(inv, true);
  inv->add_option("--a", a, "off-diagonal entry of the class");
  inv->add_option("--name", name, "M|N|Nprim|BG|R");
  inv->add_option("--via", via, "diagrams|cover|both")
      ->check(CLI::IsMember({"diagrams", "cover", "both"}));

  auto* dia = app.add_subcommand("diagrams", "enumerate pearl diagrams");
  add_common(dia, true);
  dia->add_option("--multiplicity", mult_kind,
                  "per-diagram multiplicity: m0|M0|ma|Ma|mu|mu1|Upsilon|Upsilon1|omega|Omega|"
                  "omega_k|Omega_k");
  dia->add_option("--a", a, "off-diagonal entry for ma/Ma");
  dia->add_option("--k", k, "subscript for omega_k/Omega_k");

  auto* ser = app.add_subcommand("series", "generating-series prefixes");
  add_common(ser, false);
  ser->add_option("--d", d, "divisibility d for F_{g,d}");
  ser->add_option("--which", which, "F|S|DG2|D2G2");
  ser->add_option("--max-n", max_n, "number of coefficients");

  auto* chk = app.add_subcommand("check", "run cross-validation suites");
  int chk_genus = 0;
  std::int64_t chk_d = 0;
  int chk_max_n = 0;
  chk->add_option("suites", suites, "oracle|cover|primitive|specialize|quasimod|codegree|all");
  chk->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
  chk->add_option("--out", out_path, "write output to a file instead of stdout");
  chk->add_option("--genus", chk_genus, "restrict suites to one genus bound");
  chk->add_option("--d", chk_d, "quasimod suite: single divisor d (with --genus)");
  chk->add_option("--max-n", chk_max_n, "cap n for primitive/specialize/quasimod/codegree");
  chk->add_option("--oracle-genus", copts.oracle_max_genus, "oracle suite: max genus");
  chk->add_option("--oracle-d1d2", copts.oracle_max_d1d2, "oracle suite: max d1*d2");
  chk->add_option("--primitive-genus", copts.primitive_max_genus, "primitive suite: max genus");
  chk->add_option("--primitive-n", copts.primitive_max_n, "primitive suite: max n (point)");
  chk->add_option("--primitive-n-fls", copts.primitive_max_n_fls, "primitive suite: max n (fls)");
  chk->add_option("--specialize-genus", copts.specialize_max_genus, "specialize suite: max genus");
  chk->add_option("--specialize-n", copts.specialize_max_n, "specialize suite: max n");
  chk->add_option("--quasimod-n", copts.quasimod_max_n, "quasimod suite: max n");
  chk->add_option("--codegree-genus", copts.codegree_max_genus, "codegree suite: max genus");
  chk->add_option("--codegree-n", copts.codegree_max_n, "codegree suite: max n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Output out;
  out.path = out_path;
  const DiagramKind kind = fls ? DiagramKind::Fls : DiagramKind::Point;
  try {
    if (inv->parsed()) {
      InvariantQuery q{genus, d1, d2, a, kind, parse_name(name)};
      return run_invariant(q, via, format, out);
    }
    if (dia->parsed()) return run_diagrams(genus, d1, d2, kind, mult_kind, a, k, format, out);
    if (ser->parsed()) return run_series(genus, d, kind, which, max_n, format, out);
    if (chk->parsed()) {
      if (chk_genus > 0) {
        copts.oracle_max_genus = chk_genus;
        copts.primitive_max_genus = chk_genus;
        copts.specialize_max_genus = chk_genus;
        copts.codegree_max_genus = chk_genus;
        copts.quasimod_cases = {{chk_genus, chk_d > 0 ? chk_d : 2}};
      } else if (chk_d > 0) {
        copts.quasimod_cases = {{2, chk_d}};
      }
      if (chk_max_n > 0) {
        copts.primitive_max_n = chk_max_n;
        copts.primitive_max_n_fls = std::min(chk_max_n, copts.primitive_max_n_fls);
        copts.specialize_max_n = chk_max_n;
        copts.quasimod_max_n = chk_max_n;
        copts.codegree_max_n = chk_max_n;
      }
      return run_check(suites, copts, format, out);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

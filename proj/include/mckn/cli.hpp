#ifndef MCKN_CLI_HPP
#define MCKN_CLI_HPP

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "mckn/verify.hpp"

/// Command-line front end: exit 0 when computed or verified, 2 when a
/// condition check fails, 1 on usage or internal errors.
namespace mckn::cli {

inline const std::vector<std::string>& chartab_groups() {
  static const std::vector<std::string> g{"sz8", "psl2_8", "su3_2", "su3_2_ext", "su3_3", "agl1_8", "agl18"};
  return g;
}

inline Group named_group(const std::string& tag) {
  if (tag == "sz8") return suzuki_group(1).group;
  if (tag == "agl18") return agl18_normalizer();
  if (tag == "agl1_8") return affine_group_f8(false);
  for (const auto& t : small_group_tags())
    if (t == tag) return small_group(tag).group;
  std::string known;
  for (const auto& t : chartab_groups()) known += (known.empty() ? "" : ", ") + t;
  throw UnknownTarget("unknown group '" + tag + "'; known: " + known);
}

inline std::string table_text(const CharacterTable& t) {
  std::ostringstream os;
  os << t.name << "  |G| = " << t.order() << "  classes = " << t.num_classes() << "\n";
  os << "sizes:";
  for (auto s : t.classes.sizes) os << " " << s;
  os << "\norders:";
  for (auto o : t.classes.element_orders) os << " " << o;
  os << "\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << "X." << r + 1 << ":";
    for (const auto& v : t.rows[r].values) os << "  " << v;
    os << "\n";
  }
  return os.str();
}

inline std::string report_text(const VerificationReport& r) {
  auto b = [](const std::optional<bool>& x) { return x ? (*x ? "true" : "false") : "n/a"; };
  std::ostringstream os;
  os << r.target.label << "  p = " << r.target.p << "  [" << scope_name(r.target.scope) << "]\n";
  if (!r.target.note.empty()) os << "note: " << r.target.note << "\n";
  os << "p'-rows: global " << (r.count_global ? std::to_string(*r.count_global) : "n/a") << ", local " << r.count_local;
  if (r.count_model) os << ", model " << *r.count_model;
  os << "\n";
  for (auto [g, l] : r.bijection) os << "  global " << g << " <-> local " << l << "\n";
  if (!r.failure.empty()) os << "failure: " << r.failure << "\n";
  int witnesses = 0;
  for (const auto& e : r.extensions) witnesses += e.invariant;
  os << "extension witnesses: " << witnesses << "/" << r.extensions.size() << "\n";
  os << "part1: " << b(r.part1) << "  part2: " << b(r.part2) << "\n";
  return os.str();
}

/// Runs the tool; all output goes to `out` (or --out), diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks of the inductive McKay-Navarro condition on small Suzuki and Ree groups"};
  app.require_subcommand(1);
  std::string format = "json", out_path, family, group;
  long f = 1, p = 0, f_min = 1, f_max = 8;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out_path, "write the result to a file");
  };
  auto target = [&](CLI::App* sub, bool need_p) {
    sub->add_option("--family", family, "2B2, 2G2 or 2F4")->required();
    sub->add_option("--f", f, "q^2 = 2^(2f+1) or 3^(2f+1)")->required();
    auto* o = sub->add_option("--p", p, "prime");
    if (need_p) o->required();
  };
  auto* chartab = app.add_subcommand("chartab", "character table of a named group");
  chartab->add_option("--group", group, "group tag")->required();
  common(chartab);
  auto* verify = app.add_subcommand("verify", "both condition parts for one target");
  target(verify, true);
  common(verify);
  auto* lemma = app.add_subcommand("lemma32", "congruences of prime factors of torus orders");
  lemma->add_option("--f-min", f_min)->default_val(1);
  lemma->add_option("--f-max", f_max)->default_val(8);
  common(lemma);
  auto* local = app.add_subcommand("local-model", "torus normalizer model and its Clifford labels");
  target(local, true);
  common(local);
  auto* cross = app.add_subcommand("cross-check", "normalizer table against the local model");
  target(cross, true);
  common(cross);
  auto* list = app.add_subcommand("list-targets", "supported (family, f, p) grid");
  common(list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Json doc;
  std::string text;
  int code = 0;
  try {
    if (*chartab) {
      Group G = named_group(group);
      Table t = dixon_schneider(G);
      doc = to_json(*t);
      text = table_text(*t);
    } else if (*verify) {
      TargetInfo info = classify_target(family, f, p);
      if (info.scope == Scope::OutOfScope) {
        doc = Json{{"status", "out-of-scope"}, {"target", info.label}, {"family", family}, {"f", f}, {"p", p},
                   {"reason", info.note}};
        text = info.label + ": out of scope (" + info.note + ")\n";
        code = 1;
      } else {
        VerificationReport r = verify_target(family, f, p);
        doc = r.to_json();
        text = report_text(r);
        code = r.failed() ? 2 : 0;
      }
    } else if (*lemma) {
      Lemma32Report r = lemma32_check(f_min, f_max);
      doc = r.to_json();
      std::ostringstream os;
      for (const auto& e : r.entries) {
        os << "f=" << e.f << " " << e.name << " = " << e.value << " odd primes:";
        for (auto q : e.odd_primes) os << " " << q;
        os << (e.ok ? "  ok" : "  FAIL") << "\n";
      }
      os << "identities: " << (r.identities_ok ? "ok" : "FAIL") << "\n";
      text = os.str();
      code = r.ok() ? 0 : 2;
    } else if (*local) {
      TorusModel m = torus_normalizer(family, f, p);
      Table t = dixon_schneider(m.group);
      auto labels = clifford_label(m, *t);
      Json ls = Json::array();
      std::ostringstream os;
      os << family << " f=" << f << " p=" << p << " row " << m.spec.row << ": T =";
      for (long n : m.spec.moduli) os << " Z" << n;
      os << ", W = " << m.spec.complement << ", |N| = " << m.group->order() << "\n";
      for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto& l = labels[i];
        ls.push_back({{"row", i}, {"degree", t->degree(i)}, {"orbit_rep", l.orbit_rep}, {"orbit_size", l.orbit_size},
                      {"eta_index", l.eta_index}, {"eta_degree", l.eta_degree}});
        os << "  row " << i << " degree " << t->degree(i) << ": orbit of " << l.orbit_rep << " (size " << l.orbit_size
           << "), eta " << l.eta_index << " of degree " << l.eta_degree << "\n";
      }
      doc = Json{{"family", family},
                 {"f", f},
                 {"p", p},
                 {"row", m.spec.row},
                 {"moduli", m.spec.moduli},
                 {"complement", m.spec.complement},
                 {"order", m.group->order()},
                 {"labels", ls},
                 {"table", to_json(*t)}};
      text = os.str();
    } else if (*cross) {
      bool ok = cross_model_check(family, f, p);
      doc = Json{{"family", family}, {"f", f}, {"p", p}, {"equivalent", ok}};
      text = std::string("tables equivalent: ") + (ok ? "true" : "false") + "\n";
      code = ok ? 0 : 2;
    } else if (*list) {
      doc = Json::array();
      std::ostringstream os;
      for (const auto& t : list_targets()) {
        doc.push_back({{"family", t.family}, {"f", t.f}, {"p", t.p}, {"label", t.label},
                       {"scope", scope_name(t.scope)}, {"note", t.note}});
        os << t.family << " f=" << t.f << " p=" << t.p << "  " << t.label << "  " << scope_name(t.scope);
        if (!t.note.empty()) os << "  (" << t.note << ")";
        os << "\n";
      }
      text = os.str();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  std::string payload = format == "json" ? doc.dump(2) + "\n" : text;
  if (out_path.empty()) {
    out << payload;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return 1;
    }
    file << payload;
  }
  return code;
}

}  // namespace mckn::cli

#endif  // MCKN_CLI_HPP

#pragma once

// Command-line front end. run() never exits the process: it returns
//   0  success / holds / verified
//   1  fails / counterexample (the witness goes to `out`)
//   2  usage or input error (diagnostics go to `err`)

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sectional/axioms.hpp"
#include "sectional/document.hpp"
#include "sectional/enumeration.hpp"
#include "sectional/extensions.hpp"
#include "sectional/pseudocomplements.hpp"

namespace sectional::cli {

/// Element cap for parsed posets; SECTIONAL_MAX_ELEMENTS overrides the
/// default of 16 (never above 64).
inline std::size_t element_cap() {
  if (const char* env = std::getenv("SECTIONAL_MAX_ELEMENTS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::min<std::size_t>(v, kHardElementLimit);
  }
  return kDefaultElementCap;
}

inline const std::vector<std::string>& extend_methods() {
  static const std::vector<std::string> m{"pure", "natural", "natural-min", "normal", "i-natural", "i-min", "dual-j",
                                          "m",    "mlb",     "rp",          "clp",    "lower-min"};
  return m;
}

namespace detail {

struct Exit {
  int code;
};

inline Document load(const std::string& path) { return load_document(path, element_cap()); }

inline LocalSelection resolve_selection(const Document* doc, const Poset& p, const std::string& name) {
  if (name == "union") return selection_union(p);
  if (name == "frink") return selection_frink(p);
  if (!doc) throw Error(ErrorKind::Reference, "no selection named '" + name + "'");
  const auto& s = doc->selection(name);
  if (!s.selection.poset().same_order(p) || s.over != p.name())
    throw Error(ErrorKind::Reference, "selection '" + name + "' is over '" + s.over + "', not '" + p.name() + "'");
  return s.selection;
}

inline std::string witness_text(const Poset& p, const Violation& v) {
  return v.axiom + " fails at " + format_tuple(p, v.witness);
}

inline void print_report(std::ostream& out, const Poset& p, const Report& r) {
  for (const auto& [item, why] : r.skipped) out << r.name << " " << item << ": skipped (" << why << ")\n";
  for (const auto& item : r.checked) {
    auto it = std::find_if(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.axiom == item; });
    if (it == r.violations.end()) out << r.name << " " << item << ": holds\n";
    else out << r.name << " " << item << ": fails at " << format_tuple(p, it->witness) << "\n";
  }
  out << r.name << ": " << (r.holds() ? "holds" : "fails") << "\n";
}

inline void print_verification(std::ostream& out, const VerificationReport& r) {
  out << r.id << " up to n = " << r.max_n << " (" << (r.dedup == Dedup::labeled ? "labeled" : "up to isomorphism")
      << ")\n";
  auto levels = [&](const std::vector<LevelStats>& ls, const char* indent) {
    for (const auto& l : ls)
      out << indent << "n = " << l.n << ": " << l.posets_enumerated << " posets, " << l.posets_in_class
          << " in class, " << l.instances << " instances" << (l.complete ? "" : ", stopped") << "\n";
  };
  auto outcome = [&](bool verified, const std::optional<Counterexample>& ce, const char* indent) {
    if (verified) out << indent << "outcome: verified\n";
    else if (ce) {
      out << indent << "outcome: counterexample at n = " << ce->n << " (poset #" << ce->index << ")\n";
      out << indent << "witness: " << ce->witness << "\n";
    } else
      out << indent << "outcome: incomplete\n";
  };
  if (r.variants.empty()) {
    levels(r.levels, "  ");
    outcome(r.verified, r.counterexample, "");
  } else {
    for (const auto& v : r.variants) {
      out << "variant: " << v.name << "\n";
      levels(v.levels, "  ");
      outcome(v.verified, v.counterexample, "  ");
    }
    outcome(r.verified, r.counterexample, "");
  }
  out << "elapsed: " << std::fixed << std::setprecision(3) << r.elapsed_seconds << " s\n";
  if (r.counterexample) out << "\n" << r.counterexample->instance;
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline void flag_line(std::ostream& out, const Poset& p, const char* name, const StructureFlag& f) {
  out << name << ": " << yes_no(f.value);
  if (!f.value && f.witness) out << " (" << p.label(f.witness->first) << ", " << p.label(f.witness->second) << ")";
  out << "\n";
}

// The star table an extension starts from: a named partial table from the
// file, or the sp table of the poset.
inline PartialTable base_table(const Document& doc, const Poset& p, const std::string& table, std::ostream& out) {
  if (!table.empty()) {
    const auto& t = doc.table(table);
    if (t.over != p.name()) throw Error(ErrorKind::Reference, "table '" + table + "' is not over '" + p.name() + "'");
    if (t.kind() != TableKind::partial) throw Error(ErrorKind::StructureMismatch, "table '" + table + "' is not a star table");
    return std::get<PartialTable>(t.table);
  }
  auto star = star_table(p);
  if (!star) {
    out << describe(p, *star.missing) << "\n";
    throw Exit{1};
  }
  return *star.table;
}

inline int emit_result(std::ostream& out, const PosetSection& ps, const std::string& name, const ExtensionResult& r) {
  if (!r.table) {
    for (const auto& u : r.undefined_pairs) out << describe(ps.poset, u) << "\n";
    return 1;
  }
  Document d;
  d.add(ps);
  d.add_table(name, *r.table);
  out << emit(d);
  return 0;
}

inline int emit_result(std::ostream& out, const PosetSection& ps, const std::string& name, const TotalTable& t) {
  Document d;
  d.add(ps);
  d.add_table(name, t);
  out << emit(d);
  return 0;
}

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sectional pseudocomplementation on finite posets", "sectional"};
  app.require_subcommand(1);
  std::string file, poset, table, method, selection, system, suite, reading = "existential", notion = "sp", name,
                                                                       theorem, predicate;
  int max_n = 0;
  bool iso = false;

  auto* validate = app.add_subcommand("validate", "parse a file and list its sections");
  validate->add_option("file", file)->required();

  auto* analyze = app.add_subcommand("analyze", "order structure and sp-complementation of a poset");
  analyze->add_option("file", file)->required();
  analyze->add_option("--poset", poset)->required();

  auto* star = app.add_subcommand("star", "compute the star table of a poset");
  star->add_option("file", file)->required();
  star->add_option("--poset", poset)->required();
  star->add_option("--notion", notion)->check(CLI::IsMember({"sp", "wrp"}));
  star->add_option("--name", name, "name of the emitted table (default: star)");

  auto* extend = app.add_subcommand("extend", "extend a star table to a total arrow table");
  extend->add_option("file", file)->required();
  extend->add_option("--poset", poset)->required();
  extend->add_option("--method", method)->required()->check(CLI::IsMember(extend_methods()));
  extend->add_option("--selection", selection, "union, frink, or a selection in the file");
  extend->add_option("--table", table, "star table to extend (default: the sp table)");
  extend->add_option("--name", name, "name of the emitted table (default: the method)");

  auto* check = app.add_subcommand("check", "check a table against an axiom system");
  check->add_option("file", file)->required();
  check->add_option("--table", table)->required();
  check->add_option("--system", system)->required();
  check->add_option("--selection", selection);
  check->add_option("--reading", reading)->check(CLI::IsMember({"existential", "conditional", "one-sided"}));

  auto* props = app.add_subcommand("props", "check a lettered property suite");
  props->add_option("file", file)->required();
  props->add_option("--table", table)->required();
  props->add_option("--suite", suite)->required();
  props->add_option("--selection", selection);

  auto* verify = app.add_subcommand("verify", "verify a theorem over enumerated posets");
  verify->add_option("--theorem", theorem)->required();
  verify->add_option("--max-n", max_n)->required();
  verify->add_flag("--iso", iso, "one poset per isomorphism class");

  auto* hunt = app.add_subcommand("hunt", "search for a counterexample");
  hunt->add_option("--predicate", predicate)->required();
  hunt->add_option("--max-n", max_n)->required();
  hunt->add_flag("--iso", iso, "one poset per isomorphism class");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  Dedup dedup = iso ? Dedup::up_to_iso : Dedup::labeled;
  try {
    if (*validate) {
      Document doc = detail::load(file);
      for (const auto& s : doc.sections()) {
        if (auto* p = std::get_if<PosetSection>(&s))
          out << "poset " << p->name << ": " << p->poset.size() << " elements\n";
        else if (auto* t = std::get_if<TableSection>(&s))
          out << "optable " << t->name << " over " << t->over << ": "
              << (t->kind() == TableKind::partial ? "partial" : "total") << "\n";
        else if (auto* sel = std::get_if<SelectionSection>(&s))
          out << "selection " << sel->name << " over " << sel->over << "\n";
      }
      out << "ok\n";
      return 0;
    }
    if (*analyze) {
      Document doc = detail::load(file);
      const Poset& p = doc.poset(poset).poset;
      auto r = classify(p);
      out << "poset " << p.name() << ": " << p.size() << " elements\n";
      detail::flag_line(out, p, "chain", r.is_chain);
      detail::flag_line(out, p, "up-directed", r.is_up_directed);
      detail::flag_line(out, p, "greatest element", r.has_greatest);
      detail::flag_line(out, p, "least element", r.has_least);
      detail::flag_line(out, p, "sectionally bounded", r.is_sectionally_bounded);
      detail::flag_line(out, p, "upper semilattice", r.is_upper_semilattice);
      detail::flag_line(out, p, "lower semilattice", r.is_lower_semilattice);
      detail::flag_line(out, p, "lattice", r.is_lattice);
      detail::flag_line(out, p, "nearlattice", r.is_nearlattice);
      detail::flag_line(out, p, "lower sections are chains", r.all_lower_sections_chains);
      auto s = star_table(p);
      out << "sp-complemented: " << detail::yes_no(s.table.has_value());
      if (!s) out << " (" << describe(p, *s.missing) << ")";
      out << "\n";
      return 0;
    }
    if (*star) {
      Document doc = detail::load(file);
      const auto& ps = doc.poset(poset);
      auto s = star_table(ps.poset, notion == "wrp" ? Complement::wrp : Complement::sp);
      if (!s) {
        out << describe(ps.poset, *s.missing) << "\n";
        return 1;
      }
      Document d;
      d.add(ps);
      d.add_table(name.empty() ? "star" : name, *s.table);
      out << emit(d);
      return 0;
    }
    if (*extend) {
      Document doc = detail::load(file);
      const auto& ps = doc.poset(poset);
      const Poset& p = ps.poset;
      std::string out_name = name.empty() ? method : name;
      bool needs_selection = method == "i-natural" || method == "i-min";
      if (needs_selection && selection.empty())
        throw Error(ErrorKind::MissingSelection, "method " + method + " needs --selection");
      if (method == "i-natural")
        return detail::emit_result(out, ps, out_name, i_natural_extension(p, detail::resolve_selection(&doc, p, selection)));
      if (method == "mlb") return detail::emit_result(out, ps, out_name, mlb_extension(p));
      if (method == "rp") return detail::emit_result(out, ps, out_name, complement_table(p, Complement::rp));
      if (method == "clp") return detail::emit_result(out, ps, out_name, complement_table(p, Complement::clp));
      PartialTable s = detail::base_table(doc, p, table, out);
      if (method == "pure") return detail::emit_result(out, ps, out_name, pure_extension(s));
      if (method == "natural") return detail::emit_result(out, ps, out_name, natural_extension(s));
      if (method == "natural-min") return detail::emit_result(out, ps, out_name, natural_min_form(s));
      if (method == "normal") return detail::emit_result(out, ps, out_name, normal_extension(s));
      if (method == "i-min")
        return detail::emit_result(out, ps, out_name, i_min_extension(s, detail::resolve_selection(&doc, p, selection)));
      if (method == "dual-j") return detail::emit_result(out, ps, out_name, dual_j_extension(s));
      if (method == "m") return detail::emit_result(out, ps, out_name, m_extension(s));
      if (method == "lower-min") return detail::emit_result(out, ps, out_name, lower_min_extension(s));
      err << "unknown method '" << method << "'\n";
      return 2;
    }
    if (*check) {
      Document doc = detail::load(file);
      const auto& t = doc.table(table);
      const Poset& p = t.poset();
      System sys = parse_system(system);
      std::optional<LocalSelection> sel;
      if (!selection.empty()) sel = detail::resolve_selection(&doc, p, selection);
      auto r = check_system(p, t.cells(), t.kind(), sys, sel ? &*sel : nullptr, parse_reading(reading));
      detail::print_report(out, p, r);
      return r.holds() ? 0 : 1;
    }
    if (*props) {
      Document doc = detail::load(file);
      const auto& t = doc.table(table);
      const Poset& p = t.poset();
      Suite su = parse_suite(suite);
      std::optional<LocalSelection> sel;
      if (!selection.empty()) sel = detail::resolve_selection(&doc, p, selection);
      Report r;
      if (t.kind() == TableKind::partial) {
        if (su != Suite::sp_prop)
          throw Error(ErrorKind::StructureMismatch, std::string("suite ") + to_string(su) + " needs an arrow table");
        r = verify_sp_properties(p, std::get<PartialTable>(t.table));
      } else {
        r = verify_lemma_suite(p, std::get<TotalTable>(t.table), su, sel ? &*sel : nullptr);
      }
      detail::print_report(out, p, r);
      return r.holds() ? 0 : 1;
    }
    if (*verify) {
      auto r = verify_theorem(theorem, max_n, dedup);
      detail::print_verification(out, r);
      return r.verified ? 0 : 1;
    }
    if (*hunt) {
      auto r = find_counterexample(predicate, max_n, dedup);
      detail::print_verification(out, r);
      return r.counterexample ? 1 : 0;
    }
  } catch (const detail::Exit& e) {
    return e.code;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace sectional::cli

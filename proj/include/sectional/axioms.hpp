#pragma once

// Named axiom systems and lemma suites for star and arrow tables, plus the
// table-level verdicts built on them (esp, implicativity, strongness,
// normality, subalgebras).

#include <algorithm>
#include <cctype>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sectional/checks.hpp"
#include "sectional/extensions.hpp"
#include "sectional/pseudocomplements.hpp"
#include "sectional/selection.hpp"

namespace sectional {

enum class System { SP, ESP, ESPW, NAT, NATI, NRM, NRMW, J, JWV, JWV2 };

inline const char* to_string(System s) {
  switch (s) {
    case System::SP: return "SP";
    case System::ESP: return "ESP";
    case System::ESPW: return "ESPW";
    case System::NAT: return "NAT";
    case System::NATI: return "NATI";
    case System::NRM: return "NRM";
    case System::NRMW: return "NRMW";
    case System::J: return "J";
    case System::JWV: return "JWV";
    case System::JWV2: return "JWV2";
  }
  return "?";
}

namespace detail {

inline std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace detail

inline System parse_system(std::string_view id) {
  std::string u = detail::upper(id);
  for (System s : {System::SP, System::ESP, System::ESPW, System::NAT, System::NATI, System::NRM, System::NRMW, System::J,
                   System::JWV, System::JWV2})
    if (u == to_string(s)) return s;
  throw Error(ErrorKind::UnknownSystem, "unknown axiom system '" + std::string(id) + "'");
}

inline TableKind table_kind(System s) { return s == System::SP ? TableKind::partial : TableKind::total; }

inline MeetReading parse_reading(std::string_view r) {
  if (r == "existential") return MeetReading::existential;
  if (r == "conditional") return MeetReading::conditional;
  if (r == "one-sided") return MeetReading::one_sided;
  throw Error(ErrorKind::Parse, "unknown meet reading '" + std::string(r) + "'");
}

// ---------------------------------------------------------------------------
// Axiom predicates. Variables are read from the tuple t; where an axiom uses
// a derived element (a meet or join of variables) that element is an extra
// variable w guarded by equality, so every axiom reads a single column.

namespace detail::ax {

using C = AxiomContext;
using E = Element;

// star tables
inline bool sp1(const C& c, const E* t) {
  if (!c.leq(t[0], t[1])) return true;
  int yz = c.op(t[1], t[2]), xz = c.op(t[0], t[2]);
  return yz < 0 || xz < 0 || c.leq(yz, xz);
}
inline bool sp2(const C& c, const E* t) {
  int v = c.op(t[0], t[1]);
  return v < 0 || !c.leq(t[0], v) || c.leq(t[0], t[1]);
}
inline bool sp3(const C& c, const E* t) {
  if (!c.order->is_mlb(t[2], t[0], t[1])) return true;
  return c.leq(t[0], c.op(t[1], t[2]));
}

// esp
inline bool esp1(const C& c, const E* t) {
  if (!c.leq(t[2], t[0]) || !c.leq(t[0], t[1])) return true;
  return c.leq(c.op(t[1], t[2]), c.op(t[0], t[2]));
}
inline bool esp2(const C& c, const E* t) {
  if (!c.leq(t[1], t[0])) return true;
  return !c.leq(t[0], c.op(t[0], t[1])) || c.leq(t[0], t[1]);
}
inline bool esp3(const C& c, const E* t) {
  if (!c.order->is_mlb(t[2], t[0], t[1])) return true;
  return c.leq(t[0], c.op(t[1], t[2]));
}

// meet-semilattice forms; w = x ∧ y
inline bool espw1(const C& c, const E* t) {
  if (c.meet(t[0], t[1]) != t[2]) return true;
  return c.meet(t[0], c.op(t[0], t[2])) == t[2];
}
inline bool espw1_weak(const C& c, const E* t) {
  if (c.meet(t[0], t[1]) != t[2]) return true;
  return c.leq(c.meet(t[0], c.op(t[0], t[2])), t[1]);
}
inline bool espw2(const C& c, const E* t) {
  if (c.meet(t[0], t[1]) != t[2]) return true;
  return c.leq(t[0], c.op(t[1], t[2]));
}

// natural
inline bool nat1(const C& c, const E* t) {
  if (!c.leq(t[0], t[1])) return true;
  return c.leq(c.op(t[1], t[2]), c.op(t[0], t[2]));
}
inline bool nat3(const C& c, const E* t) {
  if (!c.leq(t[2], t[0]) || !c.order->disjoint_over(t[0], t[1], t[2])) return true;
  return c.leq(t[0], c.op(t[1], t[2]));
}
inline bool nat_i3(const C& c, const E* t) {
  if (!c.leq(t[2], t[0])) return true;
  for (Element w : ElementSet(c.select(t[1], t[2])))
    if (!c.order->disjoint_over(t[0], w, t[2])) return true;
  return c.leq(t[0], c.op(t[1], t[2]));
}

// normal
inline bool nrm0(const C& c, const E* t) { return c.leq(t[1], c.op(t[0], t[1])); }
inline bool nrm1(const C& c, const E* t) {
  if (!c.leq(t[0], c.op(t[1], t[2]))) return true;
  return c.leq(t[1], c.op(t[0], t[2]));
}

// normal, meet-semilattice forms
inline bool nrmw1(const C& c, const E* t) { return c.leq(t[0], c.op(c.op(t[0], t[1]), t[1])); }
inline bool nrmw2(const C& c, const E* t) {  // (x, y, z, w), w = x ∧ y
  if (c.meet(t[0], t[1]) != t[3]) return true;
  return c.leq(c.op(t[0], t[2]), c.op(t[3], t[2]));
}
inline bool nrmw3(const C& c, const E* t) { return c.leq(c.meet(t[0], c.op(t[0], t[1])), t[1]); }
inline bool nrmw3_eq(const C& c, const E* t) {
  int m = c.meet(t[0], c.op(t[0], t[1]));
  return m >= 0 && m == c.meet(t[0], t[1]);
}

// j-pseudocomplementation
inline bool j2(const C& c, const E* t) { return !c.leq(t[0], c.op(t[0], t[1])) || c.leq(t[0], t[1]); }
inline bool j3(const C& c, const E* t) {
  if (c.meet(t[0], t[1]) != t[2]) return true;  // also skips pairs without a meet
  return c.leq(t[0], c.op(t[1], t[2]));
}

// (x→y) ∧ (x∨y) = y
inline bool jwv1(const C& c, const E* t) {
  int m = c.meet(c.op(t[0], t[1]), c.join(t[0], t[1]));
  if (m < 0) return c.reading == MeetReading::conditional;
  return m == t[1];
}
// z <= x → ((z∨y) ∧ (x∨y)), tuple (x, y, z, w) with w the inner meet. When
// the inner meet is undefined the existential reading fails at w = first
// element and the other readings hold vacuously.
inline bool jwv2(const C& c, const E* t) {
  int m = c.meet(c.join(t[2], t[1]), c.join(t[0], t[1]));
  if (m < 0) return c.reading != MeetReading::existential || t[3] != 0;
  if (m != t[3]) return true;
  return c.leq(t[2], c.op(t[0], t[3]));
}
// z <= x → (z ∧ (x∨y)), tuple (x, y, z, w) with w = z ∧ (x∨y)
inline bool jwv2_lattice(const C& c, const E* t) {
  if (c.meet(t[2], c.join(t[0], t[1])) != t[3]) return true;
  return c.leq(t[2], c.op(t[0], t[3]));
}

}  // namespace detail::ax

/// Axioms of a system, in the order they are reported.
inline std::span<const Axiom> system_axioms(System s) {
  namespace a = detail::ax;
  static const std::vector<Axiom> sp{{"sp1", 3, 2, a::sp1}, {"sp2", 2, 1, a::sp2}, {"sp3", 3, 2, a::sp3}};
  static const std::vector<Axiom> esp{{"esp1", 3, 2, a::esp1}, {"esp2", 2, 1, a::esp2}, {"esp3", 3, 2, a::esp3}};
  static const std::vector<Axiom> espw{
      {"esp^1", 3, 2, a::espw1}, {"esp^1'", 3, 2, a::espw1_weak}, {"esp^2", 3, 2, a::espw2}};
  static const std::vector<Axiom> nat{{"nat1", 3, 2, a::nat1}, {"nat2", 2, 1, a::esp2}, {"nat3", 3, 2, a::nat3}};
  static const std::vector<Axiom> nati{{"nat1", 3, 2, a::nat1}, {"nat2", 2, 1, a::esp2}, {"natI3", 3, 2, a::nat_i3}};
  static const std::vector<Axiom> nrm{
      {"nrm0", 2, 1, a::nrm0}, {"nrm1", 3, 2, a::nrm1}, {"nrm2", 2, 1, a::esp2}, {"nrm3", 3, 2, a::esp3}};
  static const std::vector<Axiom> nrmw{{"nrm^0", 2, 1, a::nrm0},  {"nrm^1", 2, 1, a::nrmw1},
                                       {"nrm^2", 4, 2, a::nrmw2}, {"nrm^3", 2, 1, a::nrmw3},
                                       {"nrm^4", 3, 2, a::espw2}, {"nrm^3'", 2, 1, a::nrmw3_eq}};
  static const std::vector<Axiom> j{{"j1", 3, 2, a::nrm1}, {"j2", 2, 1, a::j2}, {"j3", 3, 2, a::j3}};
  static const std::vector<Axiom> jwv{{"jwv1", 2, 1, a::jwv1}, {"jwv2", 4, 3, a::jwv2}};
  static const std::vector<Axiom> jwv2{{"jwv1", 2, 1, a::jwv1}, {"jwv2'", 4, 3, a::jwv2_lattice}};
  switch (s) {
    case System::SP: return sp;
    case System::ESP: return esp;
    case System::ESPW: return espw;
    case System::NAT: return nat;
    case System::NATI: return nati;
    case System::NRM: return nrm;
    case System::NRMW: return nrmw;
    case System::J: return j;
    case System::JWV: return jwv;
    case System::JWV2: return jwv2;
  }
  return sp;
}

/// Throws StructureMismatch / MissingSelection when the system does not
/// apply to the poset.
inline void require_applicable(const Poset& p, System s, const LocalSelection* sel) {
  auto need = [&](const StructureFlag& f, const char* what) {
    if (f) return;
    auto [a, b] = *f.witness;
    throw Error(ErrorKind::StructureMismatch, std::string("system ") + to_string(s) + " needs " + what + "; poset '" +
                                                  p.name() + "' fails at (" + p.label(a) + ", " + p.label(b) + ")");
  };
  if (s == System::ESPW || s == System::NRMW || s == System::JWV || s == System::JWV2) {
    auto r = classify(p);
    if (s == System::ESPW || s == System::NRMW) need(r.is_lower_semilattice, "a meet semilattice");
    if (s == System::JWV) need(r.is_upper_semilattice, "an upper semilattice");
    if (s == System::JWV2) need(r.is_lattice, "a lattice");
  }
  if (s == System::NATI) {
    if (!sel) throw Error(ErrorKind::MissingSelection, "system NATI needs a local selection");
    if (!sel->poset().same_order(p)) throw Error(ErrorKind::InvalidTable, "selection is over a different poset");
  }
}

inline AxiomReport check_system(const Poset& p, std::span<const int> cells, TableKind kind, System s,
                                const LocalSelection* sel = nullptr, MeetReading reading = MeetReading::existential) {
  if (kind != table_kind(s))
    throw Error(ErrorKind::StructureMismatch, std::string("system ") + to_string(s) + " applies to " +
                                                  (table_kind(s) == TableKind::partial ? "star" : "arrow") + " tables");
  require_applicable(p, s, sel);
  OrderData order(p);
  AxiomContext ctx{&order, cells, sel, reading};
  return run_axioms(to_string(s), ctx, system_axioms(s));
}

inline AxiomReport check_system(const Poset& p, const PartialTable& t, System s, const LocalSelection* sel = nullptr,
                                MeetReading reading = MeetReading::existential) {
  if (!t.poset().same_order(p)) throw Error(ErrorKind::InvalidTable, "table is over a different poset");
  return check_system(p, t.cells(), TableKind::partial, s, sel, reading);
}

inline AxiomReport check_system(const Poset& p, const TotalTable& t, System s, const LocalSelection* sel = nullptr,
                                MeetReading reading = MeetReading::existential) {
  if (!t.poset().same_order(p)) throw Error(ErrorKind::InvalidTable, "table is over a different poset");
  return check_system(p, t.cells(), TableKind::total, s, sel, reading);
}

// ---------------------------------------------------------------------------
// Table-level verdicts.

/// A yes/no answer with the first offending tuple when it is no.
struct Verdict {
  bool holds = true;
  std::vector<Element> witness;
  std::string detail;

  explicit operator bool() const { return holds; }
};

/// → restricts to the sp-complementation of the poset.
inline Verdict is_esp(const Poset& p, const TotalTable& t) {
  auto star = star_table(p);
  if (!star.table) return {false, {star.missing->x, star.missing->y}, describe(p, *star.missing)};
  auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (p.leq(y, x) && t.at(x, y) != star.table->cell(x, y))
        return {false,
                {x, y},
                p.label(x) + " -> " + p.label(y) + " = " + p.label(t.at(x, y)) + " but " + p.label(x) + " * " +
                    p.label(y) + " = " + p.label(star.table->cell(x, y))};
  return {};
}

struct Implicativity {
  Verdict left;
  Verdict right;
};

/// x <= y iff x→y = 1_x (left) and iff x→y = 1_y (right).
inline Implicativity implicativity(const Poset& p, const TotalTable& t) {
  auto bounded = classify(p).is_sectionally_bounded;
  if (!bounded)
    throw Error(ErrorKind::NotSectionallyBounded, "poset '" + p.name() + "' is not sectionally bounded");
  auto n = static_cast<Element>(p.size());
  Implicativity r;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element v = t.at(x, y);
      Element tx = *section_top(p, x), ty = *section_top(p, y);
      auto text = [&](Element top, const char* which) {
        return p.label(x) + " -> " + p.label(y) + " = " + p.label(v) + (v == top ? " = " : " != ") + which + " = " +
               p.label(top) + (p.leq(x, y) ? " although " : " and ") + p.label(x) + (p.leq(x, y) ? " <= " : " !<= ") +
               p.label(y);
      };
      if (r.left.holds && p.leq(x, y) != (v == tx)) r.left = {false, {x, y}, text(tx, "1_x")};
      if (r.right.holds && p.leq(x, y) != (v == ty)) r.right = {false, {x, y}, text(ty, "1_y")};
    }
  }
  return r;
}

/// (S): x <= (x→y)→y.
inline Verdict is_strong(const Poset& p, const TotalTable& t) {
  auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element v = t.at(t.at(x, y), y);
      if (!p.leq(x, v))
        return {false, {x, y}, "(" + p.label(x) + " -> " + p.label(y) + ") -> " + p.label(y) + " = " + p.label(v)};
    }
  return {};
}

/// v <= x→y iff some u >= v and z >= x have u ∧_y z = y, for all x, y, v.
inline Verdict satisfies_bound_witness(const Poset& p, const TotalTable& t) {
  OrderData order(p);
  auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Mask reach = 0;
      for (Element u = 0; u < n; ++u)
        for (Element z : ElementSet(order.up(x)))
          if (order.meet_over(u, z, y) == y) reach |= order.down(u);
      Mask below = order.down(t.at(x, y));
      if (reach != below) {
        Element v = ElementSet(reach ^ below).first();
        return {false, {x, y, v}, "bound-witness equivalence fails at v = " + p.label(v)};
      }
    }
  }
  return {};
}

/// t is the normal extension of s. When s is the sp table the verdict is
/// cross-checked against the bound-witness characterization.
inline Verdict is_normal(const Poset& p, const PartialTable& s, const TotalTable& t) {
  auto normal = normal_extension(s);
  Verdict v;
  if (!normal.table) {
    const auto& u = normal.undefined_pairs.front();
    v = {false, {u.x, u.y}, "normal extension is undefined: " + describe(p, u)};
  } else {
    auto n = static_cast<Element>(p.size());
    for (Element x = 0; x < n && v.holds; ++x)
      for (Element y = 0; y < n && v.holds; ++y)
        if (normal.table->at(x, y) != t.at(x, y))
          v = {false, {x, y}, "normal extension gives " + p.label(normal.table->at(x, y)) + " at (" + p.label(x) +
                                  ", " + p.label(y) + ")"};
  }
  if (is_sp_table(s) && satisfies_bound_witness(p, t).holds != v.holds)
    throw Error(ErrorKind::InternalDisagreement, "normality and the bound-witness characterization disagree");
  return v;
}

// ---------------------------------------------------------------------------
// Lemma suites.

enum class Suite { sp_prop, esp_prop, jext_prop, inat_prop, simpl_i };

inline const char* to_string(Suite s) {
  switch (s) {
    case Suite::sp_prop: return "sp-prop";
    case Suite::esp_prop: return "esp-prop";
    case Suite::jext_prop: return "jext-prop";
    case Suite::inat_prop: return "Inat-prop";
    case Suite::simpl_i: return "simplI";
  }
  return "?";
}

inline Suite parse_suite(std::string_view id) {
  std::string u = detail::upper(id);
  for (Suite s : {Suite::sp_prop, Suite::esp_prop, Suite::jext_prop, Suite::inat_prop, Suite::simpl_i})
    if (u == detail::upper(to_string(s))) return s;
  throw Error(ErrorKind::UnknownSuite, "unknown property suite '" + std::string(id) + "'");
}

namespace detail::lemma {

using C = AxiomContext;
using E = Element;

// properties of any esp-complementation
inline bool esp_a(const C& c, const E* t) { return !c.leq(t[1], t[0]) || c.leq(t[1], c.op(t[0], t[1])); }
inline bool esp_b(const C& c, const E* t) {
  return !c.leq(t[1], t[0]) || c.leq(t[0], c.op(c.op(t[0], t[1]), t[1]));
}
inline bool esp_c(const C& c, const E* t) {
  if (!c.leq(t[2], t[0]) || !c.leq(t[2], t[1]) || !c.leq(t[0], c.op(t[1], t[2]))) return true;
  return c.leq(t[1], c.op(t[0], t[2]));
}
inline bool esp_d(const C& c, const E* t) {
  return !c.leq(t[1], t[0]) || c.leq(t[1], c.op(c.op(t[0], t[1]), t[1]));
}
inline bool esp_e(const C& c, const E* t) {
  if (!c.leq(t[1], t[0])) return true;
  int v = c.op(t[0], t[1]);
  return c.op(c.op(v, t[1]), t[1]) == v;
}
inline bool esp_f(const C& c, const E* t) {
  int top = c.top(t[0]);
  return top < 0 || c.op(t[0], t[0]) == top;
}
inline bool esp_g(const C& c, const E* t) {
  int top = c.top(t[1]);
  return !c.leq(t[1], t[0]) || top < 0 || c.leq(t[0], top);
}
inline bool esp_h(const C& c, const E* t) {
  int top = c.top(t[1]);
  return !c.leq(t[1], t[0]) || top < 0 || c.op(top, t[0]) == t[0];
}
inline bool esp_i(const C& c, const E* t) { return !c.leq(t[1], t[0]) || c.top(t[0]) == c.top(t[1]); }

// consequences of nrm1 (and further axioms)
inline bool jext_a(const C& c, const E* t) { return c.leq(t[0], c.op(c.op(t[0], t[1]), t[1])); }
inline bool jext_b(const C& c, const E* t) {
  return !c.leq(t[0], t[1]) || c.leq(c.op(t[1], t[2]), c.op(t[0], t[2]));
}
inline bool jext_c(const C& c, const E* t) {
  int v = c.op(t[0], t[1]);
  return c.op(c.op(v, t[1]), t[1]) == v;
}
inline bool jext_d(const C& c, const E* t) { return c.leq(t[0], c.op(t[1], t[1])); }
inline bool jext_e(const C& c, const E* t) { return c.op(t[0], t[0]) == c.order->greatest(); }
inline bool jext_f(const C& c, const E* t) { return c.leq(t[1], c.op(t[0], t[1])); }
inline bool jext_g(const C& c, const E* t) { return c.leq(t[1], c.op(c.op(t[0], t[1]), t[1])); }
inline bool jext_h(const C& c, const E* t) { return c.op(t[0], c.order->greatest()) == c.order->greatest(); }
inline bool jext_i(const C& c, const E* t) { return c.op(c.order->greatest(), t[0]) == t[0]; }
inline bool jext_j(const C& c, const E* t) { return c.leq(t[0], t[1]) == (c.op(t[0], t[1]) == c.order->greatest()); }

// properties of I-natural extensions
inline bool inat_a(const C& c, const E* t) { return c.leq(t[1], c.op(t[0], t[1])); }
inline bool inat_b(const C& c, const E* t) { return c.leq(t[1], c.op(c.op(t[0], t[1]), t[1])); }
inline bool inat_c(const C& c, const E* t) {
  if (!c.leq(t[0], t[1])) return true;
  int tx = c.top(t[0]), ty = c.top(t[1]);
  return tx < 0 || ty < 0 || (c.op(t[0], t[1]) == tx && tx == ty);
}
inline bool inat_d(const C& c, const E* t) {
  return !c.leq(t[0], t[1]) || c.leq(c.op(t[1], t[2]), c.op(t[0], t[2]));
}
inline bool inat_e(const C& c, const E* t) {
  if (!c.leq(t[2], t[1]) || !c.leq(t[0], c.op(t[1], t[2]))) return true;
  return c.leq(t[1], c.op(t[0], t[2]));
}
inline bool inat_f(const C& c, const E* t) {
  int ty = c.top(t[1]);
  return ty < 0 || c.leq(c.op(t[0], t[1]), ty);
}
inline bool inat_g(const C& c, const E* t) {
  int ty = c.top(t[1]);
  return ty < 0 || c.op(t[0], ty) == ty;
}

// selection facts, tuple (u, x, y)
inline bool simpl_a(const C& c, const E* t) {
  Mask sel = c.select(t[1], t[2]);
  bool left = (c.order->down(t[0]) & sel & c.order->up(t[2]) & ~bit(t[2])) == 0;
  bool right = true;
  for (Element z : ElementSet(sel)) right = right && c.order->disjoint_over(t[0], z, t[2]);
  return left == right;
}
inline bool simpl_b(const C& c, const E* t) {
  Mask slice = c.select(t[1], t[2]) & c.order->up(t[2]);
  bool left = (c.order->down(t[0]) & slice) == bit(t[2]);
  bool right = true;
  for (Element z : ElementSet(slice)) right = right && c.order->meet_over(t[0], z, t[2]) == t[2];
  return left == right;
}

}  // namespace detail::lemma

namespace detail {

struct GatedItem {
  Axiom axiom;
  unsigned needs;  // bit i set: hypothesis i of the suite is required
};

inline Report run_gated(const char* name, const AxiomContext& ctx, std::span<const GatedItem> items,
                        std::span<const std::pair<bool, std::string>> ladder) {
  Report r;
  r.name = name;
  for (const auto& item : items) {
    bool ok = true;
    std::string reason;
    for (std::size_t i = 0; i < ladder.size() && ok; ++i)
      if ((item.needs >> i & 1U) && !ladder[i].first) {
        ok = false;
        reason = ladder[i].second;
      }
    if (!ok) {
      r.skipped.emplace_back(item.axiom.id, reason);
      continue;
    }
    r.checked.emplace_back(item.axiom.id);
    if (auto w = first_failure(ctx, item.axiom)) r.violations.push_back({item.axiom.id, std::move(*w)});
  }
  return r;
}

}  // namespace detail

/// Checks a lettered lemma on an arrow table. Items whose hypotheses fail
/// are listed as skipped with the missing hypothesis.
inline PropertyReport verify_lemma_suite(const Poset& p, const TotalTable& t, Suite suite,
                                         const LocalSelection* sel = nullptr) {
  if (!t.poset().same_order(p)) throw Error(ErrorKind::InvalidTable, "table is over a different poset");
  if (suite == Suite::sp_prop) return verify_sp_properties(p, restrict(t));
  if ((suite == Suite::inat_prop || suite == Suite::simpl_i) && !sel)
    throw Error(ErrorKind::MissingSelection, std::string("suite ") + to_string(suite) + " needs a local selection");
  OrderData order(p);
  AxiomContext ctx{&order, t.cells(), sel};
  namespace l = detail::lemma;
  using detail::GatedItem;
  switch (suite) {
    case Suite::esp_prop: {
      static const std::vector<Axiom> items{
          {"a", 2, -1, l::esp_a}, {"b", 2, -1, l::esp_b}, {"c", 3, -1, l::esp_c},
          {"d", 2, -1, l::esp_d}, {"e", 2, -1, l::esp_e}, {"f", 1, -1, l::esp_f},
          {"g", 2, -1, l::esp_g}, {"h", 2, -1, l::esp_h}, {"i", 2, -1, l::esp_i},
      };
      return run_axioms(to_string(suite), ctx, items);
    }
    case Suite::jext_prop: {
      static const std::vector<GatedItem> items{
          {{"a", 2, -1, l::jext_a}, 0b0001}, {{"b", 3, -1, l::jext_b}, 0b0001}, {{"c", 2, -1, l::jext_c}, 0b0001},
          {{"d", 2, -1, l::jext_d}, 0b0011}, {{"e", 1, -1, l::jext_e}, 0b0101}, {{"f", 2, -1, l::jext_f}, 0b0101},
          {{"g", 2, -1, l::jext_g}, 0b0101}, {{"h", 1, -1, l::jext_h}, 0b0101}, {{"i", 1, -1, l::jext_i}, 0b1101},
          {{"j", 2, -1, l::jext_j}, 0b1101},
      };
      auto holds = [&](const char* id) {
        for (const Axiom& a : system_axioms(System::NRM))
          if (std::string_view(a.id) == id) return !first_failure(ctx, a).has_value();
        return false;
      };
      std::vector<std::pair<bool, std::string>> ladder{
          {holds("nrm1"), "nrm1 fails"},
          {holds("nrm0"), "nrm0 fails"},
          {order.greatest() >= 0 && holds("nrm3"), "needs a greatest element and nrm3"},
          {holds("nrm2"), "nrm2 fails"},
      };
      return detail::run_gated(to_string(suite), ctx, items, ladder);
    }
    case Suite::inat_prop: {
      static const std::vector<GatedItem> items{
          {{"a", 2, -1, l::inat_a}, 1}, {{"b", 2, -1, l::inat_b}, 1}, {{"c", 2, -1, l::inat_c}, 1},
          {{"d", 3, -1, l::inat_d}, 1}, {{"e", 3, -1, l::inat_e}, 1}, {{"f", 2, -1, l::inat_f}, 1},
          {{"g", 2, -1, l::inat_g}, 1},
      };
      auto natural = i_natural_extension(p, *sel);
      std::vector<std::pair<bool, std::string>> ladder{
          {natural.table && *natural.table == t, "table is not the " + sel->name() + "-natural extension"}};
      return detail::run_gated(to_string(suite), ctx, items, ladder);
    }
    case Suite::simpl_i: {
      static const std::vector<Axiom> items{{"a", 3, -1, l::simpl_a}, {"b", 3, -1, l::simpl_b}};
      return run_axioms(to_string(suite), ctx, items);
    }
    case Suite::sp_prop: break;
  }
  return {};
}

// ---------------------------------------------------------------------------
// Subalgebras.

struct SubalgebraResult {
  bool closed = false;
  /// The induced structure on the sub-poset is again of the same kind: its
  /// own sp table (star) or an extension of its own sp table (arrow).
  bool induced_is_same_kind = false;
};

namespace detail {

inline std::vector<Element> members(const Poset& p, ElementSet subset) {
  if (subset.empty()) throw Error(ErrorKind::EmptyPoset, "subalgebra carrier is empty");
  if (!subset.subset_of(p.all())) throw Error(ErrorKind::UnknownElement, "subset is not contained in the poset");
  return {subset.begin(), subset.end()};
}

}  // namespace detail

inline SubalgebraResult subalgebra_closed(const Poset& p, const PartialTable& s, ElementSet subset) {
  auto q = detail::members(p, subset);
  SubalgebraResult r{true, false};
  for (Element x : q)
    for (Element y : q)
      if (s.defined(x, y) && !subset.contains(s.cell(x, y))) r.closed = false;
  if (!r.closed) return r;
  Poset sub = induced_subposet(p, subset, p.name() + "_sub");
  std::vector<int> cells(q.size() * q.size(), kUndefinedCell);
  auto index = [&](Element e) { return static_cast<int>(std::find(q.begin(), q.end(), e) - q.begin()); };
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      if (s.defined(q[i], q[j])) cells[i * q.size() + j] = index(s.cell(q[i], q[j]));
  PartialTable restricted(sub, std::move(cells));
  r.induced_is_same_kind = is_sp_table(restricted);
  return r;
}

inline SubalgebraResult subalgebra_closed(const Poset& p, const TotalTable& t, ElementSet subset) {
  auto q = detail::members(p, subset);
  SubalgebraResult r{true, false};
  for (Element x : q)
    for (Element y : q)
      if (!subset.contains(t.at(x, y))) r.closed = false;
  if (!r.closed) return r;
  Poset sub = induced_subposet(p, subset, p.name() + "_sub");
  std::vector<int> cells(q.size() * q.size());
  auto index = [&](Element e) { return static_cast<int>(std::find(q.begin(), q.end(), e) - q.begin()); };
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) cells[i * q.size() + j] = index(t.at(q[i], q[j]));
  r.induced_is_same_kind = is_esp(sub, TotalTable(sub, std::move(cells))).holds;
  return r;
}

}  // namespace sectional

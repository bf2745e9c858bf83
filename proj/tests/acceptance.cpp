// Acceptance run: one PASS/FAIL line per criterion. Criterion 8 is known to
// fail (a smaller J counterexample exists, see the README); any other failure
// makes the exit status non-zero.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace sectional;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
};

Outcome golden_tables() {
  Outcome o;
  auto start = Clock::now();
  auto hex = fixtures::load("hexagon.sp");
  Poset p = hex.poset("hex").poset;
  auto star = star_table(p);
  o.require(star && *star.table == fixtures::partial(hex, "star"), "star table differs");
  if (!o.pass) return o;
  o.require(pure_extension(*star.table) == fixtures::total(fixtures::load("hexagon-pure.sp"), "pure"),
            "pure table differs");
  auto rp = complement_table(p, Complement::rp);
  o.require(rp.total() && *rp.table == fixtures::total(fixtures::load("hexagon-rpc.sp"), "rp"), "rp table differs");
  auto fnat = i_natural_extension(p, selection_frink(p));
  o.require(fnat.total() && *fnat.table == fixtures::total(fixtures::load("hexagon-fnat.sp"), "fnat"),
            "F-natural table differs");
  double t = seconds_since(start);
  o.require(t < 1.0, "took " + std::to_string(t) + " s");
  if (o.pass) o.note = "4 tables exact, " + std::to_string(t) + " s";
  return o;
}

Outcome implicativity_examples() {
  Outcome o;
  auto doc = fixtures::load("twochains.sp");
  Poset p = doc.poset("chains").poset;
  struct Want {
    const char* table;
    bool left, right;
  };
  for (Want w : {Want{"arrow1", true, false}, Want{"arrow2", false, true}, Want{"arrow3", true, true}}) {
    const auto& t = fixtures::total(doc, w.table);
    o.require(is_esp(p, t).holds, std::string(w.table) + " is not ESP");
    auto r = implicativity(p, t);
    o.require(r.left.holds == w.left && r.right.holds == w.right, std::string(w.table) + " implicativity differs");
  }
  o.require(natural_extension(fixtures::partial(doc, "star")) == fixtures::total(doc, "arrow1"),
            "natural extension is not arrow1");
  if (o.pass) o.note = "arrow1 left only, arrow2 right only, arrow3 both; natural = arrow1";
  return o;
}

Outcome normal_undefined() {
  Outcome o;
  Poset p = fixtures::poset("hexagon.sp", "hex");
  auto r = normal_extension(*star_table(p).table);
  std::set<std::pair<Element, Element>> pairs;
  ElementSet cd = ElementSet::single(p.index_of("c")).with(p.index_of("d"));
  for (const auto& u : r.undefined_pairs) {
    pairs.emplace(u.x, u.y);
    o.require(u.candidates == cd, "candidate antichain differs at " + describe(p, u));
  }
  Element a = p.index_of("a"), b = p.index_of("b");
  o.require(pairs == std::set<std::pair<Element, Element>>{{a, b}, {b, a}}, "undefined pairs differ");
  if (o.pass) o.note = "undefined at (a, b), (b, a); candidates {c, d}";
  return o;
}

Outcome subalgebras() {
  Outcome o;
  auto hex = fixtures::load("hexagon.sp");
  Poset p = hex.poset("hex").poset;
  ElementSet q;
  for (const char* l : {"0", "c", "d", "1"}) q = q.with(p.index_of(l));
  auto r = subalgebra_closed(p, fixtures::partial(hex, "star"), q);
  o.require(r.closed && !r.induced_is_same_kind, "hexagon Q verdict differs");
  Poset qp = induced_subposet(p, q, "q");
  auto qs = star_table(qp);
  o.require(qs && qs.table->cell(qp.index_of("c"), qp.index_of("0")) == qp.index_of("d"), "c *_Q 0 is not d");

  auto five = fixtures::load("five.sp");
  Poset f = five.poset("five").poset;
  auto normal = normal_extension(*star_table(f).table);
  o.require(normal.total() && *normal.table == fixtures::total(five, "normal"), "five-element table differs");
  ElementSet q5;
  for (const char* l : {"0", "b", "c", "1"}) q5 = q5.with(f.index_of(l));
  auto r5 = subalgebra_closed(f, fixtures::total(five, "normal"), q5);
  o.require(r5.closed && !r5.induced_is_same_kind, "five-element Q verdict differs");
  if (o.pass) o.note = "both closed, neither induced structure of the same kind";
  return o;
}

std::string level_text(const VerificationReport& r) {
  std::ostringstream s;
  s << r.posets_checked() << " posets, " << r.instances_checked() << " instances, " << r.elapsed_seconds << " s";
  return s.str();
}

bool counters_nonzero(const VerificationReport& r) {
  for (const auto& l : r.levels)
    if (l.instances == 0) return false;
  return !r.levels.empty();
}

Outcome jext_fin() {
  Outcome o;
  auto five = verify_theorem("T-JEXT-FIN", 5);
  o.require(five.verified, "counterexample at n <= 5");
  o.require(five.elapsed_seconds < 10, "n <= 5 took " + std::to_string(five.elapsed_seconds) + " s");
  auto six = verify_theorem("T-JEXT-FIN", 6);
  o.require(six.verified, six.counterexample ? six.counterexample->witness : "not verified");
  o.require(six.elapsed_seconds < 300, "n <= 6 took " + std::to_string(six.elapsed_seconds) + " s");
  if (o.pass) o.note = "n <= 6: " + level_text(six) + "; n <= 5: " + std::to_string(five.elapsed_seconds) + " s";
  return o;
}

Outcome theorems_at_five() {
  Outcome o;
  std::uint64_t instances = 0;
  for (const char* id : {"T-NAT-EQ", "T-SPCHAR", "T-NRM-AX", "T-NRM-IMPL", "T-NAT-IMPLIC", "T-STR-NRM", "T-GLB",
                         "T-MONO"}) {
    auto r = verify_theorem(id, 5);
    o.require(r.verified, std::string(id) + (r.counterexample ? ": " + r.counterexample->witness : ": not verified"));
    o.require(counters_nonzero(r), std::string(id) + ": an n with zero instances");
    instances += r.instances_checked();
  }
  if (o.pass) o.note = "8 theorems verified, " + std::to_string(instances) + " instances";
  return o;
}

Outcome j_and_lattice() {
  Outcome o;
  auto j = verify_theorem("T-J-EQ-NRM", 5);
  o.require(j.verified, j.counterexample ? j.counterexample->witness : "T-J-EQ-NRM not verified");
  auto lat = verify_theorem("T-LAT-F-EQ-J", 6);
  o.require(lat.verified, lat.counterexample ? lat.counterexample->witness : "T-LAT-F-EQ-J not verified");
  if (o.pass) o.note = "T-J-EQ-NRM n <= 5 (" + level_text(j) + "); T-LAT-F-EQ-J n <= 6 (" + level_text(lat) + ")";
  return o;
}

Outcome j_hunt() {
  Outcome o;
  auto r = find_counterexample("J⇒ESP", 6, Dedup::up_to_iso);
  o.require(r.counterexample.has_value(), "no counterexample up to n = 6");
  if (!o.pass) return o;
  Document d = parse_document(r.counterexample->instance);
  const Poset& p = std::get<PosetSection>(d.sections()[0]).poset;
  const auto& t = std::get<TotalTable>(std::get<TableSection>(d.sections()[1]).table);
  auto wrp = star_table(p, Complement::wrp);
  bool wrp_not_sp = wrp && restrict(t) == *wrp.table && !is_sp_table(restrict(t));
  bool hexagon = isomorphic(p, fixtures::poset("hexagon.sp", "hex"));
  o.require(hexagon, "first counterexample has n = " + std::to_string(r.counterexample->n) +
                         " and is not the hexagon (" + r.counterexample->witness + "); its table " +
                         (wrp_not_sp ? "does" : "does not") + " restrict to wrp but not sp");
  o.require(wrp_not_sp, "restriction is not wrp-but-not-sp");
  if (o.pass) o.note = "hexagon, wrp but not sp";
  return o;
}

Outcome poset_counts() {
  Outcome o;
  const std::uint64_t expected[] = {1, 3, 19, 219, 4231};
  for (int n = 1; n <= 5; ++n) {
    auto naive = oracle::count_labeled_posets(n);
    o.require(naive == expected[n - 1], "relation filter gives " + std::to_string(naive) + " at n = " + std::to_string(n));
    auto got = count_posets(n, Dedup::labeled);
    o.require(got == naive, "generator gives " + std::to_string(got) + " at n = " + std::to_string(n));
  }
  if (o.pass) o.note = "1, 3, 19, 219, 4231 (relation filter and generator)";
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::uint64_t runs = 0;
  for (int n = 1; n <= 5 && o.pass; ++n) {
    for_each_poset(n, Dedup::labeled, [&](const Poset& p) {
      auto s = star_table(p);
      if (!s) return true;
      auto fail = [&](const char* what) { o.require(false, std::string(what) + " fails on\n" + emit_instance(p)); };
      ++runs;
      if (!verify_sp_properties(p, *s.table).holds()) fail("sp-prop");
      if (classify(p).is_sectionally_bounded) {
        ++runs;
        if (!verify_lemma_suite(p, natural_extension(*s.table), Suite::esp_prop).holds()) fail("esp-prop (natural)");
        if (!verify_lemma_suite(p, pure_extension(*s.table), Suite::esp_prop).holds()) fail("esp-prop (pure)");
      }
      auto normal = normal_extension(*s.table);
      if (normal.total()) {
        ++runs;
        if (!verify_lemma_suite(p, *normal.table, Suite::jext_prop).holds()) fail("jext-prop");
      }
      for (const auto& sel : {selection_union(p), selection_frink(p)}) {
        auto inat = i_natural_extension(p, sel);
        if (!inat.total()) continue;
        runs += 2;
        if (!verify_lemma_suite(p, *inat.table, Suite::inat_prop, &sel).holds()) fail("Inat-prop");
        if (!verify_lemma_suite(p, *inat.table, Suite::simpl_i, &sel).holds()) fail("simplI");
      }
      return o.pass;
    });
  }
  if (o.pass) o.note = std::to_string(runs) + " suite runs";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    bool known_failure;
  };
  const std::vector<Criterion> criteria{
      {1, "golden tables", golden_tables, false},
      {2, "implicativity classifications", implicativity_examples, false},
      {3, "normal extension of hexagon undefined at (a,b),(b,a)", normal_undefined, false},
      {4, "subalgebra non-closure", subalgebras, false},
      {5, "T-JEXT-FIN over labeled posets n <= 6", jext_fin, false},
      {6, "theorems verified at n <= 5", theorems_at_five, false},
      {7, "T-J-EQ-NRM n <= 5, T-LAT-F-EQ-J n <= 6", j_and_lattice, false},
      {8, "J=>ESP hunt returns the hexagon", j_hunt, true},
      {9, "labeled poset counts n = 1..5", poset_counts, false},
      {10, "property suites on constructed extensions n <= 5", property_suites, false},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " -- " << o.note << "\n";
    if (!o.pass && !c.known_failure) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}

// Small tour of the library: build a poset in text, compute its sectional
// pseudocomplements, extend them and check a few systems.

#include <iostream>

#include "sectional/sectional.hpp"

using namespace sectional;

int main() {
  // four-element diamond with an extra point below one atom
  Document doc = parse_document(
      "poset kite\n"
      "elements 0 p a b 1\n"
      "cover 0 p\n"
      "cover p a\n"
      "cover 0 b\n"
      "cover a 1\n"
      "cover b 1\n"
      "end\n");
  Poset p = doc.poset("kite").poset;  // copy: adding sections may move it

  auto star = star_table(p);
  if (!star) {
    std::cerr << describe(p, *star.missing) << "\n";
    return 1;
  }
  doc.add_table("star", *star.table);

  TotalTable natural = natural_extension(*star.table);
  doc.add_table("natural", natural);
  std::cout << emit(doc);

  for (System sys : {System::ESP, System::NAT, System::J}) {
    auto r = check_system(p, natural, sys);
    std::cout << to_string(sys) << ": " << (r.holds() ? "holds" : "fails") << "\n";
  }
  auto impl = implicativity(p, natural);
  std::cout << "left implicative: " << (impl.left.holds ? "yes" : "no")
            << ", right implicative: " << (impl.right.holds ? "yes" : "no") << "\n";

  auto normal = normal_extension(*star.table);
  if (!normal.total())
    for (const auto& u : normal.undefined_pairs) std::cout << describe(p, u) << "\n";

  // smallest J-table that is not an esp-complementation
  auto hunt = find_counterexample("J=>ESP", 5, Dedup::up_to_iso);
  if (hunt.counterexample) std::cout << "J without ESP at n = " << hunt.counterexample->n << "\n";
  return 0;
}

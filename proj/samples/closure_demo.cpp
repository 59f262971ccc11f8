// Prints the rewrite class of a small monomial and the commutation found in
// configuration A.
#include <iostream>

#include "dis/dis.hpp"

int main() {
  using namespace dis;
  auto grid = parse_monomial("((a h b) v (c h d))");
  auto c = closure(grid.tree);
  std::cout << "class of " << to_string(grid.tree, grid.names) << " has " << c.members.size() << " binary members\n";
  for (const auto& m : c.members) std::cout << "  " << to_string(m, grid.names) << '\n';

  auto a = parse_monomial("(((a h b) v (c h (d v e))) h (((f v g) h h) v (i h j)))");
  auto rep = find_commutations(a.tree);
  std::cout << "configuration A: " << rep.classes << " classes, " << rep.witnesses.size() << " witness(es)\n";
  for (const auto& w : rep.witnesses)
    std::cout << "  " << cycle_string(w.permutation, &a.names) << " in " << w.certificate.steps.size() << " steps\n";
  return rep.witnesses.empty() ? 1 : 0;
}

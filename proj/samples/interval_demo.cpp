// The one-dimensional picture: association types, tree sequences and the
// piecewise-linear map between two of them.
#include <iostream>

#include "dis/dis.hpp"

int main() {
  using namespace dis;
  for (const auto& t : enumerate_associations(4))
    std::cout << association_string(t) << "  ->  {" << sequence_string(association_to_sequence(t)) << "}\n";

  auto a = association_to_sequence(parse_association("(ab)c"));
  auto b = association_to_sequence(parse_association("a(bc)"));
  auto f = thompson_map(a, b);
  std::cout << "slopes of (ab)c -> a(bc):";
  for (const auto& s : f.slopes()) std::cout << ' ' << s;
  std::cout << '\n';
  return 0;
}

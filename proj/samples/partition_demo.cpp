// Realizes a monomial as a block partition and lists its cuts and fiber.
#include <iostream>

#include "dis/dis.hpp"

int main() {
  using namespace dis;
  auto m = parse_monomial("(((a h b) v (c h (d v e))) h (((f v g) h h) v (i h j)))");
  auto p = realize(m.tree);
  std::cout << render_ascii(p, &m.names) << '\n' << to_text(p);

  auto cls = classify_blocks(p);
  std::cout << "interior blocks:";
  for (std::size_t k = 0; k < p.size(); ++k)
    if (cls[k] == BlockClass::interior) std::cout << ' ' << m.names[p.blocks[k].label - 1];
  std::cout << '\n';

  for (const auto& c : cuts(p))
    std::cout << orientation_name(c.orientation) << " cut at " << c.at << " over [" << c.span.lo << ", " << c.span.hi << "]\n";

  auto f = fiber(p);
  std::cout << "fiber has " << f.size() << " monomial(s)\n";
  for (const auto& t : f) std::cout << "  " << to_string(t, m.names) << '\n';
  return 0;
}

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace dis;
using namespace dis::testing;

TEST(Ascii, UnitSquare) {
  EXPECT_EQ(render_ascii(unit_partition()),
            "+---------------+\n"
            "|               |\n"
            "|               |\n"
            "|               |\n"
            "|               |\n"
            "|               |\n"
            "+---------------+\n");
}

TEST(Ascii, GridWithNames) {
  auto m = parse_monomial("((a h b) v (c h d))");
  auto s = render_ascii(realize(m.tree), &m.names);
  // c and d are on the upper row, a and b below
  EXPECT_LT(s.find('c'), s.find('a'));
  EXPECT_LT(s.find('a'), s.find('b'));
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 7);
  EXPECT_NE(s.find("+-------+-------+"), std::string::npos);
}

TEST(Ascii, DefaultNamesAndWidthLimit) {
  auto s = render_ascii(realize(H(1, 2)));
  EXPECT_NE(s.find("x1"), std::string::npos);
  EXPECT_NE(s.find("x2"), std::string::npos);
  Tree deep = L(1);
  for (unsigned k = 2; k <= 12; ++k) deep = H(deep, L(k));
  EXPECT_THROW(render_ascii(realize(deep)), limit_error);
}

TEST(Svg, Structure) {
  auto m = parse_monomial("(((a h b) v (c h (d v e))) h (((f v g) h h) v (i h j)))");
  auto svg = render_svg(realize(m.tree), &m.names);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>\n"), std::string::npos);
  std::size_t rects = 0, texts = 0, shaded = 0;
  for (std::size_t at = 0; (at = svg.find("<rect", at)) != std::string::npos; ++at) ++rects;
  for (std::size_t at = 0; (at = svg.find("<text", at)) != std::string::npos; ++at) ++texts;
  for (std::size_t at = 0; (at = svg.find("#dde8f5", at)) != std::string::npos; ++at) ++shaded;
  EXPECT_EQ(rects, 11u);  // background plus ten blocks
  EXPECT_EQ(texts, 10u);
  EXPECT_EQ(shaded, 2u);  // d and g
}

TEST(Svg, CoordinatesAndStability) {
  auto p = realize(V(1, 2));
  SvgStyle st;
  st.size = 100;
  st.margin = 0;
  auto svg = render_svg(p, nullptr, st);
  // the south block is drawn lower in SVG coordinates
  EXPECT_NE(svg.find("<rect x=\"0.000\" y=\"50.000\" width=\"100.000\" height=\"50.000\""), std::string::npos);
  EXPECT_EQ(svg, render_svg(p, nullptr, st));
  auto names = Names{"<a&>", "b"};
  EXPECT_NE(render_svg(p, &names).find("&lt;a&amp;&gt;"), std::string::npos);
}

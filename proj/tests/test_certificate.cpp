#include <gtest/gtest.h>

#include <filesystem>

#include "test_util.hpp"

using namespace dis;
using namespace dis::testing;

namespace {

RewriteCertificate grid_certificate() {
  RewriteCertificate c;
  c.initial = V(H(1, 2), H(3, 4));
  c.steps = {{{Family::Interchange, Direction::forward}, {}}};
  c.claimed_final = H(V(1, 3), V(2, 4));
  return c;
}

}  // namespace

TEST(Replay, Empty) {
  RewriteCertificate c;
  c.initial = c.claimed_final = V(H(1, 2), L(3));
  EXPECT_TRUE(replay_certificate(c).ok);
}

TEST(Replay, OneStep) {
  auto r = replay_certificate(grid_certificate());
  EXPECT_TRUE(r.ok) << r.message;
  EXPECT_EQ(r.steps_applied, 1u);
}

TEST(Replay, WrongFinal) {
  auto c = grid_certificate();
  c.claimed_final = c.initial;
  auto r = replay_certificate(c);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.failed_step);
}

TEST(Replay, CorruptedPositionFailsAtThatStep) {
  auto c = load_certificate(default_data_dir() + "/certificates/configA.json");
  ASSERT_TRUE(replay_certificate(c).ok);
  for (std::size_t k : {std::size_t{0}, c.steps.size() / 2, c.steps.size() - 1}) {
    auto bad = c;
    bad.steps[k].position = bad.steps[k].position.is_root() ? TreePosition::parse("0") : TreePosition::parse(bad.steps[k].position.str() + "0");
    auto r = replay_certificate(bad);
    EXPECT_FALSE(r.ok);
    ASSERT_TRUE(r.failed_step);
    EXPECT_EQ(*r.failed_step, k);
    EXPECT_NE(r.message.find("step " + std::to_string(k + 1)), std::string::npos);
  }
}

TEST(Json, RoundTrip) {
  auto m = parse_monomial("((a h b) v (c h d))");
  auto c = grid_certificate();
  c.names = m.names;
  auto j = certificate_to_json(c);
  EXPECT_EQ(j["initial"], "((a h b) v (c h d))");
  EXPECT_EQ(j["final"], "((a v c) h (b v d))");
  auto back = certificate_from_json(j);
  EXPECT_EQ(back.initial, c.initial);
  EXPECT_EQ(back.claimed_final, c.claimed_final);
  EXPECT_EQ(back.steps, c.steps);
  EXPECT_EQ(back.names, c.names);
}

TEST(Json, FinalUsesInitialNames) {
  nlohmann::json j = {{"initial", "(b h a)"}, {"steps", nlohmann::json::array()}, {"final", "(b h a)"}};
  auto c = certificate_from_json(j);
  EXPECT_EQ(c.initial, H(1, 2));
  EXPECT_TRUE(replay_certificate(c).ok);
  j["final"] = "(a h b)";
  EXPECT_EQ(certificate_from_json(j).claimed_final, H(2, 1));
}

TEST(Json, FileRoundTrip) {
  auto path = (std::filesystem::temp_directory_path() / "dis_cert_roundtrip.json").string();
  auto c = grid_certificate();
  save_certificate(c, path);
  auto back = load_certificate(path);
  EXPECT_TRUE(replay_certificate(back).ok);
  std::filesystem::remove(path);
  EXPECT_THROW(load_certificate(path), error);
}

TEST(Helpers, CancelInversePairs) {
  const RewriteStep a{{Family::AssocH, Direction::forward}, {}};
  const RewriteStep b{{Family::Interchange, Direction::forward}, TreePosition::parse("1")};
  EXPECT_EQ(cancel_inverse_pairs({a, b, b.inverse(), a.inverse()}).size(), 0u);
  EXPECT_EQ(cancel_inverse_pairs({a, b, a.inverse()}).size(), 3u);
}

TEST(Helpers, InterchangeCount) { EXPECT_EQ(interchange_count(grid_certificate()), 1u); }

TEST(Shipped, AllCertificatesReplay) {
  std::size_t n = 0;
  for (const auto& e : std::filesystem::directory_iterator(default_data_dir() + "/certificates")) {
    if (e.path().extension() != ".json") continue;
    auto r = replay_certificate(load_certificate(e.path().string()));
    EXPECT_TRUE(r.ok) << e.path() << ": " << r.message;
    ++n;
  }
  EXPECT_GE(n, 6u);
}

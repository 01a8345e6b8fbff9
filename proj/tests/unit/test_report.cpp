#include <gtest/gtest.h>

#include <regex>
#include <set>
#include <sstream>

#include "altgraph/report.hpp"

using namespace altgraph;

namespace {

const ClaimRecord* find(const Report& r, const std::string& id) {
  for (const auto& c : r.claims)
    if (c.claim_id == id) return &c;
  return nullptr;
}

const Report& wide_report() {
  static const Report r = [] {
    RunConfig cfg;
    cfg.n_values = {4, 5};
    cfg.q_values = {1, 2};
    cfg.jobs = 2;
    return run(cfg);
  }();
  return r;
}

}  // namespace

TEST(Report, DefaultRunAlpha) {
  RunConfig cfg;
  auto r = run(cfg);
  EXPECT_EQ(r.count(ClaimStatus::fail), 0u);
  EXPECT_EQ(r.exit_code(), 0);
  const auto* a = find(r, "alpha_n5_q1");
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->computed, 12);
  EXPECT_EQ(a->expected, 12);
  EXPECT_EQ(a->status, ClaimStatus::pass);
}

TEST(Report, DisconnectedN4) {
  RunConfig cfg;
  cfg.n_values = {4};
  cfg.suites = {"structure"};
  auto r = run(cfg);
  const auto* c = find(r, "connected_n4_q1");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, ClaimStatus::pass);
  EXPECT_EQ(c->expected, "disconnected");
  EXPECT_EQ(c->computed["components"], 3);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Report, AutOrderN5Q2) {
  RunConfig cfg;
  cfg.q_values = {2};
  cfg.suites = {"aut"};
  auto r = run(cfg);
  const auto* c = find(r, "aut_order_n5_q2");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->computed, 414720000);
  EXPECT_EQ(c->status, ClaimStatus::pass);
}

TEST(Report, ErratumIsInformational) {
  const auto* c = find(wide_report(), "intersection_crossed_n5_q2");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, ClaimStatus::informational);
  EXPECT_EQ(c->computed["size"], 180);
  EXPECT_EQ(c->expected["printed_value"], 720);
}

TEST(Report, ManifestCoveredByAllSuite) {
  const auto& r = wide_report();
  EXPECT_EQ(r.count(ClaimStatus::fail), 0u);
  for (const auto& m : claim_manifest()) {
    bool hit = false;
    for (const auto& c : r.claims)
      if (c.claim_id.rfind(m.claim_prefix, 0) == 0 && c.status != ClaimStatus::skipped) hit = true;
    EXPECT_TRUE(hit) << m.topic;
  }
  std::set<std::string> ids;
  for (const auto& c : r.claims) EXPECT_TRUE(ids.insert(c.claim_id).second) << c.claim_id;
}

TEST(Report, PaperRefsAreStatements) {
  std::regex numbered(R"((Lemma|Theorem|Thm|Prop|Cor|Remark|Section|§)\s*\d)");
  for (const auto& c : wide_report().claims) EXPECT_FALSE(std::regex_search(c.paper_ref, numbered)) << c.claim_id;
  for (const auto& m : claim_manifest()) EXPECT_FALSE(std::regex_search(m.topic, numbered)) << m.topic;
}

TEST(Report, DeterministicJson) {
  RunConfig cfg;
  cfg.suites = {"structure", "spectra"};
  auto a = run(cfg).to_json(false).dump();
  auto b = run(cfg).to_json(false).dump();
  EXPECT_EQ(a, b);
  auto j = run(cfg).to_json();
  EXPECT_TRUE(j.contains("meta"));
  EXPECT_EQ(j["meta"]["version"], version());
  EXPECT_TRUE(j["claims"][0].contains("runtimeMs"));
  EXPECT_TRUE(j["claims"][0].contains("paperRef"));
}

TEST(Report, ConfigValidation) {
  RunConfig cfg;
  cfg.n_values = {9};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.suites = {"nope"};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.jobs = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Report, GuardsReportSkipped) {
  RunConfig cfg;
  cfg.n_values = {6};
  cfg.q_values = {2};
  cfg.suites = {"aut"};
  auto r = run(cfg);
  const auto* c = find(r, "aut_order_n6_q2");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, ClaimStatus::skipped);
  EXPECT_EQ(c->expected, 537477120000LL);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Report, ExitCodes) {
  Report r;
  EXPECT_EQ(r.exit_code(), 0);
  r.resource_abort = true;
  EXPECT_EQ(r.exit_code(), 3);
  r.claims.push_back({"x", "y", 1, 2, ClaimStatus::fail, 0, ""});
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(Export, Artifacts) {
  RunConfig cfg;
  std::ostringstream edges, spectrum, bsets;
  export_artifact(cfg, "edges", edges);
  auto e = edges.str();
  EXPECT_EQ(std::count(e.begin(), e.end(), '\n'), 720);
  export_artifact(cfg, "spectrum", spectrum);
  EXPECT_NE(spectrum.str().find("\n-6,16\n"), std::string::npos);
  export_artifact(cfg, "B-sets", bsets);
  auto j = nlohmann::json::parse(bsets.str());
  ASSERT_EQ(j.size(), 25u);
  for (const auto& s : j) EXPECT_EQ(s["members"].size(), 12u);
  EXPECT_THROW(export_artifact(cfg, "bogus", bsets), std::invalid_argument);
}

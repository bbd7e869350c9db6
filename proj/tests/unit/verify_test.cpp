#include "ccomb/verify.hpp"

#include "ccomb/errors.hpp"

#include "doctest.h"

#include <set>
#include <sstream>

using namespace ccomb;

namespace {

VerifyConfig small_config() {
  VerifyConfig cfg;
  cfg.order = 6;
  cfg.eta_order = 4;
  cfg.series_order = 5;
  cfg.max_word = 4;
  cfg.family_max_word = 3;
  cfg.random_graphs = 3;
  cfg.random_models = 4;
  cfg.random_series = 3;
  return cfg;
}

}  // namespace

TEST_CASE("suite names") {
  CHECK(parse_suite("products") == Suite::products);
  CHECK(parse_suite("all") == Suite::all);
  CHECK_THROWS_AS(parse_suite("everything"), Error);
}

TEST_CASE("check table") {
  std::set<std::string> names;
  std::set<int> criteria;
  for (const auto& c : all_checks()) {
    CHECK(names.insert(c.name).second);
    criteria.insert(c.criterion);
  }
  for (int k = 0; k <= 6; ++k) CHECK(criteria.count(k) == 1);
}

TEST_CASE("reports are line oriented and deterministic") {
  const auto cfg = small_config();
  const Report a = run_suite(Suite::all, cfg);
  const Report b = run_suite(Suite::all, cfg);
  std::ostringstream sa, sb;
  a.write(sa);
  b.write(sb);
  CHECK(sa.str() == sb.str());
  CHECK(a.passed());
  CHECK(a.checks().size() == all_checks().size());
  CHECK(sa.str().rfind("CHECK ", 0) == 0);
  CHECK(sa.str().find("SUMMARY ") != std::string::npos);
}

TEST_CASE("failures are reported, not thrown") {
  Report r;
  r.add({"x", true, "fine"});
  r.add({"y", false, "broken"});
  CHECK(r.failures() == 1);
  CHECK_FALSE(r.passed());
  std::ostringstream os;
  r.write(os);
  CHECK(os.str() == "CHECK x PASS fine\nCHECK y FAIL broken\nSUMMARY 2 checks, 1 passed, 1 failed\n");
}

TEST_CASE("criteria select their checks") {
  const auto cfg = small_config();
  const Report r = run_criterion(5, cfg);
  CHECK(r.checks().size() == 4);
  CHECK(r.passed());
}

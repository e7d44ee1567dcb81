#include "doctest.h"
#include "ttmax/verify.hpp"

using namespace ttmax;

TEST_CASE("built-in property suites pass end to end") {
  const std::vector<SuiteResult> results = run_verification_suites(1);
  REQUIRE(results.size() == 5);
  for (const SuiteResult& suite : results) {
    INFO(suite.suite);
    CHECK(!suite.checks.empty());
    for (const SuiteCheck& check : suite.checks) {
      INFO(check.name, " worst=", check.worst);
      CHECK(check.pass);
    }
    CHECK(suite.pass);
  }
  CHECK(all_passed(results));
}

#include <doctest.h>

#include <algorithm>

#include "fencetile/identities.hpp"

using namespace fencetile;

namespace {

void require_all_pass(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports) {
    CAPTURE(r.id);
    CHECK(r.passed());
    CHECK(!r.evaluations.empty());
    for (const auto& f : r.failures) MESSAGE(r.id << " " << format_point(r.params, f.params) << " " << f.lhs << " != " << f.rhs);
  }
}

}  // namespace

TEST_CASE("registry is sorted and unique") {
  const auto& reg = identity_registry();
  CHECK(reg.size() >= 60);
  CHECK(std::is_sorted(reg.begin(), reg.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  CHECK(std::adjacent_find(reg.begin(), reg.end(), [](const auto& a, const auto& b) { return a.id == b.id; }) == reg.end());
  CHECK(find_identity("T:An") != nullptr);
  CHECK(find_identity("nope") == nullptr);
}

TEST_CASE("every identity holds at small and default scale") {
  require_all_pass(verify_all(1));
  require_all_pass(verify_all(30));
  require_all_pass(verify_all(kDefaultMaxN));
}

TEST_CASE("serial and parallel runs agree") {
  const auto a = verify_all(20, false);
  const auto b = verify_all(20, true);
  REQUIRE(a.size() == b.size());
  CHECK(format_reports_kv(a) == format_reports_kv(b));
  CHECK(format_reports_text(a) == format_reports_text(b));
}

TEST_CASE("single identity examples") {
  const auto jj = verify_identity("I:JJ", RangeOverride{{"m", {2, 2}}, {"n", {1, 1}}});
  REQUIRE(jj.evaluations.size() == 1);
  CHECK(jj.evaluations[0].lhs == 5);
  CHECK(jj.evaluations[0].rhs == 5);

  const auto s = verify_identity("I:sum2km5J", RangeOverride{{"n", {4, 4}}});
  REQUIRE(s.evaluations.size() == 1);
  CHECK(s.evaluations[0].lhs == 11);

  const auto jf = verify_identity("I:JF", RangeOverride{{"n", {2, 2}}});
  REQUIRE(jf.evaluations.size() == 1);
  CHECK(jf.evaluations[0].lhs == 3);
  CHECK(jf.passed());
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(verify_identity("T:nothing"), UnknownIdentity);
  CHECK_THROWS_AS(verify_identity("T:An", RangeOverride{{"n", {5, 2}}}), EmptyRange);
  CHECK_THROWS_AS(verify_all(0), std::invalid_argument);
}

TEST_CASE("output formats") {
  const auto r = verify_identity("T:An", RangeOverride{{"n", {0, 2}}});
  const std::string kv = format_reports_kv({r});
  CHECK(kv.find("id=T:An n=0 lhs=1 rhs=1 ok=1\n") != std::string::npos);
  CHECK(std::count(kv.begin(), kv.end(), '\n') == 3);
  const std::string text = format_reports_text({r});
  CHECK(text.find("1 passed, 0 failed") != std::string::npos);
}

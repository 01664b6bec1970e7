#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "specfac/config.hpp"
#include "specfac/errors.hpp"
#include "specfac/report.hpp"
#include "specfac/sign_claims.hpp"
#include "specfac/verify.hpp"

using namespace specfac;

TEST_CASE("edge_bound_values") {
  CHECK(F_bound(5) == 5);
  CHECK(F_bound(6) == 9);
  CHECK(F_bound(7) == 12);
  CHECK(F_bound(8) == 18);
  CHECK(F_bound(9) == 23);
  CHECK(F_bound(20) == 155);
  CHECK_THROWS_AS(F_bound(4), std::invalid_argument);
  CHECK_THROWS_AS(F_bound(0), std::invalid_argument);
}

TEST_CASE("theorem1_small_orders") {
  for (const int n : {5, 6}) {
    const VerificationReport rep = verify_theorem1(n);
    CHECK(rep.harness == "theorem1");
    CHECK(rep.ok());
    CHECK(rep.records.size() == 3);
    for (const CheckRecord& r : rep.records) CHECK(r.pass);
  }
}

TEST_CASE("theorem2_smoke") {
  const VerificationReport rep = verify_theorem2(0.0, {20}, 40, 99);
  CHECK(rep.harness == "theorem2");
  CHECK(rep.ok());
  CHECK(rep.checked > 0);
  for (const CheckRecord& r : rep.records) CHECK(r.pass);
}

TEST_CASE("theorem2_domain_guards") {
  CHECK_THROWS_AS(verify_theorem2(0.75, {20}, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem2(0.0, {kCriterionCap + 1}, 10, 1), cap_error);
  CHECK_THROWS_AS(verify_theorem2(-0.1, {20}, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem2(1.0, {20}, 10, 1), std::invalid_argument);
}

TEST_CASE("corollary3_report") {
  const VerificationReport rep = verify_corollary3({20});
  CHECK(rep.harness == "corollary3");
  CHECK(rep.ok());
  CHECK(rep.records.size() == 3);
}

TEST_CASE("lemma_equivalence_small") {
  const VerificationReport rep = verify_lemma_equivalence(5);
  CHECK(rep.harness == "lemma-equivalence");
  CHECK(rep.ok());
  CHECK(rep.records.size() == 5);
  for (const CheckRecord& r : rep.records) CHECK(r.pass);
}

TEST_CASE("spectral_ordering_smoke") {
  const VerificationReport rep = verify_spectral_ordering(50, 7);
  CHECK(rep.harness == "spectral-ordering");
  CHECK(rep.ok());
}

TEST_CASE("sign_claims_all_pass") {
  const std::vector<SignClaim>& reg = sign_claim_registry();
  CHECK(reg.size() == 79);
  const VerificationReport rep = check_sign_claims();
  CHECK(rep.harness == "signclaims");
  CHECK(rep.ok());
  CHECK(rep.records.size() == reg.size());
  for (const SignClaim& claim : reg) {
    const SignClaimOutcome out = run_sign_claim(claim);
    CHECK(out.violations == 0);
    CHECK(out.points >= 100);
  }
}

TEST_CASE("report_files_round_trip") {
  VerificationReport rep;
  rep.harness = "demo";
  rep.wall_ms = 1.25;
  CheckRecord a;
  a.harness = "demo";
  a.params = "{\"n\":6}";
  a.expected = "9";
  a.observed = "9";
  a.pass = true;
  a.tol = 0.0;
  rep.add(a);
  CheckRecord b = a;
  b.params = "{\"n\":8}";
  b.expected = "18";
  b.observed = "17";
  b.pass = false;
  rep.add(b);
  CHECK(!rep.ok());
  CHECK(rep.checked == 2);
  CHECK(rep.passed == 1);
  CHECK(rep.failed == 1);

  const std::filesystem::path dir = std::filesystem::temp_directory_path();
  const std::string jsonl = (dir / "specfac_test_report.jsonl").string();
  const std::string csv = (dir / "specfac_test_report.csv").string();
  std::remove(jsonl.c_str());
  std::remove(csv.c_str());

  write_jsonl(rep, jsonl);
  write_csv_summary(rep, csv);

  std::ifstream jin(jsonl);
  std::string line;
  int lines = 0;
  while (std::getline(jin, line)) {
    const nlohmann::json row = nlohmann::json::parse(line);
    CHECK(row.at("harness") == "demo");
    CHECK(row.contains("params"));
    CHECK(row.contains("pass"));
    ++lines;
  }
  CHECK(lines == 2);

  std::ifstream cin_(csv);
  std::string header;
  REQUIRE(std::getline(cin_, header));
  CHECK(header == "harness,checked,passed,failed,skipped,wall_ms");
  std::string row;
  REQUIRE(std::getline(cin_, row));
  CHECK(row.rfind("demo,2,1,1,0,", 0) == 0);

  // appending keeps the header unique
  write_csv_summary(rep, csv);
  std::ifstream cin2(csv);
  int rows = 0;
  while (std::getline(cin2, line)) ++rows;
  CHECK(rows == 3);

  std::remove(jsonl.c_str());
  std::remove(csv.c_str());
}

TEST_CASE("double_formatting") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(17.0065739707818) == "17.0065739707818");
  CHECK(round15(17.00657397078181234) == 17.0065739707818);
  const double x = 0.1 + 0.2;
  CHECK(round15(x) == round15(round15(x)));
}

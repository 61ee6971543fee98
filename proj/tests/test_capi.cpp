#include <doctest.h>
#include <json.hpp>

#include <string>
#include <thread>
#include <vector>

#include "dot_grammar.hpp"
#include "msc.h"

using nlohmann::json;

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  msc_string_free(s);
  return out;
}

} // namespace

TEST_CASE("pair handle") {
  msc_pair* p = nullptr;
  REQUIRE(msc_pair_open("A2n-1^2", 4, &p) == MSC_OK);
  char* s = nullptr;
  REQUIRE(msc_pair_dynkin_type(p, MSC_SIDE_RESTRICTION, &s) == MSC_OK);
  CHECK(take(s) == "A_7^(2)");
  REQUIRE(msc_pair_dynkin_type(p, MSC_SIDE_INDUCTION, &s) == MSC_OK);
  CHECK(take(s) == "B_4^(1)");
  REQUIRE(msc_pair_render(p, MSC_FORMAT_JSON, 0, MSC_SIDE_RESTRICTION, &s) == MSC_OK);
  auto j = json::parse(take(s));
  CHECK(j["n"] == 4);
  CHECK(j["A"].size() == 5);
  REQUIRE(msc_pair_render(p, MSC_FORMAT_DOT, 1, MSC_SIDE_INDUCTION, &s) == MSC_OK);
  CHECK(dotcheck::check(take(s)).empty());
  REQUIRE(msc_pair_poincare(p, MSC_SIDE_INDUCTION, 0, 8, 1, MSC_FORMAT_JSON, 0, &s) == MSC_OK);
  j = json::parse(take(s));
  CHECK(j["coefficients"].size() == 8);
  CHECK(j["coefficients"][0] == 1);
  CHECK(msc_pair_poincare(p, MSC_SIDE_INDUCTION, 9, 8, 1, MSC_FORMAT_TEXT, 0, &s) == MSC_ERR_DOMAIN);
  CHECK(s == nullptr);
  CHECK(std::string(msc_last_error()).find("vertex") != std::string::npos);
  CHECK(msc_pair_poincare(p, MSC_SIDE_INDUCTION, 0, 8, 1, MSC_FORMAT_DOT, 0, &s) == MSC_ERR_INVALID_ARGUMENT);
  msc_pair_free(p);
  msc_pair_free(nullptr);
}

TEST_CASE("status codes") {
  msc_pair* p = nullptr;
  CHECK(msc_pair_open("nope", MSC_NO_PARAM, &p) == MSC_ERR_DOMAIN);
  CHECK(p == nullptr);
  CHECK(msc_pair_open("Dn+1^2", MSC_NO_PARAM, &p) == MSC_ERR_DOMAIN);
  CHECK(msc_pair_open("Dn+1^2", 1, &p) == MSC_ERR_DOMAIN);
  CHECK(msc_pair_open("E6^2", 3, &p) == MSC_ERR_DOMAIN);
  CHECK(msc_pair_open(nullptr, 0, &p) == MSC_ERR_INVALID_ARGUMENT);
  char* s = nullptr;
  CHECK(msc_group("binary_dihedral", 3, static_cast<msc_format>(9), 0, &s) == MSC_ERR_INVALID_ARGUMENT);
  CHECK(msc_group("binary_dihedral", 3, MSC_FORMAT_DOT, 0, &s) == MSC_ERR_INVALID_ARGUMENT);
  CHECK(msc_group("quaternion", MSC_NO_PARAM, MSC_FORMAT_TEXT, 0, &s) == MSC_ERR_DOMAIN);
  CHECK(msc_chebyshev('V', 3, MSC_FORMAT_TEXT, 0, &s) == MSC_ERR_DOMAIN);
  CHECK(msc_exponents("E_8^(1)", MSC_FORMAT_TEXT, 0, &s) == MSC_ERR_DOMAIN);
  CHECK(msc_group("cyclic", 4, MSC_FORMAT_TEXT, 0, nullptr) == MSC_ERR_INVALID_ARGUMENT);
  REQUIRE(msc_group("cyclic", 4, MSC_FORMAT_TEXT, 0, &s) == MSC_OK);
  CHECK(std::string(msc_last_error()).empty());
  CHECK(take(s).find("C_4: order 4") != std::string::npos);
}

TEST_CASE("tables and data") {
  char* s = nullptr;
  REQUIRE(msc_chartable("binary_octahedral", MSC_NO_PARAM, 0, MSC_FORMAT_JSON, 0, &s) == MSC_OK);
  auto j = json::parse(take(s));
  CHECK(j["labels"].size() == 8);
  CHECK(j["values"][0].size() == 8);
  REQUIRE(msc_chartable("binary_dihedral", 5, 1, MSC_FORMAT_JSON, 0, &s) == MSC_OK);
  CHECK(json::parse(take(s))["values"].size() == 8);
  REQUIRE(msc_chebyshev('U', 3, MSC_FORMAT_JSON, 0, &s) == MSC_OK);
  CHECK(json::parse(take(s))["coefficients"] == json::array({0, -4, 0, 8}));
  REQUIRE(msc_exponents("D_4^(3)", MSC_FORMAT_JSON, 0, &s) == MSC_OK);
  CHECK(json::parse(take(s))["coxeter"] == 2);
  REQUIRE(msc_pair_names(&s) == MSC_OK);
  CHECK(take(s) == "A2n-1^2\nDn+1^2\nA2n^2\nE6^2\nD4^3\nA2^2\nS4A4\n");
}

TEST_CASE("verification") {
  char* s = nullptr;
  REQUIRE(msc_verify_pair("S4A4", MSC_NO_PARAM, MSC_FORMAT_JSON, 0, &s) == MSC_OK);
  auto j = json::parse(take(s));
  CHECK(j["passed"] == true);
  bool denominator = false;
  for (const auto& c : j["reports"][0]["checks"]) denominator = denominator || c["name"] == "denominator_identity_check";
  CHECK(denominator);
  REQUIRE(msc_verify_pair("Dn+1^2", MSC_NO_PARAM, MSC_FORMAT_JSON, 0, &s) == MSC_OK);
  CHECK(json::parse(take(s))["reports"].size() == 7);
  // the report is handed out with the failure status
  CHECK(msc_verify_pair("A2^2", MSC_NO_PARAM, MSC_FORMAT_JSON, 0, &s) == MSC_ERR_VERIFICATION);
  REQUIRE(s != nullptr);
  CHECK(json::parse(take(s))["passed"] == false);
}

TEST_CASE("threads") {
  std::vector<std::thread> ts;
  std::vector<std::string> out(4);
  for (int i = 0; i < 4; ++i)
    ts.emplace_back([&, i] {
      msc_pair* p = nullptr;
      if (msc_pair_open("Dn+1^2", 2 + i, &p) != MSC_OK) return;
      char* s = nullptr;
      if (msc_pair_dynkin_type(p, MSC_SIDE_INDUCTION, &s) == MSC_OK) out[static_cast<std::size_t>(i)] = take(s);
      msc_pair_free(p);
    });
  for (auto& t : ts) t.join();
  for (int i = 0; i < 4; ++i) CHECK(out[static_cast<std::size_t>(i)] == "C_" + std::to_string(2 + i) + "^(1)");
}

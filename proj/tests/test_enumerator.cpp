#include <doctest.h>

#include <sstream>

#include "isoacm/bbw_oracle.hpp"
#include "isoacm/enumerator.hpp"
#include "util.hpp"

using namespace tst;

TEST_CASE("quadrics and the symplectic projective space") {
  const EnumerationResult b2 = enumerate_acm(FlagSpace(LieType::B, 2, 1));
  REQUIRE(b2.acm_weights.size() == 2);
  CHECK(eq(b2.acm_weights[0], wv({0, 0})));
  CHECK(eq(b2.acm_weights[1], wv({0, 1})));

  const EnumerationResult c3 = enumerate_acm(FlagSpace(LieType::C, 3, 1));
  REQUIRE(c3.acm_weights.size() == 1);
  CHECK(eq(c3.acm_weights[0], zero_weight(3)));

  const EnumerationResult d4 = enumerate_acm(FlagSpace(LieType::D, 4, 1));
  REQUIRE(d4.acm_weights.size() == 3);
  CHECK(eq(d4.acm_weights[0], zero_weight(4)));
  CHECK(eq(d4.acm_weights[1], wv({0, 0, 0, 1})));
  CHECK(eq(d4.acm_weights[2], wv({0, 0, 1, 0})));

  const EnumerationResult d5 = enumerate_acm(FlagSpace(LieType::D, 5, 1));
  REQUIRE(d5.acm_weights.size() == 3);
  CHECK(eq(d5.acm_weights[1], wv({0, 0, 0, 0, 1})));
  CHECK(eq(d5.acm_weights[2], wv({0, 0, 0, 1, 0})));
}

TEST_CASE("enumerated weights satisfy the dimension bound and the direct check") {
  for (const FlagSpace& s : sweep_spaces(5)) {
    const EnumerationResult result = enumerate_acm(s);
    CHECK(!result.acm_weights.empty());
    for (const WeightFW& w : result.acm_weights) {
      CHECK(!(dim_flag(s) < max_entry_closed_form(s, w).integer_value()));
      CHECK(acm_by_oracle(s, w));
    }
  }
}

TEST_CASE("enumeration equals brute force over the larger sum box") {
  for (const FlagSpace& s : sweep_spaces(4)) {
    const EnumerationResult fast = enumerate_acm(s);
    std::vector<WeightFW> brute;
    for (const WeightFW& w : initialized_dominant_weights(s, dim_flag(s)))
      if (is_acm(s, w).is_acm) brute.push_back(w);
    REQUIRE(fast.acm_weights.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) CHECK(eq(fast.acm_weights[i], brute[i]));
    CHECK(fast.candidates_scanned <= Int(initialized_dominant_weights(s, dim_flag(s)).size()));
  }
}

TEST_CASE("enumeration is deterministic across worker counts") {
  const FlagSpace space(LieType::B, 4, 2);
  const EnumerationResult serial = enumerate_acm(space, 1);
  const EnumerationResult parallel = enumerate_acm(space, 4);
  REQUIRE(serial.acm_weights.size() == parallel.acm_weights.size());
  for (std::size_t i = 0; i < serial.acm_weights.size(); ++i)
    CHECK(eq(serial.acm_weights[i], parallel.acm_weights[i]));
}

TEST_CASE("coefficient-range families") {
  // two-sided family on B_5 k=3: ACM exactly when a_4 <= 2 and a_5 <= 5
  const FlagSpace b5k3(LieType::B, 5, 3);
  const CorollaryReport b5 = validate_corollaries(b5k3);
  CHECK(b5.all_passed());
  bool found_iff = false;
  for (const auto& f : b5.families) found_iff |= f.iff;
  CHECK(found_iff);

  // sufficiency family on C_4 k=2: a_1 up to 2n-2k+1 = 5 is always ACM
  const FlagSpace c4k2(LieType::C, 4, 2);
  for (Int a1 = 0; a1 <= 5; ++a1) CHECK(is_acm(c4k2, wv({a1, 0, 0, 0})).is_acm);
  CHECK(validate_corollaries(c4k2).all_passed());

  // the k=n example weight sits inside the box
  CHECK(is_acm(FlagSpace(LieType::B, 5, 5), wv({0, 1, 1, 0, 0})).is_acm);
  CHECK(validate_corollaries(FlagSpace(LieType::B, 5, 5)).all_passed());

  for (const FlagSpace& s : {FlagSpace(LieType::B, 4, 2), FlagSpace(LieType::C, 3, 3),
                             FlagSpace(LieType::D, 5, 2), FlagSpace(LieType::D, 6, 6),
                             FlagSpace(LieType::B, 3, 1), FlagSpace(LieType::C, 4, 1),
                             FlagSpace(LieType::D, 5, 1)}) {
    const CorollaryReport report = validate_corollaries(s);
    INFO("space ", s.name());
    CHECK(report.all_passed());
    CHECK(!report.families.empty());
  }
}

TEST_CASE("atlas output") {
  const std::vector<FlagSpace> spaces{FlagSpace(LieType::C, 3, 1), FlagSpace(LieType::D, 4, 1)};
  std::ostringstream first, second;
  emit_atlas(spaces, first, AtlasFormat::Csv);
  emit_atlas(spaces, second, AtlasFormat::Csv);
  CHECK(first.str() == second.str());  // idempotent re-emission

  std::istringstream lines(first.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "type,n,k,lambda,M_num,M_den,dim,acm");
  std::getline(lines, line);
  CHECK(line == "C,3,1,\"[0,0,0]\",5,1,5,1");
  int rows = 1;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 4);  // one for C_3, three for the D_4 quadric

  std::ostringstream jsonl;
  emit_atlas(spaces, jsonl, AtlasFormat::JsonLines);
  CHECK(jsonl.str().find("{\"type\":\"C\",\"n\":3,\"k\":1,\"lambda\":[0,0,0],\"M_num\":5,"
                         "\"M_den\":1,\"dim\":5,\"acm\":true}") != std::string::npos);
}

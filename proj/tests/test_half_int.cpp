#include <doctest.h>

#include <limits>

#include "isoacm/half_int.hpp"

using namespace isoacm;

TEST_CASE("construction and integrality") {
  CHECK(HalfInt(3).doubled() == 6);
  CHECK(HalfInt(3).is_integer());
  CHECK(HalfInt(3).integer_value() == 3);
  CHECK(HalfInt::from_doubled(5).doubled() == 5);
  CHECK_FALSE(HalfInt::from_doubled(5).is_integer());
  CHECK(HalfInt::from_doubled(-8).integer_value() == -4);
  CHECK_THROWS_AS(HalfInt::from_doubled(5).integer_value(), invariant_error);
}

TEST_CASE("arithmetic is exact") {
  const HalfInt half = HalfInt::from_doubled(1);
  CHECK(half + half == HalfInt(1));
  CHECK(HalfInt(2) - HalfInt::from_doubled(1) == HalfInt::from_doubled(3));
  CHECK(-HalfInt::from_doubled(7) == HalfInt::from_doubled(-7));
  CHECK(HalfInt(3) * HalfInt::from_doubled(5) == HalfInt::from_doubled(15));
  CHECK(HalfInt(-2) * HalfInt(4) == HalfInt(-8));
  // 1/2 * 1/2 is a quarter: not representable, must not round
  CHECK_THROWS_AS(half * half, error);
}

TEST_CASE("ordering follows the represented value") {
  CHECK(HalfInt::from_doubled(5) < HalfInt(3));
  CHECK(HalfInt(-1) < HalfInt::from_doubled(-1));
  CHECK(HalfInt(2) <= HalfInt(2));
  CHECK(abs(HalfInt::from_doubled(-9)) == HalfInt::from_doubled(9));
}

TEST_CASE("overflow throws instead of wrapping") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(HalfInt{big}, overflow_error);  // doubling overflows
  const HalfInt near_max = HalfInt::from_doubled(big);
  CHECK_THROWS_AS(near_max + near_max, overflow_error);
  CHECK_THROWS_AS(near_max * HalfInt(1000), overflow_error);
  CHECK_THROWS_AS(-HalfInt::from_doubled(std::numeric_limits<std::int64_t>::min()),
                  overflow_error);
}

TEST_CASE("formatting") {
  CHECK(HalfInt(14).str() == "14");
  CHECK(HalfInt::from_doubled(5).str() == "5/2");
  CHECK(HalfInt::from_doubled(-5).str() == "-5/2");
  CHECK(HalfInt(0).str() == "0");
}

#include <doctest.h>

#include <set>

#include "isoacm/bbw_oracle.hpp"
#include "isoacm/step_matrix.hpp"
#include "util.hpp"

using namespace tst;

namespace {

void check_matrix(const HalfIntMatrix& got, const std::vector<std::vector<HalfInt>>& want) {
  REQUIRE(got.rows() == Eigen::Index(want.size()));
  for (int i = 0; i < got.rows(); ++i) {
    REQUIRE(got.cols() == Eigen::Index(want[i].size()));
    for (int j = 0; j < got.cols(); ++j) {
      INFO("entry (", i + 1, ",", j + 1, ")");
      CHECK(got(i, j) == want[i][j]);
    }
  }
}

}  // namespace

TEST_CASE("OG(3,11), weight 4l1+4l2: blocks and maximum") {
  const FlagSpace space(LieType::B, 5, 3);
  const StepMatrix sm = build_step_matrix(space, wv({4, 4, 0, 0, 0}));
  check_matrix(sm.P, {{1, 2}, {6, 7}, {11, 12}});
  check_matrix(sm.Q, {{3, 4}, {8, 9}, {13, 14}});
  check_matrix(sm.R, {{hf(5), HalfInt(5), hf(15)}, {HalfInt(0), hf(15), HalfInt(10)}, {HalfInt(0), HalfInt(0), hf(25)}});
  CHECK(sm.M == HalfInt(14));
  CHECK(sm.max_entry() == HalfInt(14));
  CHECK(max_entry_closed_form(space, wv({4, 4, 0, 0, 0})) == HalfInt(14));
}

TEST_CASE("OG(3,11), weight 2l4+3l5: blocks and maximum") {
  const FlagSpace space(LieType::B, 5, 3);
  const StepMatrix sm = build_step_matrix(space, wv({0, 0, 0, 2, 3}));
  check_matrix(sm.P, {{1, 4}, {2, 5}, {3, 6}});
  check_matrix(sm.Q, {{8, 11}, {9, 12}, {10, 13}});
  check_matrix(sm.R, {{HalfInt(6), hf(13), HalfInt(7)}, {HalfInt(0), HalfInt(7), hf(15)}, {HalfInt(0), HalfInt(0), HalfInt(8)}});
  CHECK(sm.M == HalfInt(13));
  CHECK(sm.max_entry() == HalfInt(13));
}

TEST_CASE("OG(5,11), weight l2+l3: triangular matrix") {
  const FlagSpace space(LieType::B, 5, 5);
  const StepMatrix sm = build_step_matrix(space, wv({0, 1, 1, 0, 0}));
  REQUIRE(sm.triangular());
  check_matrix(sm.T, {{1, 2, 4, 6, 7},
                      {0, 3, 5, 7, 8},
                      {0, 0, 7, 9, 10},
                      {0, 0, 0, 11, 12},
                      {0, 0, 0, 0, 13}});
  CHECK(sm.M == HalfInt(13));
  CHECK(sm.max_entry() == HalfInt(13));
}

TEST_CASE("closed-form maximum") {
  // zero weight, type B, k < n: all sums vanish and 2e = 1
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(max_entry_closed_form(FlagSpace(LieType::B, n, k), zero_weight(n)) ==
            HalfInt(2 * n - k - 1));
  CHECK(max_entry_closed_form(FlagSpace(LieType::C, 3, 1), wv({0, 1, 0})) == HalfInt(7));
}

TEST_CASE("integer entries") {
  const StepMatrix c3 = build_step_matrix(FlagSpace(LieType::C, 3, 1), wv({0, 1, 0}));
  CHECK(integer_entries(c3) == std::vector<Int>{1, 3, 4, 5, 7});

  const StepMatrix b5 = build_step_matrix(FlagSpace(LieType::B, 5, 3), wv({4, 4, 0, 0, 0}));
  const auto vals = integer_entries(b5);
  CHECK(vals == std::vector<Int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14});

  // p_11 = a_k + 1 = 1 for every initialized weight
  for (const FlagSpace& s : sweep_spaces(5)) {
    const StepMatrix sm = build_step_matrix(s, zero_weight(s.rank()));
    const auto positions = integer_entry_positions(sm);
    REQUIRE(positions.count(1) == 1);
    if (s.k() < s.rank())
      CHECK(positions.at(1).front() == EntryRef{Block::P, 1, 1});
  }
}

TEST_CASE("block shapes and entry count equal the dimension") {
  for (const FlagSpace& s : sweep_spaces(6)) {
    const int n = s.rank(), k = s.k();
    const StepMatrix sm = build_step_matrix(s, zero_weight(n));
    Int entries = 0;
    if (k < n) {
      CHECK(sm.P.rows() == k);
      CHECK(sm.P.cols() == n - k);
      CHECK(sm.Q.rows() == k);
      CHECK(sm.Q.cols() == n - k);
      CHECK(sm.R.rows() == k);
      CHECK(sm.R.cols() == k);
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= n - k; ++j) {
          entries += sm.defined(Block::P, i, j);
          entries += sm.defined(Block::Q, i, j);
        }
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) entries += sm.defined(Block::R, i, j);
    } else {
      CHECK(sm.T.rows() == n);
      CHECK(sm.T.cols() == n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) entries += sm.defined(Block::T, i, j);
    }
    CHECK(entries == dim_flag(s));
  }
}

TEST_CASE("P and Q stay integral; halves only in R, or in T for C at k=n") {
  Rng rng;
  for (const FlagSpace& s : sweep_spaces(6)) {
    const int n = s.rank();
    WeightFW w = zero_weight(n);
    for (int i = 0; i < n; ++i)
      if (i + 1 != s.k()) w[i] = rng.range(0, 3);
    const StepMatrix sm = build_step_matrix(s, w);
    if (s.k() < n) {
      for (int i = 0; i < sm.P.rows(); ++i)
        for (int j = 0; j < sm.P.cols(); ++j) {
          CHECK(sm.P(i, j).is_integer());
          CHECK(sm.Q(i, j).is_integer());
        }
    } else if (s.type() != LieType::C) {
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (sm.defined(Block::T, i, j)) CHECK(sm.T(i - 1, j - 1).is_integer());
    }
  }
}

TEST_CASE("structural zeros are not entries") {
  const StepMatrix sm = build_step_matrix(FlagSpace(LieType::D, 4, 2), wv({0, 0, 0, 1}));
  CHECK_FALSE(sm.defined(Block::R, 1, 1));  // strict triangle for D
  CHECK_FALSE(sm.defined(Block::R, 2, 1));
  CHECK(sm.defined(Block::R, 1, 2));
  CHECK_THROWS_AS(sm.entry({Block::R, 2, 1}), validation_error);
  // no spurious zero or diagonal value in the integer multiset
  for (Int v : integer_entries(sm)) CHECK(v >= 1);

  const StepMatrix bc = build_step_matrix(FlagSpace(LieType::B, 3, 2), zero_weight(3));
  CHECK(bc.defined(Block::R, 1, 1));
  CHECK_FALSE(bc.defined(Block::R, 2, 1));
}

TEST_CASE("build validates its input") {
  const FlagSpace s(LieType::B, 4, 2);
  CHECK_THROWS_AS(build_step_matrix(s, wv({0, 1, 0, 0})), validation_error);   // a_k != 0
  CHECK_THROWS_AS(build_step_matrix(s, wv({-1, 0, 0, 0})), validation_error);  // not dominant
  CHECK_THROWS_AS(build_step_matrix(s, wv({0, 0, 0})), validation_error);      // wrong length
}

TEST_CASE("integer entries match the singular twists of the cohomology side") {
  // the two sides are implemented from independent formulas
  Rng rng;
  for (const FlagSpace& s : sweep_spaces(4)) {
    const int n = s.rank();
    for (int iter = 0; iter < 8; ++iter) {
      WeightFW w = zero_weight(n);
      for (int i = 0; i < n; ++i)
        if (i + 1 != s.k()) w[i] = rng.range(0, 2);
      const StepMatrix sm = build_step_matrix(s, w);
      const auto vals = integer_entries(sm);
      const std::set<Int> entry_set(vals.begin(), vals.end());
      const Int top = sm.M.integer_value();
      for (Int t = -2; t <= top + 3; ++t) {
        const bool singular = classify(s, twisted_weight(s, w, t)).singular;
        INFO("space ", s.name(), " lambda ", to_string(w), " t ", t);
        CHECK(singular == (entry_set.count(t) == 1));
      }
    }
  }
}

TEST_CASE("closed form equals the scanned maximum") {
  for (const FlagSpace& s : sweep_spaces(5)) {
    for (const WeightFW& w : {zero_weight(s.rank()), [&] {
           WeightFW u = zero_weight(s.rank());
           for (int i = 0; i < s.rank(); ++i)
             if (i + 1 != s.k()) u[i] = (i % 2) + 1;
           return u;
         }()}) {
      const StepMatrix sm = build_step_matrix(s, w);
      CHECK(sm.M == sm.max_entry());
    }
  }
}

TEST_CASE("render formats") {
  // 1x1 R block prints as a bare number
  const StepMatrix c3 = build_step_matrix(FlagSpace(LieType::C, 3, 1), wv({0, 1, 0}));
  CHECK(render_block_plain(c3, Block::R) == "4");

  const StepMatrix b5 = build_step_matrix(FlagSpace(LieType::B, 5, 3), wv({4, 4, 0, 0, 0}));
  CHECK(render_block_latex(b5, Block::P) == "1&2\\\\6&7\\\\11&12");
  const std::string plain = render(b5, RenderFormat::Plain);
  CHECK(plain.find("P =") != std::string::npos);
  CHECK(plain.find("M = 14") != std::string::npos);
  CHECK(plain.find("5/2") != std::string::npos);
  const std::string latex = render(b5, RenderFormat::Latex);
  CHECK(latex.find("\\begin{pmatrix}1&2\\\\6&7\\\\11&12\\end{pmatrix}") != std::string::npos);
  CHECK(latex.find("\\frac{5}{2}") != std::string::npos);

  CHECK_THROWS_AS(parse_render_format("yaml"), validation_error);
}

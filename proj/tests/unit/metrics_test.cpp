// Copyright 2026 The melaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "melaug/error.hpp"
#include "melaug/metrics/mcd.hpp"
#include "melaug/metrics/text.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace melaug;
using namespace melaug::metrics;

namespace {

std::u32string random_string(std::mt19937_64& gen, std::size_t max_len, char32_t alphabet) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<char32_t> ch(U'a', U'a' + alphabet - 1);
  std::u32string s(len(gen), U'a');
  for (auto& c : s) c = ch(gen);
  return s;
}

McepSequence random_seq(std::mt19937_64& gen, Index dim, Index max_len) {
  std::uniform_int_distribution<Index> len(1, max_len);
  std::normal_distribution<double> val;
  McepSequence s;
  s.frames.resize(dim, len(gen));
  for (Index i = 0; i < s.frames.size(); ++i) s.frames.data()[i] = val(gen);
  return s;
}

}  // namespace

TEST(EditDistance, KnownValues) {
  EXPECT_EQ(edit_distance(std::string_view(""), std::string_view("")), 0u);
  EXPECT_EQ(edit_distance(std::string_view("abc"), std::string_view("abc")), 0u);
  EXPECT_EQ(edit_distance(std::string_view("kitten"), std::string_view("sitting")), 3u);
  EXPECT_EQ(test::edit_distance_oracle(U"kitten", U"sitting"), 3u);
  // Hangul syllables count as one code point each.
  EXPECT_EQ(edit_distance(std::string_view("안녕하세요"), std::string_view("안녕하세")), 1u);
}

TEST(EditDistance, MatchesRecursiveOracle) {
  std::mt19937_64 gen(101);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_string(gen, 12, 4);
    const auto b = random_string(gen, 12, 4);
    ASSERT_EQ(edit_distance(a, b), test::edit_distance_oracle(a, b));
  }
}

TEST(EditDistance, IsAMetric) {
  std::mt19937_64 gen(103);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_string(gen, 8, 3);
    const auto b = random_string(gen, 8, 3);
    const auto c = random_string(gen, 8, 3);
    EXPECT_EQ(edit_distance(a, b), edit_distance(b, a));
    EXPECT_EQ(edit_distance(a, b) == 0, a == b);
    EXPECT_LE(edit_distance(a, c), edit_distance(a, b) + edit_distance(b, c));
  }
}

TEST(Cer, Cases) {
  const auto ref = Transcript::make("u", "abc");
  EXPECT_EQ(cer(Transcript::make("u", "abc"), ref), 0.0);
  EXPECT_EQ(cer(Transcript::make("u", ""), ref), 1.0);
  EXPECT_DOUBLE_EQ(cer(Transcript::make("u", "axc"), ref), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(cer(Transcript::make("u", "abcabcabc"), ref), 2.0);
  // Spaces are characters.
  EXPECT_DOUBLE_EQ(cer(Transcript::make("u", "ab c"), ref), 1.0 / 3.0);
  EXPECT_THROW(cer(ref, Transcript::make("u", "   ")), UndefinedReference);
}

TEST(Wer, Cases) {
  const auto ref = Transcript::make("u", "the cat sat");
  EXPECT_EQ(wer(Transcript::make("u", "the  cat sat "), ref), 0.0);
  EXPECT_DOUBLE_EQ(wer(Transcript::make("u", "the dog sat"), ref), 1.0 / 3.0);
  EXPECT_THROW(wer(ref, Transcript::make("u", "")), UndefinedReference);
}

TEST(Normalize, CollapsesWhitespaceAndComposes) {
  EXPECT_EQ(normalize_text("  a \t\n b  "), "a b");
  // Decomposed jamo compose to one syllable under NFC.
  EXPECT_EQ(normalize_text("가"), "가");
  EXPECT_EQ(normalize_text("é"), "é");
  EXPECT_THROW(to_code_points("\xC3"), FormatError);
  EXPECT_THROW(to_code_points("\xFF"), FormatError);
}

TEST(Normalize, Idempotent) {
  for (std::string s : {"  안녕   하세요 ", "가 　 x", "é́", "", "\t"}) {
    const auto once = normalize_text(s);
    EXPECT_EQ(normalize_text(once), once);
  }
}

TEST(Dtw, IdenticalSequencesFollowDiagonal) {
  std::mt19937_64 gen(7);
  const auto x = random_seq(gen, 5, 6);
  const auto r = dtw_align(x, x);
  EXPECT_EQ(r.cost, 0.0);
  ASSERT_EQ(static_cast<Index>(r.path.size()), x.size());
  for (std::size_t k = 0; k < r.path.size(); ++k)
    EXPECT_EQ(r.path[k], std::make_pair(static_cast<Index>(k), static_cast<Index>(k)));
}

TEST(Dtw, DuplicatedFrame) {
  McepSequence x{Eigen::MatrixXd::Constant(3, 1, 0.5)};
  McepSequence y{Eigen::MatrixXd::Constant(3, 2, 0.5)};
  const auto r = dtw_align(x, y);
  EXPECT_EQ(r.cost, 0.0);
  const std::vector<std::pair<Index, Index>> expected = {{0, 0}, {0, 1}};
  EXPECT_EQ(r.path, expected);
}

TEST(Dtw, MatchesBruteForceEnumeration) {
  std::mt19937_64 gen(211);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_seq(gen, 3, 8);
    const auto y = random_seq(gen, 3, 8);
    const auto r = dtw_align(x, y);
    EXPECT_NEAR(r.cost, test::dtw_bruteforce(x.frames, y.frames), 1e-9);
    // The returned path is valid and its summed cost is the reported cost.
    ASSERT_EQ(r.path.front(), std::make_pair(Index{0}, Index{0}));
    ASSERT_EQ(r.path.back(), std::make_pair(x.size() - 1, y.size() - 1));
    double sum = 0.0;
    for (std::size_t k = 0; k < r.path.size(); ++k) {
      if (k > 0) {
        const auto di = r.path[k].first - r.path[k - 1].first;
        const auto dj = r.path[k].second - r.path[k - 1].second;
        EXPECT_TRUE((di == 1 || di == 0) && (dj == 1 || dj == 0) && di + dj > 0);
      }
      sum += test::mcd_frame_oracle(x.frames.col(r.path[k].first), y.frames.col(r.path[k].second));
    }
    EXPECT_NEAR(sum, r.cost, 1e-9);
  }
}

TEST(Dtw, NoWorseThanDiagonalThenTail) {
  std::mt19937_64 gen(223);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_seq(gen, 4, 20);
    const auto y = random_seq(gen, 4, 20);
    double naive = 0.0;
    const Index diag = std::min(x.size(), y.size());
    for (Index k = 0; k < diag; ++k) naive += test::mcd_frame_oracle(x.frames.col(k), y.frames.col(k));
    for (Index k = diag; k < x.size(); ++k)
      naive += test::mcd_frame_oracle(x.frames.col(k), y.frames.col(diag - 1));
    for (Index k = diag; k < y.size(); ++k)
      naive += test::mcd_frame_oracle(x.frames.col(diag - 1), y.frames.col(k));
    EXPECT_LE(dtw_align(x, y).cost, naive + 1e-12);
  }
}

TEST(Dtw, DimensionMismatch) {
  McepSequence x{Eigen::MatrixXd::Zero(3, 2)};
  McepSequence y{Eigen::MatrixXd::Zero(4, 2)};
  EXPECT_THROW(dtw_align(x, y), DimensionMismatch);
}

TEST(Mcd, ClosedFormAndC0Exclusion) {
  McepSequence a{Eigen::MatrixXd::Zero(4, 1)};
  McepSequence b{Eigen::MatrixXd::Zero(4, 1)};
  b.frames(0, 0) = 5.0;
  EXPECT_EQ(mcd(a, b), 0.0);
  b.frames(2, 0) = 1.0;
  const double closed = 10.0 / std::log(10.0) * std::sqrt(2.0);
  EXPECT_NEAR(mcd(a, b), closed, 1e-12);
  EXPECT_NEAR(closed, 6.141851, 1e-6);
}

TEST(Mcd, ZeroOnSelfAndSymmetric) {
  std::mt19937_64 gen(227);
  for (int i = 0; i < 30; ++i) {
    const auto x = random_seq(gen, 14, 15);
    const auto y = random_seq(gen, 14, 15);
    EXPECT_EQ(mcd(x, x), 0.0);
    EXPECT_NEAR(mcd(x, y), mcd(y, x), 1e-12);
  }
}

TEST(Dct, OrthonormalAndParseval) {
  const auto d = dct2_matrix(80);
  EXPECT_LT((d * d.transpose() - Eigen::MatrixXd::Identity(80, 80)).cwiseAbs().maxCoeff(), 1e-12);
  std::mt19937_64 gen(229);
  auto m = test::random_mel(gen, 80, 10);
  const auto c = mel_to_mcep(m, 79);
  for (Index t = 0; t < 10; ++t) {
    const Eigen::VectorXd col = m.values.col(t).cast<double>();
    EXPECT_NEAR(c.frames.col(t).squaredNorm(), col.squaredNorm(), 1e-6);
    EXPECT_LT((d.transpose() * c.frames.col(t) - col).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Dct, ConstantColumnHasOnlyC0) {
  const auto c = mel_to_mcep(test::constant_mel(80, 3, -4.0f), 13);
  EXPECT_EQ(c.dim(), 14);
  EXPECT_NEAR(c.frames(0, 0), -4.0 * std::sqrt(80.0), 1e-9);
  EXPECT_LT(c.frames.bottomRows(13).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_THROW(mel_to_mcep(test::constant_mel(10, 3, 0.0f), 10), ParamOutOfRange);
}

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
#include <set>

#include "melaug/augment/params.hpp"
#include "melaug/augment/policies.hpp"
#include "melaug/augment/rng.hpp"
#include "melaug/error.hpp"
#include "test_util.hpp"

using namespace melaug;
using namespace melaug::augment;

namespace {

MelSpectrogram step_mel(Index nu, Index tau, Index edge, float a, float b) {
  MelSpectrogram m;
  m.values.resize(nu, tau);
  for (Index t = 0; t < tau; ++t) m.values.col(t).setConstant(t < edge ? a : b);
  return m;
}

Index max_adjacent_diff_frame(const MelSpectrogram& m) {
  Index best = 0;
  double best_diff = -1.0;
  for (Index t = 1; t < m.tau(); ++t) {
    const double d = (m.values.col(t) - m.values.col(t - 1)).cwiseAbs().sum();
    if (d > best_diff) {
      best_diff = d;
      best = t;
    }
  }
  return best;
}

const std::vector<PolicyParams>& selected_params() {
  static const std::vector<PolicyParams> p = {
      TimeMask{8, 1}, FreqMask{6, 1}, TimeWarp{0.08}, FreqWarp{4}, TimeLenCtl{0.12},
      LoudnessCtl{0.16}};
  return p;
}

}  // namespace

TEST(Rng, UniformIntStaysInRangeAndHitsEnds) {
  Rng rng(AugSeed{1});
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.uniform_int(-3, 3);
    ASSERT_GE(v, -3);
    ASSERT_LE(v, 3);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(Rng, SubstreamsDependOnEveryField) {
  const auto base = substream(AugSeed{7}, "utt1", "tw", 0, 0);
  EXPECT_EQ(base.value, substream(AugSeed{7}, "utt1", "tw", 0, 0).value);
  EXPECT_NE(base.value, substream(AugSeed{8}, "utt1", "tw", 0, 0).value);
  EXPECT_NE(base.value, substream(AugSeed{7}, "utt2", "tw", 0, 0).value);
  EXPECT_NE(base.value, substream(AugSeed{7}, "utt1", "fw", 0, 0).value);
  EXPECT_NE(base.value, substream(AugSeed{7}, "utt1", "tw", 1, 0).value);
  EXPECT_NE(base.value, substream(AugSeed{7}, "utt1", "tw", 0, 1).value);
}

TEST(Params, FormatAndParseRoundTrip) {
  for (const auto& p : selected_params()) {
    const auto text = format_params(p);
    EXPECT_EQ(format_params(parse_params(kind_of(p), text)), text);
  }
  EXPECT_EQ(format_params(TimeMask{4, 2}), "T=4,Nt=2");
  EXPECT_EQ(format_params(LoudnessCtl{0.16}), "Lambda=0.16");
}

TEST(Params, ValidationRejectsOutOfRange) {
  EXPECT_THROW(validate(TimeWarp{1.0}), ParamOutOfRange);
  EXPECT_THROW(validate(TimeWarp{-0.1}), ParamOutOfRange);
  EXPECT_THROW(validate(TimeLenCtl{1.0}), ParamOutOfRange);
  EXPECT_THROW(validate(LoudnessCtl{1.01}), ParamOutOfRange);
  EXPECT_THROW(validate(FreqWarp{-1}), ParamOutOfRange);
  EXPECT_THROW(validate(FreqMask{2, 0}), ParamOutOfRange);
  EXPECT_THROW(validate(TimeMask{-1, 1}), ParamOutOfRange);
  EXPECT_NO_THROW(validate(LoudnessCtl{1.0}));
  EXPECT_FALSE(parse_tag("xx").has_value());
  EXPECT_EQ(parse_tag("tlc"), PolicyKind::TimeLenCtl);
}

TEST(Policies, ZeroParametersAreIdentity) {
  std::mt19937_64 gen(21);
  for (int i = 0; i < 10; ++i) {
    const auto m = test::random_mel(gen, 80, 50 + i);
    for (auto kind : kAllPolicies) {
      const auto out = apply(m, zero_params(kind), AugSeed{static_cast<std::uint64_t>(i)});
      EXPECT_TRUE(out == m) << tag(kind);
    }
  }
}

TEST(Policies, SameSeedIsBitIdentical) {
  std::mt19937_64 gen(4);
  const auto m = test::random_mel(gen, 80, 120);
  for (const auto& p : selected_params()) {
    EXPECT_TRUE(apply(m, p, AugSeed{7}) == apply(m, p, AugSeed{7})) << format_params(p);
  }
}

TEST(Policies, OutputStaysWithinInputRange) {
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = test::random_mel(gen, 80, 64);
    const float lo = m.values.minCoeff();
    const float hi = m.values.maxCoeff();
    for (const auto& p : selected_params()) {
      const auto out = apply(m, p, AugSeed{static_cast<std::uint64_t>(trial)});
      EXPECT_GE(out.values.minCoeff(), lo) << format_params(p);
      EXPECT_LE(out.values.maxCoeff(), hi) << format_params(p);
      EXPECT_EQ(out.nu(), m.nu());
      EXPECT_TRUE(out.meta == m.meta);
    }
  }
}

TEST(TimeWarp, EndpointsFixed) {
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = test::random_mel(gen, 20, 40);
    const auto out = time_warp(m, 0.3, AugSeed{static_cast<std::uint64_t>(trial)});
    ASSERT_EQ(out.tau(), m.tau());
    EXPECT_TRUE(out.values.col(0) == m.values.col(0));
    EXPECT_TRUE(out.values.col(39) == m.values.col(39));
  }
}

TEST(TimeWarp, DrawsRespectRanges) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto d = draw_time_warp(40, 0.5, AugSeed{s});
    EXPECT_GE(d.source, 10);
    EXPECT_LE(d.source, 30);
    EXPECT_GE(d.source + d.distance, 1.0);
    EXPECT_LE(d.source + d.distance, 38.0);
  }
}

TEST(TimeWarp, StepEdgeMovesByDistance) {
  const Index tau = 100;
  for (Index t0 : {30, 50, 70}) {
    for (int k : {-12, -5, 3, 9}) {
      const auto m = step_mel(8, tau, t0, 1.0f, 5.0f);
      const auto out = time_warp(m, WarpDraw{t0, static_cast<double>(k)});
      const Index edge = max_adjacent_diff_frame(out);
      EXPECT_LE(std::abs(edge - (t0 + k)), 1) << "t0=" << t0 << " k=" << k;
    }
  }
}

TEST(TimeWarp, ShortInputIsAnError) {
  EXPECT_THROW(time_warp(test::constant_mel(10, 7, 0.0f), 0.1, AugSeed{1}), InputTooShort);
}

TEST(TimeMask, ChangedCellsBoundedByRecordedDraws) {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = test::random_mel(gen, 80, 60);
    const auto draws = draw_masks(60, 12, 3, AugSeed{static_cast<std::uint64_t>(trial)});
    const auto out = apply_time_masks(m, draws);
    Index width_sum = 0;
    for (const auto& d : draws) {
      EXPECT_LE(d.width, 12);
      EXPECT_LE(d.start + d.width, 60);
      width_sum += d.width;
    }
    const Index changed = (out.values.array() != m.values.array()).count();
    EXPECT_LE(changed, 80 * width_sum);
    const float lo = m.values.minCoeff();
    for (Index t = 0; t < 60; ++t) {
      bool masked = false;
      for (const auto& d : draws) masked |= t >= d.start && t < d.start + d.width;
      if (masked)
        EXPECT_TRUE((out.values.col(t).array() == lo).all());
      else
        EXPECT_TRUE(out.values.col(t) == m.values.col(t));
    }
  }
}

TEST(FreqMask, UnmaskedRowsUnchangedAndConstantInputFixed) {
  std::mt19937_64 gen(17);
  const auto m = test::random_mel(gen, 80, 30);
  const auto draws = draw_masks(80, 10, 2, AugSeed{5});
  const auto out = apply_freq_masks(m, draws);
  for (Index r = 0; r < 80; ++r) {
    bool masked = false;
    for (const auto& d : draws) masked |= r >= d.start && r < d.start + d.width;
    if (!masked) EXPECT_TRUE(out.values.row(r) == m.values.row(r)) << r;
  }
  const auto c = test::constant_mel(80, 30, -2.5f);
  EXPECT_TRUE(freq_mask(c, 20, 4, AugSeed{3}) == c);
}

TEST(Masks, WidthBeyondAxisIsAnError) {
  const auto m = test::constant_mel(10, 20, 0.0f);
  EXPECT_THROW(freq_mask(m, 11, 1, AugSeed{1}), ParamOutOfRange);
  EXPECT_THROW(time_mask(m, 21, 1, AugSeed{1}), ParamOutOfRange);
  EXPECT_NO_THROW(time_mask(m, 20, 1, AugSeed{1}));
}

TEST(FreqWarp, SingleHotPeakMoves) {
  const Index nu = 80;
  for (Index r : {20, 40, 55}) {
    for (int k : {-4, -1, 2, 4}) {
      MelSpectrogram m = test::constant_mel(nu, 5, 0.0f);
      m.values.row(r).setConstant(1.0f);
      const auto out = freq_warp(m, WarpDraw{r, static_cast<double>(k)});
      for (Index t = 0; t < 5; ++t) {
        Index peak;
        out.values.col(t).maxCoeff(&peak);
        EXPECT_EQ(peak, r + k) << "r=" << r << " k=" << k;
      }
      EXPECT_TRUE(out.values.row(0) == m.values.row(0));
      EXPECT_TRUE(out.values.row(nu - 1) == m.values.row(nu - 1));
    }
  }
}

TEST(FreqWarp, FramesAreIndependent) {
  std::mt19937_64 gen(23);
  const auto m = test::random_mel(gen, 80, 12);
  auto perturbed = m;
  perturbed.values.col(3).setConstant(9.0f);
  const auto a = freq_warp(m, 4, AugSeed{11});
  const auto b = freq_warp(perturbed, 4, AugSeed{11});
  for (Index t = 0; t < 12; ++t)
    if (t != 3) EXPECT_TRUE(a.values.col(t) == b.values.col(t)) << t;
}

TEST(FreqWarp, DrawsAreIntegersInRange) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto d = draw_freq_warp(80, 4, AugSeed{s});
    EXPECT_GE(d.source, 20);
    EXPECT_LE(d.source, 60);
    EXPECT_EQ(d.distance, std::round(d.distance));
    EXPECT_LE(std::abs(d.distance), 4.0);
  }
}

TEST(LoudnessCtl, MinimumFixedAndRangeScaled) {
  std::mt19937_64 gen(31);
  const auto m = test::random_mel(gen, 80, 40);
  for (double lambda : {0.0, 0.1, 0.5, 1.0}) {
    const auto out = loudness_ctl_at(m, lambda);
    EXPECT_EQ(out.values.minCoeff(), m.values.minCoeff());
    const double range_in = m.values.maxCoeff() - m.values.minCoeff();
    const double range_out = out.values.maxCoeff() - out.values.minCoeff();
    EXPECT_NEAR(range_out, (1.0 - lambda) * range_in, 1e-5);
  }
  for (std::uint64_t s = 0; s < 100; ++s) {
    const double l = draw_loudness(0.16, AugSeed{s});
    EXPECT_GE(l, 0.0);
    EXPECT_LE(l, 0.16);
  }
}

TEST(TimeLenCtl, TargetLengthArithmetic) {
  EXPECT_EQ(time_len_target(100, 12.0), 112);
  EXPECT_EQ(time_len_target(100, -12.4), 88);
  EXPECT_EQ(time_len_target(3, -5.0), 2);
  EXPECT_EQ(time_len_ctl_at(test::constant_mel(4, 100, 0.0f), 12.0).mel.tau(), 112);
}

TEST(TimeLenCtl, LengthMatchesDrawnDistance) {
  std::mt19937_64 gen(41);
  std::uniform_int_distribution<Index> len(20, 400);
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto m = test::constant_mel(4, len(gen), 1.0f);
    const auto r = time_len_ctl(m, 0.3, AugSeed{s});
    EXPECT_LE(std::abs(r.drawn_l), 0.3 * m.tau() + 1e-9);
    EXPECT_EQ(r.mel.tau(), std::max<Index>(2, std::llround(m.tau() + r.drawn_l)));
  }
}

TEST(TimeLenCtl, ConstantStaysConstant) {
  const auto m = test::constant_mel(6, 50, -3.25f);
  for (double l : {-20.0, -3.3, 0.0, 7.7, 30.0}) {
    const auto out = time_len_ctl_at(m, l).mel;
    EXPECT_TRUE((out.values.array() == -3.25f).all()) << l;
  }
}

TEST(TimeLenCtl, PairUsesOneRatio) {
  const auto src = test::constant_mel(4, 200, 0.0f);
  const auto tgt = test::constant_mel(4, 180, 0.0f);
  const auto forced = time_len_ctl_pair_at(src, tgt, 0.10);
  EXPECT_EQ(forced.source.tau(), 220);
  EXPECT_EQ(forced.target.tau(), 198);
  const auto zero = time_len_ctl_pair(src, tgt, 0.0, AugSeed{1});
  EXPECT_TRUE(zero.source == src);
  EXPECT_TRUE(zero.target == tgt);
}

TEST(TimeLenCtl, PairPreservesProportion) {
  std::mt19937_64 gen(43);
  std::uniform_int_distribution<Index> len(20, 600);
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto src = test::constant_mel(2, len(gen), 0.0f);
    const auto tgt = test::constant_mel(2, len(gen), 0.0f);
    const auto r = time_len_ctl_pair(src, tgt, 0.2, AugSeed{s});
    EXPECT_LE(std::abs(r.ratio), 0.2);
    const double exact_src = src.tau() * (1.0 + r.ratio);
    const double exact_tgt = tgt.tau() * (1.0 + r.ratio);
    EXPECT_LE(std::abs(r.source.tau() - exact_src), 1.0);
    EXPECT_LE(std::abs(r.target.tau() - exact_tgt), 1.0);
  }
}

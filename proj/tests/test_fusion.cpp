/* Copyright 2026 The ydfusion Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#include <gtest/gtest.h>

#include "ydfusion/fusion.hpp"

using ydf::CyclotomicField;
using ydf::Kind;
using ydf::V1;
using ydf::V2;

TEST(FusionTest, FusionMapExamples) {
  for (int p = 2; p <= 5; ++p) {
    const auto& f = CyclotomicField::get(p);
    for (int a = 0; a < 2 * p; ++a)
      for (int b = 0; b < 2 * p; ++b) {
        EXPECT_TRUE(ydf::equal(ydf::fusion_map(f, V1(a, 0), V1(b, 0)), ydf::unit_vector(f, V2(a, b, 0, 0))));
        ydf::YDVec expected{{V2(a, b, 0, 1), f.one()}, {V2(a, b, 1, 0), f.q_pow(-a)}};
        EXPECT_TRUE(ydf::equal(ydf::fusion_map(f, V1(a, 0), V1(b, 1)), expected));
      }
  }
}

TEST(FusionTest, FusionMapIsMorphism) {
  for (int p = 2; p <= 5; ++p) EXPECT_EQ(ydf::check_fusion_intertwines(p), 0) << "p=" << p;
}

TEST(FusionTest, RibbonThroughFusion) {
  for (int p = 2; p <= 4; ++p) {
    const auto rep = ydf::check_ribbon_through_fusion(p);
    EXPECT_GT(rep.pairs, 0);
    EXPECT_TRUE(rep.ok()) << "p=" << p << " failures=" << rep.failures;
  }
}

TEST(FusionTest, ClosedFormExamples) {
  for (int p = 2; p <= 5; ++p)
    for (int r = 1; r <= p; ++r)
      for (int nu = 0; nu < 4; ++nu) {
        const auto res = ydf::fuse_closed(1, 0, r, nu, p);
        ASSERT_EQ(res.summands.size(), 1u);
        EXPECT_EQ(res.summands[0].key(), std::make_tuple(Kind::X, r, nu));
      }
  auto res = ydf::fuse_closed(2, 0, 2, 0, 2);
  ASSERT_EQ(res.summands.size(), 1u);
  EXPECT_EQ(res.summands[0].key(), std::make_tuple(Kind::P, 1, 0));
  EXPECT_EQ(res.dimension(), 4);
  res = ydf::fuse_closed(2, 0, 2, 0, 3);
  ASSERT_EQ(res.summands.size(), 2u);
  EXPECT_EQ(res.summands[0].key(), std::make_tuple(Kind::X, 1, 0));
  EXPECT_EQ(res.summands[1].key(), std::make_tuple(Kind::X, 3, 0));
  EXPECT_THROW(ydf::fuse_closed(0, 0, 1, 0, 3), std::invalid_argument);
  EXPECT_THROW(ydf::fuse_closed(4, 0, 1, 0, 3), std::invalid_argument);
}

TEST(FusionTest, ClosedFormMatchesBruteForce) {
  for (int p = 2; p <= 5; ++p)
    for (int r1 = 1; r1 <= p; ++r1)
      for (int nu1 = 0; nu1 < 4; ++nu1)
        for (int r2 = 1; r2 <= p; ++r2)
          for (int nu2 = 0; nu2 < 4; ++nu2) {
            const auto c = ydf::fuse_simples(r1, nu1, r2, nu2, p);
            EXPECT_TRUE(c.agree) << c.closed.to_string() << " brute " << c.brute.result.to_string();
            EXPECT_TRUE(c.brute.injective);
            EXPECT_TRUE(c.brute.exhausted);
            EXPECT_TRUE(c.brute.extensions_ok);
          }
}

// Products are symmetric and dimensions multiply.
TEST(FusionTest, CommutativeAndDimensional) {
  for (int p = 2; p <= 6; ++p)
    for (int r1 = 1; r1 <= p; ++r1)
      for (int r2 = 1; r2 <= p; ++r2)
        for (int nu = 0; nu < 4; ++nu) {
          const auto x = ydf::fuse_closed(r1, nu, r2, 1, p);
          const auto y = ydf::fuse_closed(r2, 1, r1, nu, p);
          EXPECT_TRUE(x.same_summands(y));
          EXPECT_EQ(x.dimension(), r1 * r2);
        }
}

// Non-representative charges give isomorphic decompositions.
TEST(FusionTest, NonRepresentativeCharges) {
  for (int p = 2; p <= 4; ++p)
    for (long a = -2 * p; a < 2 * p; ++a)
      for (long b = -2 * p; b < 2 * p; b += 3) {
        const auto brute = ydf::fuse_brute_charges(a, b, p);
        EXPECT_TRUE(brute.ok());
        const auto& r = brute.result;
        const auto closed = ydf::fuse_closed(r.r1, r.nu1, r.r2, r.nu2, p);
        ASSERT_EQ(closed.summands.size(), r.summands.size());
        for (std::size_t i = 0; i < r.summands.size(); ++i)
          EXPECT_TRUE(ydf::iso_check(closed.summands[i], r.summands[i], ydf::IsoMode::braided));
      }
}

// At a = b = 0 the double braiding of V^0_0 (x) V^0_1 is the identity, so
// the fused image is V_{0,1} + V_{1,0}.  The closed form carries 2 V_{1,0}.
TEST(FusionTest, MonodromyCounterexample) {
  const auto& f = CyclotomicField::get(2);
  const ydf::TensorVec x{{{V1(0, 0), V1(0, 1)}, f.one()}};
  EXPECT_TRUE(ydf::equal(ydf::braid_B2(f, x), x));
  const ydf::YDVec image = ydf::fusion_map(f, ydf::braid_B2(f, x));
  EXPECT_TRUE(ydf::equal(image, ydf::YDVec{{V2(0, 0, 0, 1), f.one()}, {V2(0, 0, 1, 0), f.one()}}));
  const ydf::YDVec closed = ydf::monodromy_closed_form(f, 0, 0, 0, 1);
  EXPECT_TRUE(ydf::equal(closed, ydf::YDVec{{V2(0, 0, 0, 1), f.one()}, {V2(0, 0, 1, 0), f.integer(2)}}));
}

TEST(FusionTest, MonodromyReportCounts) {
  for (int p = 2; p <= 4; ++p) {
    const auto m = ydf::check_monodromy(p);
    EXPECT_EQ(m.pairs, 4L * p * p * p * p);
    EXPECT_LE(m.fused_matches, m.pairs);
  }
}

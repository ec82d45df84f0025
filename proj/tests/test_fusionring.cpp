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
#include <random>

#include <gtest/gtest.h>

#include "ydfusion/fusionring.hpp"

using ydf::RingElt;

TEST(FusionRingTest, Examples) {
  for (int p = 2; p <= 6; ++p)
    for (int r = 1; r <= p; ++r)
      for (int nu = 0; nu < 2; ++nu) {
        const auto x = RingElt::X(r, nu, p);
        EXPECT_EQ(ydf::ring_multiply(RingElt::X(1, 0, p), x), x);
      }
  const auto p2 = ydf::ring_multiply(RingElt::X(2, 0, 2), RingElt::X(2, 0, 2));
  EXPECT_EQ(p2, RingElt::P(1, 0, 2));
  EXPECT_EQ(p2.coeff(1, 0), 2);
  EXPECT_EQ(p2.coeff(1, 1), 2);
  EXPECT_EQ(ydf::ring_multiply(RingElt::X(2, 0, 3), RingElt::X(2, 0, 3)), RingElt::X(1, 0, 3) + RingElt::X(3, 0, 3));
  EXPECT_EQ(RingElt::P(4, 1, 4), RingElt::X(4, 1, 4));
  EXPECT_EQ(RingElt::X(2, 3, 4), RingElt::X(2, 1, 4));
  EXPECT_THROW(RingElt::X(5, 0, 4), std::invalid_argument);
  EXPECT_EQ(p2.to_string(), "2*X(1)_0 + 2*X(1)_1");
}

TEST(FusionRingTest, SimpleCurrent) {
  for (int p = 2; p <= 10; ++p) {
    const auto j = RingElt::X(1, 1, p);
    EXPECT_EQ(ydf::ring_multiply(j, j), RingElt::X(1, 0, p));
    for (int r = 1; r <= p; ++r) EXPECT_EQ(ydf::ring_multiply(j, RingElt::X(r, 0, p)), RingElt::X(r, 1, p));
  }
}

TEST(FusionRingTest, RingAxioms) {
  for (int p = 2; p <= 10; ++p) {
    const auto rep = ydf::verify_ring(p);
    EXPECT_TRUE(rep.ok()) << rep.first_failure;
  }
}

// P(s)_nu mixes nu and nu + 1, so nu alone does not grade the ring.
TEST(FusionRingTest, NuIsNotAGrading) {
  const auto prod = ydf::ring_multiply(RingElt::X(2, 0, 3), RingElt::X(3, 0, 3));
  EXPECT_GT(prod.coeff(2, 0), 0);
  EXPECT_GT(prod.coeff(1, 1), 0);
}

// Random integer combinations: bilinearity and associativity.
TEST(FusionRingTest, RandomElements) {
  std::mt19937 rng(3);
  for (int p = 2; p <= 8; ++p) {
    std::uniform_int_distribution<int> pick(1, p), bit(0, 1), coef(-3, 3);
    auto random_elt = [&] {
      RingElt x;
      x.p = p;
      for (int k = 0; k < 4; ++k) x += RingElt::X(pick(rng), bit(rng), p).scaled(coef(rng));
      return x;
    };
    for (int trial = 0; trial < 10; ++trial) {
      const auto x = random_elt(), y = random_elt(), z = random_elt();
      EXPECT_EQ(ydf::ring_multiply(ydf::ring_multiply(x, y), z), ydf::ring_multiply(x, ydf::ring_multiply(y, z)));
      EXPECT_EQ(ydf::ring_multiply(x, y + z), ydf::ring_multiply(x, y) + ydf::ring_multiply(x, z));
      EXPECT_EQ(ydf::ring_multiply(x, y), ydf::ring_multiply(y, x));
    }
  }
}

TEST(FusionRingTest, AgreesWithModules) {
  for (int p = 2; p <= 5; ++p) {
    const auto rep = ydf::verify_against_fusion(p);
    EXPECT_TRUE(rep.ok()) << rep.first_failure;
  }
}

TEST(FusionRingTest, LambdaCharacters) {
  for (int p = 2; p <= 4; ++p) {
    const auto rep = ydf::verify_against_lambda(p);
    EXPECT_TRUE(rep.ok()) << rep.first_failure;
  }
}

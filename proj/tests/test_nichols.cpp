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

#include "ydfusion/nichols.hpp"
#include "ydfusion/verify.hpp"

using ydf::CyclotomicField;
using ydf::NicholsElt;

TEST(NicholsTest, ProductExamples) {
  for (int p = 2; p <= 5; ++p) {
    const auto& f = CyclotomicField::get(p);
    for (int r = 0; r < p; ++r) EXPECT_TRUE(ydf::equal(ydf::product(f, ydf::F(f, 0), ydf::F(f, r)), ydf::F(f, r)));
  }
  const auto& f3 = CyclotomicField::get(3);
  EXPECT_TRUE(ydf::equal(ydf::product(f3, ydf::F(f3, 1), ydf::F(f3, 1)), ydf::F(f3, 2, f3.q_int(2))));
  EXPECT_TRUE(ydf::product(f3, ydf::F(f3, 1), ydf::F(f3, 2)).empty());
  EXPECT_TRUE(f3.q_binom(3, 1).is_zero());
}

TEST(NicholsTest, CoproductIsDeconcatenation) {
  const auto& f = CyclotomicField::get(4);
  auto d0 = ydf::coproduct(f, ydf::F(f, 0));
  EXPECT_EQ(d0.size(), 1u);
  EXPECT_TRUE(d0.at({0, 0}).is_one());
  auto d2 = ydf::coproduct(f, ydf::F(f, 2));
  EXPECT_EQ(d2.size(), 3u);
  for (int s = 0; s <= 2; ++s) EXPECT_TRUE(d2.at({s, 2 - s}).is_one());
}

TEST(NicholsTest, AntipodeValues) {
  for (int p = 2; p <= 6; ++p) {
    const auto& f = CyclotomicField::get(p);
    EXPECT_TRUE(ydf::antipode_scalar(f, 0).is_one());
    EXPECT_EQ(ydf::antipode_scalar(f, 1), f.integer(-1));
    for (int r = 0; r < p; ++r) {
      auto twice = ydf::antipode(f, ydf::antipode(f, ydf::F(f, r)));
      EXPECT_TRUE(ydf::equal(twice, ydf::F(f, r, f.q_pow(2L * r * (r - 1)))));
      auto back = ydf::antipode_inv(f, ydf::antipode(f, ydf::F(f, r)));
      EXPECT_TRUE(ydf::equal(back, ydf::F(f, r)));
      EXPECT_EQ(ydf::counit(ydf::F(f, r)), r == 0 ? f.one() : f.zero());
    }
  }
}

TEST(NicholsTest, DividedPowers) {
  for (int p = 2; p <= 6; ++p) {
    const auto& f = CyclotomicField::get(p);
    for (int r = 0; r < p; ++r)
      EXPECT_TRUE(ydf::equal(ydf::generator_power(f, r), ydf::F(f, r, f.q_fact(r)))) << "p=" << p << " r=" << r;
    EXPECT_TRUE(ydf::generator_power(f, p).empty());
  }
}

TEST(NicholsTest, HopfAxiomsExhaustive) {
  for (int p = 2; p <= 6; ++p) {
    auto report = ydf::check_hopf_axioms(p);
    EXPECT_TRUE(report.ok()) << report.summary();
    EXPECT_GT(report.checked, 0);
  }
}

TEST(NicholsTest, ShuffleOracle) {
  const auto& f = CyclotomicField::get(4);
  EXPECT_TRUE(ydf::shuffle_product_oracle(f, 1, 0).is_one());
  EXPECT_EQ(ydf::shuffle_product_oracle(f, 1, 1), f.one() + f.q_pow(2));
  for (int p = 2; p <= 5; ++p) {
    const auto& g = CyclotomicField::get(p);
    for (int r = 0; r <= 6; ++r)
      for (int s = 0; r + s <= 6; ++s)
        EXPECT_EQ(ydf::shuffle_product_oracle(g, r, s), g.q_binom(r + s, r)) << p << " " << r << " " << s;
  }
  EXPECT_THROW(ydf::shuffle_product_oracle(f, 15, 6), std::invalid_argument);
}

TEST(NicholsTest, HalfTwistOracle) {
  const auto& f = CyclotomicField::get(3);
  EXPECT_TRUE(ydf::half_twist_oracle(f, 0).is_one());
  EXPECT_EQ(ydf::half_twist_oracle(f, 1), f.integer(-1));
  for (int p = 2; p <= 7; ++p) {
    const auto& g = CyclotomicField::get(p);
    for (int r = 0; r < p; ++r) EXPECT_EQ(ydf::half_twist_oracle(g, r), ydf::antipode_scalar(g, r));
    EXPECT_THROW(ydf::half_twist_oracle(g, p), std::invalid_argument);
  }
}

// The braided product on B_p (x) B_p is associative; a property of the
// braiding scalar being a bicharacter.
TEST(NicholsTest, BraidedTensorProductAssociative) {
  const auto& f = CyclotomicField::get(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        auto x = ydf::tensor(ydf::F(f, a % 2), ydf::F(f, a / 2));
        auto y = ydf::tensor(ydf::F(f, b % 2), ydf::F(f, b / 2));
        auto z = ydf::tensor(ydf::F(f, c / 2), ydf::F(f, c % 2));
        auto left = ydf::braided_tensor_product(f, ydf::braided_tensor_product(f, x, y), z);
        auto right = ydf::braided_tensor_product(f, x, ydf::braided_tensor_product(f, y, z));
        EXPECT_TRUE(ydf::equal(left, right));
      }
}

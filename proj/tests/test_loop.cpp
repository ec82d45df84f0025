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

#include "ydfusion/loop.hpp"

using ydf::CyclotomicField;
using ydf::Kind;
using ydf::V1;

TEST(LoopTest, PairingValues) {
  const auto& f = CyclotomicField::get(2);
  EXPECT_EQ(ydf::ev_one_vertex(f, V1(2, 1), V1(0, 0)), f.integer(-1));
  EXPECT_TRUE(ydf::ev_one_vertex(f, V1(2, 0), V1(0, 0)).is_zero());
  EXPECT_TRUE(ydf::ev_one_vertex(f, V1(1, 1), V1(0, 0)).is_zero());
  // charges only matter mod 4p
  EXPECT_EQ(ydf::ev_one_vertex(f, V1(2, 1), V1(8, 0)), f.integer(-1));
  EXPECT_THROW(ydf::ev_one_vertex(f, ydf::V2(0, 0, 0, 0), V1(0, 0)), std::invalid_argument);
}

TEST(LoopTest, DualityChecks) {
  for (int p = 2; p <= 5; ++p) {
    const auto z = ydf::check_zigzag(p);
    EXPECT_TRUE(z.ok()) << "p=" << p << " failed " << z.failed;
  }
  for (int p = 2; p <= 4; ++p) {
    EXPECT_TRUE(ydf::check_ev_coev_morphisms(p).ok()) << p;
    EXPECT_TRUE(ydf::check_one_vertex_identification(p).ok()) << p;
    EXPECT_TRUE(ydf::check_two_vertex_identification(p).ok()) << p;
    EXPECT_TRUE(ydf::check_c_symmetry(p).ok()) << p;
    EXPECT_TRUE(ydf::check_dual_descriptors(p).ok()) << p;
  }
}

TEST(LoopTest, DualDescriptorExamples) {
  const int p = 5;
  auto x = ydf::make_descriptor(Kind::X, 3, 1);
  EXPECT_EQ(ydf::dual_descriptor(x, p).key(), std::make_tuple(Kind::X, 3, 3));
  auto v = ydf::make_descriptor(Kind::V, 2, 0);
  EXPECT_EQ(ydf::dual_descriptor(v, p).key(), std::make_tuple(Kind::V, 3, 3));
  auto l = ydf::classify_coinvariant(0, 0, 2, p);
  const auto dp = ydf::dual_descriptor(ydf::extend_to_P(l), p);
  EXPECT_EQ(dp.key(), std::make_tuple(Kind::P, 2, 1));
  EXPECT_EQ(dp.a, -2);
  EXPECT_EQ(dp.b, -2);
  EXPECT_EQ(dp.t, 0);
}

TEST(LoopTest, Sigma2) {
  for (int p = 2; p <= 4; ++p) {
    const auto& f = CyclotomicField::get(p);
    for (int a = 0; a < 2 * p; ++a) {
      const auto v0 = ydf::unit_vector(f, V1(a, 0));
      EXPECT_TRUE(ydf::equal(ydf::sigma2(f, v0), v0));
      // delta V^a_1 = 1 (x) V^a_1 + F (x) V^a_0 and A(F) = -F
      auto expected = ydf::unit_vector(f, V1(a, 1));
      ydf::add_scaled(expected, ydf::act_F(f, V1(a, 0)), f.integer(-1));
      EXPECT_TRUE(ydf::equal(ydf::sigma2(f, ydf::unit_vector(f, V1(a, 1))), expected));
    }
    EXPECT_TRUE(ydf::check_sigma2_intertwining(p).ok()) << p;
  }
}

TEST(LoopTest, LambdaIdentities) {
  for (int p = 2; p <= 6; ++p) {
    const auto& f = CyclotomicField::get(p);
    for (int rp = 1; rp <= p; ++rp)
      for (int nup = 0; nup < 4; ++nup) EXPECT_TRUE(ydf::lambda_closed(rp, nup, 1, 0, p).is_one());
    for (int rp = 1; rp < p; ++rp)
      for (int nup = 0; nup < 4; ++nup)
        for (int r = 1; r <= p; ++r)
          for (int nu = 0; nu < 4; ++nu) {
            const auto l = ydf::lambda_closed(rp, nup, r, nu, p);
            EXPECT_EQ(l, ydf::lambda_ratio(rp, nup, r, nu, p));
            EXPECT_EQ(l, ydf::lambda_closed(p - rp, nup + 1, r, nu, p));
            EXPECT_EQ(l, ydf::lambda_closed(rp, nup + 2, r, nu + 2, p));
            EXPECT_EQ(ydf::mu_closed(rp, nup, r, nu, p), ydf::mu_closed(rp, nup + 2, r, nu + 2, p));
          }
    EXPECT_THROW(ydf::mu_closed(p, 0, 1, 0, p), std::invalid_argument);
    EXPECT_THROW(ydf::lambda_closed(0, 0, 1, 0, p), std::invalid_argument);
    EXPECT_EQ(ydf::lambda_steinberg(0, 2, 0, p), f.integer(-2));
    EXPECT_EQ(ydf::lambda_steinberg(1, 2, 0, p), f.integer(2));
  }
}

TEST(LoopTest, ChiOnSimples) {
  for (int p = 2; p <= 4; ++p)
    for (int rp = 1; rp <= p; ++rp)
      for (int nup = 0; nup < 4; ++nup)
        for (int r = 1; r <= p; ++r)
          for (int nu = 0; nu < 4; ++nu) {
            const auto a = ydf::chi_on_simple(rp, nup, r, nu, p);
            EXPECT_TRUE(a.scalar);
            EXPECT_TRUE(a.commutes);
            EXPECT_TRUE(a.forms_agree);
            const auto expected = rp == p ? ydf::lambda_steinberg(nup, r, nu, p) : ydf::lambda_closed(rp, nup, r, nu, p);
            EXPECT_EQ(a.lambda, expected) << p << " " << rp << " " << nup << " " << r << " " << nu;
          }
}

// On P the loop operator is lambda id + mu N.  lambda is the closed value;
// mu equals the closed value times (-1)^nu' q^{1-r'} on the u, v basis.
TEST(LoopTest, ChiOnProjectives) {
  for (int p = 2; p <= 4; ++p)
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        for (int t = 0; t < p; ++t) {
          if (ydf::classify_coinvariant(a, b, t, p).kind != Kind::L) continue;
          const auto c = ydf::check_chi_on_P(a, t, b, p);
          EXPECT_EQ(c.cases, 4 * p);
          EXPECT_EQ(c.form_fail, 0) << c.first_failure;
          EXPECT_EQ(c.lambda_fail, 0) << c.first_failure;
          EXPECT_EQ(c.mu_scaled_fail, 0) << c.first_failure;
        }
  EXPECT_THROW(ydf::check_chi_on_P(0, 0, 0, 3), std::invalid_argument);
  EXPECT_FALSE(ydf::chi_on_projective(0, 0, 0, 1, 0, 3).precondition);
}

TEST(LoopTest, Multiplicativity) {
  for (int p = 2; p <= 4; ++p)
    for (int rw = 1; rw <= p; ++rw)
      for (int nuw = 0; nuw < 2; ++nuw)
        for (int rz = 1; rz <= p; ++rz)
          for (int nuz = 0; nuz < 2; ++nuz)
            for (int ry = 1; ry <= p; ++ry)
              for (int nuy = 0; nuy < 2; ++nuy)
                EXPECT_TRUE(ydf::verify_multiplicativity(rw, nuw, rz, nuz, ry, nuy, p))
                    << p << ": " << rw << nuw << " " << rz << nuz << " " << ry << nuy;
}

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
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "ydfusion/cyclo.hpp"

using ydf::CycNum;
using ydf::CyclotomicField;

namespace {

CycNum random_element(const CyclotomicField& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  CycNum x;
  for (int k = 0; k < f.degree(); ++k) x += f.rational(mpq_class(coef(rng), den(rng))) * f.zeta_pow(k);
  return x;
}

}  // namespace

TEST(CycloTest, CyclotomicPolynomials) {
  EXPECT_EQ(ydf::cyclotomic_polynomial(8), (std::vector<long>{1, 0, 0, 0, 1}));
  EXPECT_EQ(ydf::cyclotomic_polynomial(12), (std::vector<long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(ydf::euler_phi(20), 8);
  EXPECT_EQ(ydf::euler_phi(28), 12);
}

TEST(CycloTest, ZetaPowers) {
  for (int p = 2; p <= 7; ++p) {
    const auto& f = CyclotomicField::get(p);
    EXPECT_TRUE(f.zeta_pow(0).is_one());
    EXPECT_EQ(f.zeta_pow(2 * p), f.integer(-1)) << "p=" << p;
    EXPECT_TRUE(f.zeta_pow(4 * p).is_one());
    EXPECT_EQ(f.q_pow(p), f.integer(-1));
    for (int a = -9; a <= 9; ++a)
      for (int b = -9; b <= 9; b += 3) EXPECT_EQ(f.zeta_pow(a) * f.zeta_pow(b), f.zeta_pow(a + b));
  }
  const auto& f2 = CyclotomicField::get(2);
  const CycNum q = f2.zeta_pow(2);
  EXPECT_EQ(q.coefficients(), (std::vector<mpq_class>{0, 0, 1, 0}));
  EXPECT_EQ(q * q, f2.integer(-1));
}

TEST(CycloTest, QIntegers) {
  for (int p = 2; p <= 7; ++p) {
    const auto& f = CyclotomicField::get(p);
    EXPECT_TRUE(f.q_int(0).is_zero());
    EXPECT_TRUE(f.q_int(1).is_one());
    EXPECT_TRUE(f.q_int(p).is_zero()) << "p=" << p;
    // [[-1]] = -q^{-2}
    EXPECT_EQ(f.q_int(-1), -f.q_pow(-2));
    for (int n = -2 * p; n <= 2 * p; ++n) {
      // (q^2 - 1)[[n]] = q^{2n} - 1
      EXPECT_EQ((f.q_pow(2) - f.one()) * f.q_int(n), f.q_pow(2 * n) - f.one());
    }
  }
}

TEST(CycloTest, QBinomials) {
  const auto& f2 = CyclotomicField::get(2);
  EXPECT_TRUE(f2.q_binom(2, 1).is_zero());
  EXPECT_EQ(f2.q_binom(2, 1), f2.q_int(2));
  for (int p = 2; p <= 7; ++p) {
    const auto& f = CyclotomicField::get(p);
    for (int n = 0; n < 2 * p; ++n) {
      EXPECT_TRUE(f.q_binom(n, 0).is_one());
      EXPECT_TRUE(f.q_binom(n, n + 1).is_zero());
      EXPECT_TRUE(f.q_binom(n, -1).is_zero());
    }
    for (int n = 0; n < p; ++n)
      for (int k = 0; k <= n; ++k)
        EXPECT_EQ(f.q_binom(n, k) * f.q_fact(k) * f.q_fact(n - k), f.q_fact(n)) << p << " " << n << " " << k;
    EXPECT_TRUE(f.q_fact(p).is_zero());
    EXPECT_THROW(f.q_fact(-1), std::invalid_argument);
  }
}

TEST(CycloTest, XiAndInverse) {
  for (int p = 2; p <= 7; ++p) {
    const auto& f = CyclotomicField::get(p);
    EXPECT_TRUE(f.one().inv().is_one());
    EXPECT_TRUE((f.xi() * f.xi().inv()).is_one());
    EXPECT_THROW(f.zero().inv(), ydf::DivisionByZero);
    EXPECT_THROW(CycNum().inv(), ydf::DivisionByZero);
  }
  const auto& f3 = CyclotomicField::get(3);
  EXPECT_NEAR(std::abs(f3.xi().to_complex()), 1.7320508, 1e-7);
}

TEST(CycloTest, RingAxiomsRandom) {
  std::mt19937 rng(20261018);
  for (int p = 2; p <= 7; ++p) {
    const auto& f = CyclotomicField::get(p);
    for (int trial = 0; trial < 20; ++trial) {
      const CycNum x = random_element(f, rng), y = random_element(f, rng), z = random_element(f, rng);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ(x + y, y + x);
      EXPECT_TRUE((x - x).is_zero());
      if (!x.is_zero()) EXPECT_TRUE((x * x.inv()).is_one());
      const auto approx = x.to_complex() * y.to_complex();
      EXPECT_LT(std::abs((x * y).to_complex() - approx), 1e-9);
    }
  }
}

TEST(CycloTest, ComplexEmbedding) {
  for (int p = 2; p <= 7; ++p) {
    const auto& f = CyclotomicField::get(p);
    for (int k = 0; k < 4 * p; ++k) {
      const auto expect = std::polar(1.0, std::numbers::pi * k / (2.0 * p));
      EXPECT_LT(std::abs(f.zeta_pow(k).to_complex() - expect), 1e-9);
    }
  }
}

TEST(CycloTest, MonomialPrinting) {
  const auto& f = CyclotomicField::get(5);
  mpq_class c;
  int k = 0;
  ASSERT_TRUE((f.integer(-3) * f.zeta_pow(7)).as_monomial(c, k));
  EXPECT_EQ(c * (k == 7 ? 1 : -1), -3);
  EXPECT_FALSE(f.xi().as_monomial(c, k));
  EXPECT_EQ(f.zero().to_string(), "0");
  EXPECT_EQ(f.one().to_string(), "1");
}

TEST(CycloTest, FieldMismatch) {
  EXPECT_THROW(CyclotomicField::get(2).one() + CyclotomicField::get(3).one(), ydf::FieldMismatch);
}

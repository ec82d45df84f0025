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
// Exact arithmetic in the cyclotomic field Q(zeta), zeta = exp(i pi / 2p).
//
// The deformation parameter is q = zeta^2, a primitive 2p-th root of unity,
// so every half-integer power q^{x/2} is the integral power zeta^x.  Elements
// are stored as a polynomial in zeta of degree < phi(4p) reduced modulo the
// 4p-th cyclotomic polynomial, with integer numerators over one common
// positive denominator.  The representation is canonical, so equality and
// zero-testing are coefficient-wise.

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ydf {

class CyclotomicField;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("inverse of zero in cyclotomic field") {}
};

class FieldMismatch : public std::logic_error {
 public:
  FieldMismatch() : std::logic_error("operands live in different cyclotomic fields") {}
};

/// An element of Q(zeta_{4p}).
///
/// A default-constructed CycNum is an unbound zero; it adopts the field of the
/// first bound operand it is combined with.  All other values carry a pointer
/// to their (process-lifetime) field.
class CycNum {
 public:
  CycNum() = default;

  const CyclotomicField* field() const { return field_; }
  bool is_zero() const { return num_.empty(); }
  bool is_one() const;

  /// Rational coefficients c_k of zeta^k, k < phi(4p).  Empty when zero.
  std::vector<mpq_class> coefficients() const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  /// Floating-point image under zeta -> exp(i pi / 2p).  Diagnostic only.
  std::complex<double> to_complex() const;

  /// Returns true when this value equals c * zeta^k for some rational c and
  /// integer k; on success writes them.  Used for compact printing.
  bool as_monomial(mpq_class& c, int& k) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Total order on the canonical form; used only for deterministic containers.
  friend bool operator<(const CycNum& a, const CycNum& b);

  /// Multiplicative inverse; throws DivisionByZero on zero.
  CycNum inv() const;

  std::string to_string() const;

 private:
  friend class CyclotomicField;
  CycNum(const CyclotomicField* f, std::vector<mpz_class> num, mpz_class den);
  void normalize();
  static const CyclotomicField* common(const CycNum& a, const CycNum& b);

  const CyclotomicField* field_ = nullptr;
  std::vector<mpz_class> num_;  // empty <=> zero, otherwise size phi
  mpz_class den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

/// The field Q(zeta_{4p}) for a fixed p >= 2, together with memoized
/// q-integers, q-factorials and q-binomials at q = zeta^2.
///
/// Instances are interned: get(p) always returns the same object, which lives
/// for the rest of the process.  Lookups are thread-safe.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int p);

  int p() const { return p_; }
  int order() const { return 4 * p_; }  // order of zeta
  int degree() const { return phi_; }   // phi(4p)
  const std::vector<long>& cyclotomic_polynomial() const { return cyclo_; }

  CycNum zero() const { return {}; }
  CycNum one() const { return zeta_pow(0); }
  CycNum integer(long n) const;
  CycNum rational(const mpq_class& c) const;

  /// zeta^k, k taken mod 4p.
  CycNum zeta_pow(long k) const;
  /// q^k = zeta^{2k}.
  CycNum q_pow(long k) const { return zeta_pow(2 * k); }
  /// xi = 1 - q^2.
  const CycNum& xi() const { return xi_; }

  /// [[n]] = (q^{2n} - 1)/(q^2 - 1) for any integer n (periodic mod p).
  const CycNum& q_int(long n) const;
  /// [[r]]! = [[1]]...[[r]], zero for r >= p; r < 0 is an error.
  const CycNum& q_fact(long r) const;
  /// q-binomial via the q-Pascal rule; zero when k < 0 or k > n or n < 0.
  CycNum q_binom(long n, long k) const;

  /// Coefficient vector of zeta^k mod Phi_{4p}, k in [0, 4p).
  const std::vector<long>& power_row(int k) const { return powers_[k]; }

 private:
  explicit CyclotomicField(int p);
  void build_binomials(long n_max) const;

  int p_;
  int phi_;
  std::vector<long> cyclo_;               // monic, low degree first
  std::vector<std::vector<long>> powers_;  // zeta^k mod Phi, k < 4p
  CycNum xi_;
  std::vector<CycNum> q_int_;   // index n mod p
  std::vector<CycNum> q_fact_;  // 0..p-1
  mutable std::mutex binom_mutex_;
  mutable std::vector<std::vector<CycNum>> binom_;  // rows n = 0..
};

/// Euler's totient.
int euler_phi(int n);

/// Integer coefficients (low degree first) of the n-th cyclotomic polynomial.
std::vector<long> cyclotomic_polynomial(int n);

}  // namespace ydf

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
// The 2p-dimensional fusion ring on X(r)_nu, r = 1..p, nu in Z_2, with
// integer coefficients.  P(r)_nu is expanded on the spot.

#pragma once

#include <map>
#include <string>
#include <utility>

namespace ydf {

struct RingElt {
  int p = 2;
  std::map<std::pair<int, int>, long> coeffs;  // (r, nu mod 2) -> coefficient, no zeros

  static RingElt X(int r, int nu, int p);
  /// 2 X(r)_nu + 2 X(p-r)_{nu+1} for r < p, X(p)_nu for r = p.
  static RingElt P(int r, int nu, int p);

  long coeff(int r, int nu) const;
  RingElt& operator+=(const RingElt& o);
  friend RingElt operator+(RingElt a, const RingElt& b) { return a += b; }
  friend bool operator==(const RingElt& a, const RingElt& b) { return a.p == b.p && a.coeffs == b.coeffs; }
  RingElt scaled(long k) const;
  bool is_zero() const { return coeffs.empty(); }
  std::string to_string() const;
};

RingElt ring_multiply(const RingElt& x, const RingElt& y);

struct RingReport {
  long checked = 0;
  long failed = 0;
  std::string first_failure;
  void record(bool ok, const std::string& what);
  bool ok() const { return checked > 0 && failed == 0; }
};

/// Commutativity, associativity over all (2p)^3 basis triples, unit,
/// non-negative structure constants, X(1)_1^2 = X(1)_0, and the Z_2
/// grading by the parity of r - 1 - nu p.  nu alone is not a grading:
/// P(s)_nu has X(p-s)_{nu+1} in it.
RingReport verify_ring(int p);
/// The closed and brute-force module decompositions for all r1, r2 and
/// nu1, nu2 in 0..3, mapped into the ring, equal ring_multiply.
RingReport verify_against_fusion(int p);
/// For every simple Y the map X(r)_nu -> lambda(Y; X(r)_nu), read off the
/// loop operator matrices, is a ring character.
RingReport verify_against_lambda(int p);

}  // namespace ydf

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
// Fusion of one-vertex modules into the two-vertex space and the
// decomposition of X(r1) (x) X(r2).

#pragma once

#include <string>
#include <vector>

#include "ydfusion/classify.hpp"
#include "ydfusion/ydspace.hpp"

namespace ydf {

/// V^a_s (x) V^b_t -> sum_{i=0}^{t} q^{-ai} [[s+i over s]] V^{a,b}_{s+i,t-i}.
YDVec fusion_map(const CyclotomicField& f, const BasisVector& y, const BasisVector& z);
YDVec fusion_map(const CyclotomicField& f, const TensorVec& x);

/// Closed-form double braiding of V^a_s (x) V^b_t, written in the two-vertex
/// basis; terms with a cross count >= p are dropped.
YDVec monodromy_closed_form(const CyclotomicField& f, int a, int b, int s, int t);

struct MonodromyReport {
  int p = 0;
  long pairs = 0;
  long fused_matches = 0;     // fusion_map(B^2(y (x) z)) == closed form
  long embedded_matches = 0;  // B^2(y (x) z) read directly as V^{a,b}_{s',t'}
  std::string first_mismatch;

  bool fused_ok() const { return fused_matches == pairs; }
  bool embedded_ok() const { return embedded_matches == pairs; }
};
/// Compares both readings over a, b in 0..2p-1 and all s, t.
MonodromyReport check_monodromy(int p);

struct RibbonReport {
  int p = 0;
  long pairs = 0;
  long failures = 0;
  bool ok() const { return failures == 0; }
};
/// fusion_map(B^2(theta y (x) theta z)) == theta(fusion_map(y (x) z)) on all
/// pairs of simple one-vertex modules with charges in 0..2p-1.
RibbonReport check_ribbon_through_fusion(int p);

/// Intertwining of fusion_map with the action and coaction over the whole
/// one-vertex space; returns the number of failing basis pairs.
long check_fusion_intertwines(int p);

struct FusionResult {
  int p = 0;
  int r1 = 1, nu1 = 0, r2 = 1, nu2 = 0;
  std::vector<ModuleDescriptor> summands;  // sorted by (kind, r, nu mod 4)

  int dimension() const;
  bool same_summands(const FusionResult& o) const;
  std::string to_string() const;
};

/// Representative charge r - 1 - nu p.
inline long representative_charge(int r, int nu, int p) { return r - 1 - static_cast<long>(nu) * p; }

/// The two step-2 sums: X(s) summands and P[s] summands (P[p] = X(p)).
FusionResult fuse_closed(int r1, int nu1, int r2, int nu2, int p);

struct BruteFusion {
  FusionResult result;                          // labels in closed-form convention
  std::vector<ModuleDescriptor> coinvariants;  // structural, one per V^{a,b}_{0,u}
  bool injective = false;                       // fusion_map has rank r1 r2 on the simples
  bool coinvariants_ok = false;                 // exactly u <= min((a)_p, (b)_p)
  bool property_ok = false;                     // five-case table == classify_coinvariant
  bool extensions_ok = false;                   // every P basis lies in the image
  bool exhausted = false;                       // module bases span the image
  bool ok() const { return injective && coinvariants_ok && property_ok && extensions_ok && exhausted; }
};

/// Decomposes fusion_map(X(r1) (x) X(r2)) for the simples with charges a, b.
BruteFusion fuse_brute_charges(long a, long b, int p);
BruteFusion fuse_brute(int r1, int nu1, int r2, int nu2, int p);

/// Label of the closed form matching a structural P module built on L[r]_nu.
ModuleDescriptor closed_label_of_projective(int r, int nu_raw, int p);

struct FusionCheck {
  FusionResult closed;
  BruteFusion brute;
  bool agree = false;
};
FusionCheck fuse_simples(int r1, int nu1, int r2, int nu2, int p);

}  // namespace ydf

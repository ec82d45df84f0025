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
// Submodules generated from left coinvariants of the one- and two-vertex
// spaces, their classification, and the decomposition of those spaces.
//
// Module kinds: X(r) simple, S(p) simple of dimension p, V[r] the
// p-dimensional extension of X(r) by X(p-r), L[r] the submodule generated
// from a coinvariant whose F-orbit runs into a second coinvariant, B(r) the
// simple submodule sitting at the bottom of an L, and P[r] the
// 2p-dimensional module containing an L.

#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ydfusion/ydspace.hpp"

namespace ydf {

enum class Kind { X, S, V, L, B, P };

char kind_letter(Kind k);
Kind kind_from_letter(char c);

/// Non-negative residue of x mod m.
inline int residue(long x, int m) {
  const long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

struct ModuleDescriptor {
  Kind kind = Kind::X;
  int r = 1;
  int nu_raw = 0;    // signed braiding index
  int vertices = 0;  // 0 for an abstract label, else 1 or 2
  int a = 0, t = 0, b = 0;

  /// Braiding index in Z_4, 0..3.
  int nu() const { return residue(nu_raw, 4); }
  int dimension(int p) const;
  /// (kind, r, nu mod 4); the identity of a label up to its coinvariant.
  std::tuple<Kind, int, int> key() const { return {kind, r, nu()}; }
  std::string to_string() const;
};

ModuleDescriptor make_descriptor(Kind kind, int r, int nu_raw);

/// beta = (a + b - 2t)_p + 1, in 1..p.
int beta_param(long a, long b, long t, int p);

/// Signed nu with a_eff = r - 1 - nu p; throws std::invalid_argument when
/// a_eff is not congruent to r - 1 mod p.
int raw_sector(long a_eff, int r, int p);
/// nu mod 4.
int braiding_sector(long a_eff, int r, int p);

enum class IsoMode { module_comodule, braided, entwined };
bool iso_check(const ModuleDescriptor& d1, const ModuleDescriptor& d2, IsoMode mode);

/// The condition families deciding what V^{a,b}_{0,t} generates.
struct ConditionFlags {
  bool s = false;
  bool xi = false, xii = false;
  bool p1 = false, p2 = false, p3 = false, p4 = false;
};
ConditionFlags condition_flags(long a, long b, int t, int p);

ModuleDescriptor classify_one_vertex(long a, int p);
/// Arithmetic classification of the module generated from V^{a,b}_{0,t}.
ModuleDescriptor classify_coinvariant(long a, long b, int t, int p);

/// Five-case table for the coinvariants V^{a,b}_{0,u} with 0 <= u <= a,b <= p-1
/// (kinds X, L, S or B).
Kind property_kind(int a, int b, int u, int p);

struct Submodule {
  std::vector<YDVec> basis;
  ModuleDescriptor desc;
};

/// F-orbit of a left coinvariant, classified from the orbit itself: an inner
/// coinvariant makes it L, a full orbit S, membership in the image of F B,
/// and X otherwise.
Submodule generate_submodule(const CyclotomicField& f, const BasisVector& coinv);

/// Whether a homogeneous vector lies in the image of F = F(1) on its sector.
bool in_image_of_F(const CyclotomicField& f, const YDVec& v);

/// Whether span(basis) is closed under F and the coaction.
bool is_subcomodule_module(const CyclotomicField& f, const std::vector<YDVec>& basis);

/// Coaction extensions: v(i) = F^{i-1} coinv and u(i) = F^{i-1} T with T the
/// vector v(r) with one more cross in the first group.
Submodule extend_to_V(const CyclotomicField& f, const Submodule& x);
Submodule extend_to_P(const CyclotomicField& f, const Submodule& l);
ModuleDescriptor extend_to_V(const ModuleDescriptor& d);
ModuleDescriptor extend_to_P(const ModuleDescriptor& d);

/// Simple subquotients (as X labels) of a module.
std::vector<ModuleDescriptor> subquotients(const ModuleDescriptor& d, int p);

struct Decomposition {
  int vertices = 1;
  int p = 2;
  std::map<std::pair<Kind, int>, int> multiplicity;  // (kind, r) -> count
  long total_dimension = 0;
  long ambient_dimension = 0;
  long rank = 0;                 // rank of all module bases, summed over sectors
  bool classification_agrees = true;
  bool extensions_closed = true;
  int bottom_count = 0;          // B coinvariants, absorbed in P modules

  int count(Kind k, int r) const;
};

Decomposition decompose_space(int vertices, int p);

struct TableCell {
  int a, t, b;
  ModuleDescriptor desc;
};
/// Classification of every V^{a,b}_{0,t}, ordered by a, then b, then t.
std::vector<TableCell> figure1_table(int p);

}  // namespace ydf

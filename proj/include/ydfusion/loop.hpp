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
// Duality data, the squared relative antipode and the loop operator chi_Z:
// Y -> Y obtained by running the simple module Z around Y.
//
// The dual of X(r) with charge a is realized on the top r vectors
// V^{2p-a-2}_{p-r}, ..., V^{2p-a-2}_{p-1} of a one-vertex sector, a quotient
// comodule of that sector; pairings with X(r) never see the rest.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ydfusion/classify.hpp"
#include "ydfusion/ydspace.hpp"

namespace ydf {

// -- duality -----------------------------------------------------------------

/// 2p - a - 2.
inline long dual_charge(long a, int p) { return 2L * p - a - 2; }

/// <V^{a'}_{s'}, V^a_t>, the first argument in the dual module.
CycNum ev_one_vertex(const CyclotomicField& f, const BasisVector& u, const BasisVector& v);
/// Coefficient of V^a_s (x) V^{2p-a-2}_{p-1-s} in the coevaluation.
CycNum coev_coefficient(const CyclotomicField& f, long a, int s);
/// The coevaluation of X(r) with charge a, as pairs (V^a_s, dual partner).
std::vector<std::pair<BasisVector, YDVec>> coev_one_vertex(const CyclotomicField& f, long a);

/// <V^{a,b}_{s,t}, V^{c,d}_{u,v}>.
CycNum ev_two_vertex(const CyclotomicField& f, const BasisVector& u, const BasisVector& v);

/// Dual of a module label: X(r)_nu -> X(r)_{-nu}, S likewise,
/// V[r]_nu -> V[p-r]_{-nu-1} (sub X(p-r)_{-nu-1}, quotient X(r)_{-nu}),
/// P at (a,t,b) [r]_nu -> P at (-a-2, p-r-t-1, -b-2) [r]_{-2-nu}.
ModuleDescriptor dual_descriptor(const ModuleDescriptor& d, int p);

struct CheckCount {
  long checked = 0;
  long failed = 0;
  void record(bool ok) {
    ++checked;
    if (!ok) ++failed;
  }
  bool ok() const { return failed == 0 && checked > 0; }
};

/// Both zigzag identities for every X(r) with charge 0..2p-1.
CheckCount check_zigzag(int p);
/// ev: X^v (x) X -> k and coev: k -> X (x) X^v are module-comodule maps.
CheckCount check_ev_coev_morphisms(int p);
/// Explicit action and coaction on the dual basis U^c_s agree with the
/// action and coaction on the identified vectors of V^{c-2+2p}.
CheckCount check_one_vertex_identification(int p);
/// The same for the two-vertex dual basis and its identification with
/// V^{a-2,b-2}_{p-1-s,p-1-t}; the pairing is checked against the
/// identification as well.
CheckCount check_two_vertex_identification(int p);
/// c^{a,b}_{s,t}(r,u) = q^{2r(r+2t+2s-a-b)} c^{-a-2,-b-2}_{p-1-s-r+u,p-1-t-u}(r,u).
CheckCount check_c_symmetry(int p);
/// dual_descriptor agrees with the module structure computed on the dual.
CheckCount check_dual_descriptors(int p);

// -- relative antipode and loop operator ------------------------------------

/// sigma_2(z) = A(z_{-1}) |> z_0.
YDVec sigma2(const CyclotomicField& f, const YDVec& v);
/// sigma_2(h |> z) = zeta^{2 c(h) c(z)} A^2(h) |> sigma_2(z) on all basis
/// vectors of the one- and two-vertex sectors with charges 0..2p-1.
CheckCount check_sigma2_intertwining(int p);

/// chi_Z(y) for Z = X(r) with charge b, from coev, B^2, the ribbon map,
/// sigma_2, one crossing and ev.
YDVec chi(const CyclotomicField& f, const BasisVector& y, long b);
YDVec chi(const CyclotomicField& f, const YDVec& y, long b);
/// The same loop evaluated with B on Z (x) Z^v and the action on the dual.
YDVec chi_first_form(const CyclotomicField& f, const BasisVector& y, long b);

/// Sign-times-sum form of the eigenvalue of X(r)_nu on X(r')_nu'; valid for
/// 1 <= r' <= p.
CycNum lambda_closed(int rp, int nup, int r, int nu, int p);
/// Ratio form; needs 1 <= r' <= p-1.
CycNum lambda_ratio(int rp, int nup, int r, int nu, int p);
/// Eigenvalue on S(p)_nu': (-1)^{(nu'+1)(r-1-nu p)} r.
CycNum lambda_steinberg(int nup, int r, int nu, int p);
/// Nilpotent coefficient on P[r']_nu'; needs 1 <= r' <= p-1.
CycNum mu_closed(int rp, int nup, int r, int nu, int p);

struct LoopAction {
  CycNum lambda;
  CycNum mu;
  bool scalar = false;      // matrix is lambda * id on the tested module
  bool commutes = false;    // commutes with F and the coaction
  bool forms_agree = false; // both loop diagrams give the same matrix
};

/// chi of X(r)_nu on the simple X(r')_nu' (or S(p) for r' = p), both with
/// representative charges.
LoopAction chi_on_simple(int rp, int nup, int r, int nu, int p);

/// chi of X(r)_nu on the P module at (a,t,b): lambda and the coefficient of
/// v(r'+1) in chi(u(1)), with the whole matrix required to equal
/// lambda id + mu N, N(u(i)) = v(r'+i), N(v(i)) = 0.
struct PLoopReport {
  bool precondition = false;
  bool matches_form = false;  // lambda id + mu N exactly
  bool commutes = false;
  CycNum lambda;
  CycNum mu;
};
PLoopReport chi_on_projective(int a, int t, int b, int r, int nu, int p);
/// (-1)^{nu'} q^{1-r'}: the measured mu on the P basis equals this factor
/// times mu_closed in every case computed so far.
CycNum mu_basis_factor(int rp, int nup, int p);

struct PCheck {
  long cases = 0;       // loop modules Z tried
  long form_fail = 0;   // not lambda id + mu N, or not commuting
  long lambda_fail = 0; // lambda != lambda_closed(r', nu')
  long mu_fail = 0;     // mu != mu_closed(r', nu') literally
  long mu_scaled_fail = 0;  // mu != mu_basis_factor * mu_closed
  std::string first_failure;
  bool ok() const { return cases > 0 && form_fail == 0 && lambda_fail == 0 && mu_fail == 0; }
};
/// chi_on_projective against the closed forms for every Z = X(r)_nu,
/// 1 <= r <= p, nu in 0..3, with r', nu' the wing length and raw index of
/// the L module at (a,t,b).
PCheck check_chi_on_P(int a, int t, int b, int p);

/// lambda(Y;W) lambda(Y;Z) equals the sum of lambda(Y; summand) over the
/// closed-form decomposition of W (x) Z, with P[s]_nu contributing
/// 2 lambda(X(s)_nu) + 2 lambda(X(p-s)_{nu+1}); the left side also from the
/// chi matrices.
bool verify_multiplicativity(int rw, int nuw, int rz, int nuz, int ry, int nuy, int p);

}  // namespace ydf

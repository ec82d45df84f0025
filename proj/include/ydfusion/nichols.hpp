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
// The rank-one Nichols algebra B_p spanned by the divided powers F(r),
// 0 <= r <= p-1, as a braided Hopf algebra with braiding
// F(r) (x) F(s) -> q^{2rs} F(s) (x) F(r).

#pragma once

#include <utility>

#include "ydfusion/cyclo.hpp"
#include "ydfusion/lincomb.hpp"

namespace ydf {

/// Element of B_p: degree r -> coefficient of F(r).  Degrees >= p never occur.
using NicholsElt = LinComb<int>;
/// Element of B_p (x) B_p keyed by degree pairs.
using NicholsTensor = LinComb<std::pair<int, int>>;

/// Braiding charge of F(r); a basis vector of charge c braids with F(r)
/// by zeta^{c * (-2r)}.
inline int nichols_charge(int r) { return -2 * r; }

NicholsElt F(const CyclotomicField& f, int r, const CycNum& c);
inline NicholsElt F(const CyclotomicField& f, int r) { return F(f, r, f.one()); }

NicholsElt product(const CyclotomicField& f, const NicholsElt& x, const NicholsElt& y);
/// F(1)^k computed by repeated multiplication.
NicholsElt generator_power(const CyclotomicField& f, int k);

NicholsTensor coproduct(const CyclotomicField& f, const NicholsElt& x);
NicholsElt antipode(const CyclotomicField& f, const NicholsElt& x);
NicholsElt antipode_inv(const CyclotomicField& f, const NicholsElt& x);
CycNum counit(const NicholsElt& x);

/// Scalar of A(F(r)) = (-1)^r q^{r(r-1)}.
CycNum antipode_scalar(const CyclotomicField& f, int r);

/// Product on B_p (x) B_p with the braiding between the middle factors.
NicholsTensor braided_tensor_product(const CyclotomicField& f, const NicholsTensor& x, const NicholsTensor& y);
NicholsTensor tensor(const NicholsElt& x, const NicholsElt& y);

/// Quantum shuffle of a length-r word with a length-s word on the
/// one-dimensional braided space: sum over shuffles of q^{2 * inversions}.
CycNum shuffle_product_oracle(const CyclotomicField& f, int r, int s);
/// (-1)^r times the scalar of the longest braid word on r letters.
CycNum half_twist_oracle(const CyclotomicField& f, int r);

}  // namespace ydf

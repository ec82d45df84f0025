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
#include "ydfusion/nichols.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ydf {

NicholsElt F(const CyclotomicField& f, int r, const CycNum& c) {
  if (r < 0) throw std::invalid_argument("negative Nichols degree");
  NicholsElt x;
  if (r < f.p()) add_term(x, r, c);
  return x;
}

NicholsElt product(const CyclotomicField& f, const NicholsElt& x, const NicholsElt& y) {
  NicholsElt out;
  for (const auto& [r, cr] : x) {
    for (const auto& [s, cs] : y) {
      if (r + s >= f.p()) continue;
      add_term(out, r + s, cr * cs * f.q_binom(r + s, r));
    }
  }
  return out;
}

NicholsElt generator_power(const CyclotomicField& f, int k) {
  NicholsElt x = F(f, 0);
  const NicholsElt gen = F(f, 1);
  for (int i = 0; i < k; ++i) x = product(f, x, gen);
  return x;
}

NicholsTensor coproduct(const CyclotomicField& /*f*/, const NicholsElt& x) {
  NicholsTensor out;
  for (const auto& [r, c] : x)
    for (int s = 0; s <= r; ++s) add_term(out, std::make_pair(s, r - s), c);
  return out;
}

CycNum antipode_scalar(const CyclotomicField& f, int r) {
  const CycNum sign = (r % 2 == 0) ? f.one() : -f.one();
  return sign * f.q_pow(static_cast<long>(r) * (r - 1));
}

NicholsElt antipode(const CyclotomicField& f, const NicholsElt& x) {
  NicholsElt out;
  for (const auto& [r, c] : x) add_term(out, r, c * antipode_scalar(f, r));
  return out;
}

NicholsElt antipode_inv(const CyclotomicField& f, const NicholsElt& x) {
  NicholsElt out;
  for (const auto& [r, c] : x) {
    const CycNum sign = (r % 2 == 0) ? f.one() : -f.one();
    add_term(out, r, c * sign * f.q_pow(-static_cast<long>(r) * (r - 1)));
  }
  return out;
}

CycNum counit(const NicholsElt& x) {
  auto it = x.find(0);
  return it == x.end() ? CycNum() : it->second;
}

NicholsTensor tensor(const NicholsElt& x, const NicholsElt& y) {
  NicholsTensor out;
  for (const auto& [r, cr] : x)
    for (const auto& [s, cs] : y) add_term(out, std::make_pair(r, s), cr * cs);
  return out;
}

NicholsTensor braided_tensor_product(const CyclotomicField& f, const NicholsTensor& x, const NicholsTensor& y) {
  NicholsTensor out;
  for (const auto& [k1, c1] : x) {
    for (const auto& [k2, c2] : y) {
      const auto [a, b] = k1;
      const auto [c, d] = k2;
      if (a + c >= f.p() || b + d >= f.p()) continue;
      // b braids past c
      const CycNum psi = f.zeta_pow(static_cast<long>(nichols_charge(b)) * nichols_charge(c));
      add_term(out, std::make_pair(a + c, b + d), c1 * c2 * psi * f.q_binom(a + c, a) * f.q_binom(b + d, b));
    }
  }
  return out;
}

CycNum shuffle_product_oracle(const CyclotomicField& f, int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("negative word length");
  const int n = r + s;
  if (n > 20) throw std::invalid_argument("shuffle oracle length cap exceeded");
  // a shuffle is the set of positions taken by the first word; each pair
  // (letter of the second word placed before a letter of the first) is one
  // crossing worth q^2
  CycNum total;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != r) continue;
    long inversions = 0;
    int seen_second = 0;
    for (int pos = 0; pos < n; ++pos) {
      if (mask & (1u << pos)) {
        inversions += seen_second;
      } else {
        ++seen_second;
      }
    }
    total += f.q_pow(2 * inversions);
  }
  return total;
}

CycNum half_twist_oracle(const CyclotomicField& f, int r) {
  if (r < 0 || r >= f.p()) throw std::invalid_argument("half twist degree out of range");
  // bubble-sort the reversed word, counting the adjacent transpositions of
  // the reduced braid word for the longest permutation
  std::vector<int> word(r);
  std::iota(word.rbegin(), word.rend(), 0);
  long crossings = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j + 1 < r - i; ++j)
      if (word[j] > word[j + 1]) {
        std::swap(word[j], word[j + 1]);
        ++crossings;
      }
  const CycNum sign = (r % 2 == 0) ? f.one() : -f.one();
  return sign * f.q_pow(2 * crossings);
}

}  // namespace ydf

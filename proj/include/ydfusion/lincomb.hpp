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
// Sparse formal linear combinations with CycNum coefficients, plus an
// incremental exact row-echelon span used for rank and membership tests.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ydfusion/cyclo.hpp"

namespace ydf {

/// Ordered map so that iteration (and therefore all output) is deterministic.
template <class K>
using LinComb = std::map<K, CycNum>;

template <class K>
void add_term(LinComb<K>& v, const K& key, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

template <class K>
void add_scaled(LinComb<K>& dst, const LinComb<K>& src, const CycNum& c) {
  if (c.is_zero()) return;
  for (const auto& [k, v] : src) add_term(dst, k, v * c);
}

template <class K>
LinComb<K> scaled(const LinComb<K>& src, const CycNum& c) {
  LinComb<K> out;
  add_scaled(out, src, c);
  return out;
}

template <class K>
LinComb<K> difference(const LinComb<K>& x, const LinComb<K>& y) {
  LinComb<K> out = x;
  for (const auto& [k, v] : y) add_term(out, k, -v);
  return out;
}

template <class K>
bool equal(const LinComb<K>& x, const LinComb<K>& y) {
  return difference(x, y).empty();
}

/// Span of a growing family of vectors, kept in echelon form keyed by the
/// smallest key of each stored vector (its pivot, normalised to 1).
template <class K>
class EchelonSpan {
 public:
  /// Reduces v against the stored rows; the result is zero iff v is in the span.
  LinComb<K> reduce(LinComb<K> v) const {
    auto it = rows_.begin();
    while (it != rows_.end() && !v.empty()) {
      auto hit = v.find(it->first);
      if (hit != v.end()) {
        const CycNum c = hit->second;
        add_scaled(v, it->second, -c);
      }
      ++it;
    }
    return v;
  }

  bool contains(const LinComb<K>& v) const { return reduce(v).empty(); }

  /// Adds v; returns true when it was independent of the current span.
  bool insert(const LinComb<K>& v) {
    LinComb<K> r = reduce(v);
    if (r.empty()) return false;
    const CycNum inv = r.begin()->second.inv();
    for (auto& [k, c] : r) c *= inv;
    rows_.emplace(r.begin()->first, std::move(r));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<K, LinComb<K>> rows_;
};

template <class K>
std::size_t rank_of(const std::vector<LinComb<K>>& vs) {
  EchelonSpan<K> span;
  for (const auto& v : vs) span.insert(v);
  return span.rank();
}

}  // namespace ydf

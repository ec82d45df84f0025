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
#include "ydfusion/fusionring.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ydfusion/classify.hpp"
#include "ydfusion/fusion.hpp"
#include "ydfusion/loop.hpp"

namespace ydf {

namespace {

void check_label(int r, int p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  if (r < 1 || r > p) throw std::invalid_argument("r out of range 1..p");
}

void add(RingElt& x, int r, int nu, long c) {
  if (c == 0) return;
  const auto key = std::make_pair(r, residue(nu, 2));
  const long v = (x.coeffs[key] += c);
  if (v == 0) x.coeffs.erase(key);
}

RingElt basis_product(int r1, int nu1, int r2, int nu2, int p) {
  RingElt out;
  out.p = p;
  const int nu = nu1 + nu2;
  for (int s = std::abs(r1 - r2) + 1; s <= p - 1 - std::abs(r1 + r2 - p); s += 2) add(out, s, nu, 1);
  for (int s = 2 * p - r1 - r2 + 1; s <= p; s += 2) out += RingElt::P(s, nu, p);
  return out;
}

// parity of the representative charge r - 1 - nu p
int charge_parity(int r, int nu, int p) { return residue(r - 1 - nu * p, 2); }
int charge_parity(const RingElt& basis_elt) {
  const auto& k = basis_elt.coeffs.begin()->first;
  return charge_parity(k.first, k.second, basis_elt.p);
}

std::vector<RingElt> ring_basis(int p) {
  std::vector<RingElt> b;
  for (int r = 1; r <= p; ++r)
    for (int nu = 0; nu < 2; ++nu) b.push_back(RingElt::X(r, nu, p));
  return b;
}

}  // namespace

RingElt RingElt::X(int r, int nu, int p) {
  check_label(r, p);
  RingElt x;
  x.p = p;
  add(x, r, nu, 1);
  return x;
}

RingElt RingElt::P(int r, int nu, int p) {
  check_label(r, p);
  if (r == p) return X(p, nu, p);
  RingElt x;
  x.p = p;
  add(x, r, nu, 2);
  add(x, p - r, nu + 1, 2);
  return x;
}

long RingElt::coeff(int r, int nu) const {
  auto it = coeffs.find({r, residue(nu, 2)});
  return it == coeffs.end() ? 0 : it->second;
}

RingElt& RingElt::operator+=(const RingElt& o) {
  if (o.p != p) throw std::invalid_argument("ring elements for different p");
  for (const auto& [k, c] : o.coeffs) add(*this, k.first, k.second, c);
  return *this;
}

RingElt RingElt::scaled(long k) const {
  RingElt out;
  out.p = p;
  for (const auto& [key, c] : coeffs) add(out, key.first, key.second, c * k);
  return out;
}

std::string RingElt::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : coeffs) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c << "*";
    os << "X(" << k.first << ")_" << k.second;
  }
  return os.str();
}

RingElt ring_multiply(const RingElt& x, const RingElt& y) {
  if (x.p != y.p) throw std::invalid_argument("ring elements for different p");
  RingElt out;
  out.p = x.p;
  for (const auto& [kx, cx] : x.coeffs)
    for (const auto& [ky, cy] : y.coeffs)
      out += basis_product(kx.first, kx.second, ky.first, ky.second, x.p).scaled(cx * cy);
  return out;
}

void RingReport::record(bool ok, const std::string& what) {
  ++checked;
  if (!ok) {
    ++failed;
    if (first_failure.empty()) first_failure = what;
  }
}

RingReport verify_ring(int p) {
  RingReport rep;
  const auto basis = ring_basis(p);
  const RingElt unit = RingElt::X(1, 0, p);
  for (const auto& x : basis) {
    rep.record(ring_multiply(unit, x) == x, "unit on " + x.to_string());
    for (const auto& y : basis) {
      const RingElt xy = ring_multiply(x, y);
      rep.record(xy == ring_multiply(y, x), "commutativity at " + x.to_string() + ", " + y.to_string());
      const int grade = charge_parity(x) + charge_parity(y);
      bool graded = true, nonneg = true;
      for (const auto& [k, c] : xy.coeffs) {
        if (charge_parity(k.first, k.second, p) != residue(grade, 2)) graded = false;
        if (c < 0) nonneg = false;
      }
      rep.record(graded && nonneg, "grading or sign at " + x.to_string() + ", " + y.to_string());
      for (const auto& z : basis)
        rep.record(ring_multiply(xy, z) == ring_multiply(x, ring_multiply(y, z)),
                   "associativity at " + x.to_string() + ", " + y.to_string() + ", " + z.to_string());
    }
  }
  const RingElt current = RingElt::X(1, 1, p);
  rep.record(ring_multiply(current, current) == unit, "X(1)_1 squared");
  return rep;
}

namespace {

RingElt to_ring(const FusionResult& res) {
  RingElt out;
  out.p = res.p;
  for (const auto& m : res.summands)
    out += m.kind == Kind::P ? RingElt::P(m.r, m.nu_raw, res.p) : RingElt::X(m.r, m.nu_raw, res.p);
  return out;
}

}  // namespace

RingReport verify_against_fusion(int p) {
  RingReport rep;
  for (int r1 = 1; r1 <= p; ++r1)
    for (int nu1 = 0; nu1 < 4; ++nu1)
      for (int r2 = 1; r2 <= p; ++r2)
        for (int nu2 = 0; nu2 < 4; ++nu2) {
          const FusionCheck c = fuse_simples(r1, nu1, r2, nu2, p);
          const RingElt prod = ring_multiply(RingElt::X(r1, nu1, p), RingElt::X(r2, nu2, p));
          std::ostringstream os;
          os << "X(" << r1 << ")_" << nu1 << " x X(" << r2 << ")_" << nu2;
          rep.record(c.agree && to_ring(c.closed) == prod && to_ring(c.brute.result) == prod, os.str());
        }
  return rep;
}

RingReport verify_against_lambda(int p) {
  RingReport rep;
  const auto basis = ring_basis(p);
  for (int ry = 1; ry <= p; ++ry) {
    for (int nuy = 0; nuy < 2; ++nuy) {
      std::map<std::pair<int, int>, CycNum> character;
      bool scalar = true;
      for (int r = 1; r <= p; ++r)
        for (int nu = 0; nu < 2; ++nu) {
          const LoopAction act = chi_on_simple(ry, nuy, r, nu, p);
          scalar = scalar && act.scalar && act.commutes;
          character[{r, nu}] = act.lambda;
        }
      std::ostringstream who;
      who << "Y=X(" << ry << ")_" << nuy;
      rep.record(scalar, who.str() + " loop matrices scalar");
      auto eval = [&](const RingElt& x) {
        CycNum v;
        for (const auto& [k, c] : x.coeffs) v += character.at(k) * CyclotomicField::get(p).integer(c);
        return v;
      };
      for (int r1 = 1; r1 <= p; ++r1)
        for (int nu1 = 0; nu1 < 2; ++nu1)
          for (int r2 = 1; r2 <= p; ++r2)
            for (int nu2 = 0; nu2 < 2; ++nu2) {
              const RingElt prod = ring_multiply(RingElt::X(r1, nu1, p), RingElt::X(r2, nu2, p));
              std::ostringstream os;
              os << who.str() << " at X(" << r1 << ")_" << nu1 << " X(" << r2 << ")_" << nu2;
              rep.record(character.at({r1, nu1}) * character.at({r2, nu2}) == eval(prod), os.str());
            }
    }
  }
  return rep;
}

}  // namespace ydf

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
#include "ydfusion/ydspace.hpp"

#include <sstream>
#include <stdexcept>

namespace ydf {

namespace {

CycNum xi_pow(const CyclotomicField& f, int r) {
  CycNum x = f.one();
  for (int i = 0; i < r; ++i) x *= f.xi();
  return x;
}

// Adds c * target unless the target leaves the basis, in which case the
// coefficient must already vanish.
void add_checked(const CyclotomicField& f, YDVec& out, const BasisVector& target, const CycNum& c) {
  for (int i = 0; i < target.n; ++i) {
    if (target.s[i] >= f.p()) {
      if (!c.is_zero()) throw std::logic_error("nonzero coefficient on a vector outside the basis: " + target.to_string());
      return;
    }
  }
  add_term(out, target, c);
}

void check_vector(const CyclotomicField& f, const BasisVector& v) {
  if (v.n < 1 || v.n > 3) throw std::invalid_argument("basis vector must have 1..3 vertices");
  for (int i = 0; i < v.n; ++i)
    if (v.s[i] < 0 || v.s[i] >= f.p()) throw std::invalid_argument("cross count out of range: " + v.to_string());
}

}  // namespace

int BasisVector::charge() const {
  int c = 0;
  for (int i = 0; i < n; ++i) c += a[i] - 2 * s[i];
  return c;
}

std::string BasisVector::to_string() const {
  std::ostringstream os;
  os << "V^{";
  for (int i = 0; i < n; ++i) os << (i ? "," : "") << a[i];
  os << "}_{";
  for (int i = 0; i < n; ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

BasisVector V1(int a, int s) { return BasisVector{1, {a, 0, 0}, {s, 0, 0}}; }
BasisVector V2(int a, int b, int s, int t) { return BasisVector{2, {a, b, 0}, {s, t, 0}}; }
BasisVector V3(int a, int b, int c, int s, int t, int u) { return BasisVector{3, {a, b, c}, {s, t, u}}; }

std::vector<BasisVector> sector_basis(int p, const std::vector<int>& charges) {
  const int n = static_cast<int>(charges.size());
  if (n < 1 || n > 3) throw std::invalid_argument("sector must have 1..3 vertices");
  std::vector<BasisVector> out;
  BasisVector v;
  v.n = n;
  for (int i = 0; i < n; ++i) v.a[i] = charges[i];
  int total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (int idx = 0; idx < total; ++idx) {
    int rest = idx;
    for (int i = n - 1; i >= 0; --i) {
      v.s[i] = rest % p;
      rest /= p;
    }
    out.push_back(v);
  }
  return out;
}

CycNum psi_scalar(const CyclotomicField& f, long c1, long c2) {
  const long n = f.order();
  return f.zeta_pow(((c1 % n) * (c2 % n)) % n);
}

CycNum psi_scalar(const CyclotomicField& f, const BasisVector& v, const BasisVector& w) {
  return psi_scalar(f, v.charge(), w.charge());
}

CycNum c_coeff(const CyclotomicField& f, int a, int b, int s, int t, int r, int u) {
  if (u < 0 || u > r) return {};
  CycNum c = xi_pow(f, r) * f.q_pow(static_cast<long>(u) * (2 * s - a)) * f.q_binom(s + r - u, r - u) *
             f.q_binom(t + u, u);
  for (int i = u; i <= r - 1 && !c.is_zero(); ++i) c *= f.q_int(s + i + 2 * t - a - b);
  for (int j = 0; j <= u - 1 && !c.is_zero(); ++j) c *= f.q_int(t + j - b);
  return c;
}

YDVec act_F(const CyclotomicField& f, const BasisVector& v) {
  check_vector(f, v);
  YDVec out;
  long prefix = 0;  // sum_{j<i} (2 s_j - a_j)
  for (int i = 0; i < v.n; ++i) {
    long inner = v.s[i];
    for (int j = i + 1; j < v.n; ++j) inner += 2 * v.s[j];
    for (int j = i; j < v.n; ++j) inner -= v.a[j];
    const CycNum c = f.q_pow(prefix) * f.xi() * f.q_int(v.s[i] + 1) * f.q_int(inner);
    BasisVector w = v;
    ++w.s[i];
    add_checked(f, out, w, c);
    prefix += 2 * v.s[i] - v.a[i];
  }
  return out;
}

YDVec act_Fr_iterated(const CyclotomicField& f, int r, const BasisVector& v) {
  check_vector(f, v);
  if (r < 0 || r >= f.p()) throw std::invalid_argument("F(r) degree out of range");
  YDVec cur = unit_vector(f, v);
  for (int i = 0; i < r; ++i) {
    YDVec next;
    for (const auto& [w, c] : cur) add_scaled(next, act_F(f, w), c);
    cur = std::move(next);
  }
  return scaled(cur, f.q_fact(r).inv());
}

YDVec act_Fr(const CyclotomicField& f, int r, const BasisVector& v) {
  check_vector(f, v);
  if (r < 0 || r >= f.p()) throw std::invalid_argument("F(r) degree out of range");
  if (r == 0) return unit_vector(f, v);
  YDVec out;
  if (v.n == 1) {
    const int a = v.a[0], s = v.s[0];
    CycNum c = f.q_binom(r + s, r) * xi_pow(f, r);
    for (int i = s; i <= s + r - 1 && !c.is_zero(); ++i) c *= f.q_int(i - a);
    add_checked(f, out, V1(a, s + r), c);
    return out;
  }
  if (v.n == 2) {
    const int a = v.a[0], b = v.a[1], s = v.s[0], t = v.s[1];
    for (int u = 0; u <= r; ++u) add_checked(f, out, V2(a, b, s + r - u, t + u), c_coeff(f, a, b, s, t, r, u));
    return out;
  }
  return act_Fr_iterated(f, r, v);
}

YDVec act_Fr(const CyclotomicField& f, int r, const YDVec& v) { return act_lin(f, r, v); }

YDVec act(const CyclotomicField& f, const NicholsElt& h, const YDVec& v) {
  YDVec out;
  for (const auto& [r, c] : h) add_scaled(out, act_Fr(f, r, v), c);
  return out;
}

CoactVec<BasisVector> coact(const CyclotomicField& f, const BasisVector& v) {
  check_vector(f, v);
  CoactVec<BasisVector> out;
  for (int r = 0; r <= v.s[0]; ++r) {
    BasisVector w = v;
    w.s[0] -= r;
    add_term(out, std::make_pair(r, w), f.one());
  }
  return out;
}

CoactVec<BasisVector> coact(const CyclotomicField& f, const YDVec& v) { return coact_lin(f, v); }

bool is_coinvariant(const YDVec& v) {
  for (const auto& [w, c] : v)
    if (w.s[0] != 0) return false;
  return true;
}

TensorVec tensor(const YDVec& y, const YDVec& z) {
  TensorVec out;
  for (const auto& [ky, cy] : y)
    for (const auto& [kz, cz] : z) add_term(out, std::make_pair(ky, kz), cy * cz);
  return out;
}

TensorVec tensor_act_Fr(const CyclotomicField& f, int r, const TensorKey& k) {
  const auto& [y, z] = k;
  TensorVec out;
  for (int i = 0; i <= r; ++i) {
    const int j = r - i;
    const CycNum psi = psi_scalar(f, nichols_charge(j), y.charge());
    add_scaled(out, tensor(act_Fr(f, i, y), act_Fr(f, j, z)), psi);
  }
  return out;
}

TensorVec tensor_act_Fr(const CyclotomicField& f, int r, const TensorVec& x) { return act_lin(f, r, x); }

CoactVec<TensorKey> tensor_coact(const CyclotomicField& f, const TensorKey& k) {
  CoactVec<TensorKey> out;
  for (const auto& [ty, cy] : coact(f, k.first)) {
    const auto& [i, y0] = ty;
    for (const auto& [tz, cz] : coact(f, k.second)) {
      const auto& [j, z0] = tz;
      if (i + j >= f.p()) continue;
      const CycNum psi = psi_scalar(f, y0.charge(), nichols_charge(j));
      add_term(out, std::make_pair(i + j, std::make_pair(y0, z0)), cy * cz * psi * f.q_binom(i + j, i));
    }
  }
  return out;
}

CoactVec<TensorKey> tensor_coact(const CyclotomicField& f, const TensorVec& x) { return coact_lin(f, x); }

TensorVec braid_B(const CyclotomicField& f, const TensorVec& x) {
  TensorVec out;
  for (const auto& [k, c] : x) {
    const auto& [y, z] = k;
    for (const auto& [term, cy] : coact(f, y)) {
      const auto& [i, y0] = term;
      const CycNum psi = psi_scalar(f, y0.charge(), z.charge());
      for (const auto& [z1, cz] : act_Fr(f, i, z)) add_term(out, std::make_pair(z1, y0), c * cy * psi * cz);
    }
  }
  return out;
}

TensorVec braid_B_inv(const CyclotomicField& f, const TensorVec& x) {
  TensorVec out;
  for (const auto& [k, c] : x) {
    const auto& [z, y] = k;
    // inverse crossing of z with y, coaction on y, inverse crossing of the
    // coacting leg with y_0, then A^{-1}(y_{-1}) acts on z
    const CycNum outer = psi_scalar(f, -static_cast<long>(z.charge()), y.charge());
    for (const auto& [term, cy] : coact(f, y)) {
      const auto& [i, y0] = term;
      const CycNum inner = psi_scalar(f, -static_cast<long>(nichols_charge(i)), y0.charge());
      const NicholsElt h = antipode_inv(f, F(f, i));
      for (const auto& [z1, cz] : act(f, h, unit_vector(f, z)))
        add_term(out, std::make_pair(y0, z1), c * outer * cy * inner * cz);
    }
  }
  return out;
}

TensorVec braid_B2(const CyclotomicField& f, const TensorVec& x) { return braid_B(f, braid_B(f, x)); }

TensorVec braid_B2_diagram(const CyclotomicField& f, const TensorVec& x) {
  TensorVec out;
  for (const auto& [k, c] : x) {
    const auto& [y, z] = k;
    // coact y; split the coacting leg into h1 (x) h2; y_0 crosses z
    for (const auto& [ty, cy] : coact(f, y)) {
      const auto& [deg, y0] = ty;
      const CycNum cross_yz = psi_scalar(f, y0.charge(), z.charge());
      // relative antipode on y_0
      YDVec sigma;
      for (const auto& [ty0, cy0] : coact(f, y0)) {
        const auto& [d0, y00] = ty0;
        add_scaled(sigma, act_Fr(f, d0, y00), antipode_scalar(f, d0) * cy0);
      }
      const long c_sigma = y0.charge();
      for (int h1 = 0; h1 <= deg; ++h1) {
        const int h2 = deg - h1;
        for (const auto& [tz, cz] : coact(f, z)) {
          const auto& [zd, z0] = tz;
          if (h1 + zd >= f.p()) continue;
          // h2 crosses z_{-1}
          const CycNum cross_h2 = psi_scalar(f, nichols_charge(h2), nichols_charge(zd));
          const CycNum mult = f.q_binom(h1 + zd, h1);
          const YDVec right = act_Fr(f, h2, z0);
          // (h2 |> z_0) crosses sigma(y_0)
          const CycNum cross_last = psi_scalar(f, nichols_charge(h2) + z0.charge(), c_sigma);
          const YDVec left = act_Fr(f, h1 + zd, sigma);
          const CycNum scalar = c * cy * cross_yz * cz * cross_h2 * mult * cross_last;
          add_scaled(out, tensor(left, right), scalar);
        }
      }
    }
  }
  return out;
}

YDVec ribbon(const CyclotomicField& f, const BasisVector& v) {
  check_vector(f, v);
  if (v.n == 1) {
    const long a = v.a[0];
    return YDVec{{v, f.zeta_pow(a * a + 2 * a)}};
  }
  if (v.n != 2) throw std::invalid_argument("ribbon map is defined on one- and two-vertex sectors only");
  const int a = v.a[0], b = v.a[1], s = v.s[0], t = v.s[1];
  const long n = a + b - 2 * t;
  const CycNum overall = f.zeta_pow(n * n + 2 * n);
  YDVec out;
  CycNum xi_i = f.one();
  for (int i = 0; i <= s; ++i) {
    CycNum c = overall * f.q_pow(-static_cast<long>(i) * a) * xi_i * f.q_binom(t + i, i);
    for (int j = 0; j <= i - 1 && !c.is_zero(); ++j) c *= f.q_int(t + j - b);
    add_checked(f, out, V2(a, b, s - i, t + i), c);
    xi_i *= f.xi();
  }
  return out;
}

YDVec ribbon(const CyclotomicField& f, const YDVec& v) {
  YDVec out;
  for (const auto& [w, c] : v) add_scaled(out, ribbon(f, w), c);
  return out;
}

}  // namespace ydf

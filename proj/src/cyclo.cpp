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
#include "ydfusion/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>
#include <ostream>
#include <sstream>

namespace ydf {

int euler_phi(int n) {
  int result = n;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact division of integer polynomials (low degree first) by a monic divisor.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<long> quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const long c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int n) {
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

// ---------------------------------------------------------------------------
// CyclotomicField

const CyclotomicField& CyclotomicField::get(int p) {
  if (p < 2) throw std::invalid_argument("cyclotomic field requires p >= 2");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[p];
  if (!slot) slot.reset(new CyclotomicField(p));
  return *slot;
}

CyclotomicField::CyclotomicField(int p) : p_(p), phi_(euler_phi(4 * p)), cyclo_(ydf::cyclotomic_polynomial(4 * p)) {
  const int n = 4 * p;
  powers_.assign(n, std::vector<long>(phi_, 0));
  std::vector<long> cur(phi_, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    powers_[k] = cur;
    // multiply by x and reduce the x^phi term
    const long lead = cur[phi_ - 1];
    for (int j = phi_ - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (lead != 0) {
      for (int j = 0; j < phi_; ++j) cur[j] -= lead * cyclo_[j];
    }
  }

  xi_ = one() - q_pow(2);

  q_int_.resize(p);
  CycNum acc;
  for (int m = 0; m < p; ++m) {
    q_int_[m] = acc;
    acc += q_pow(2 * m);
  }
  q_fact_.resize(p);
  q_fact_[0] = one();
  for (int r = 1; r < p; ++r) q_fact_[r] = q_fact_[r - 1] * q_int_[r];

  build_binomials(4 * p);
}

CycNum CyclotomicField::integer(long n) const { return rational(mpq_class(n)); }

CycNum CyclotomicField::rational(const mpq_class& c) const {
  std::vector<mpz_class> num(phi_, 0);
  num[0] = c.get_num();
  return CycNum(this, std::move(num), c.get_den());
}

CycNum CyclotomicField::zeta_pow(long k) const {
  const long n = order();
  const int r = static_cast<int>(((k % n) + n) % n);
  std::vector<mpz_class> num(phi_);
  for (int j = 0; j < phi_; ++j) num[j] = powers_[r][j];
  return CycNum(this, std::move(num), 1);
}

const CycNum& CyclotomicField::q_int(long n) const {
  const long r = ((n % p_) + p_) % p_;
  return q_int_[r];
}

const CycNum& CyclotomicField::q_fact(long r) const {
  if (r < 0) throw std::invalid_argument("q_fact of a negative integer");
  static const CycNum zero_value;
  if (r >= p_) return zero_value;
  return q_fact_[r];
}

void CyclotomicField::build_binomials(long n_max) const {
  // caller holds binom_mutex_ or is the constructor
  while (static_cast<long>(binom_.size()) <= n_max) {
    const long n = static_cast<long>(binom_.size());
    std::vector<CycNum> row(n + 1);
    row[0] = one();
    row[n] = one();
    for (long k = 1; k < n; ++k) row[k] = binom_[n - 1][k - 1] + q_pow(2 * k) * binom_[n - 1][k];
    binom_.push_back(std::move(row));
  }
}

CycNum CyclotomicField::q_binom(long n, long k) const {
  if (n < 0 || k < 0 || k > n) return {};
  std::lock_guard lock(binom_mutex_);
  if (n >= static_cast<long>(binom_.size())) build_binomials(n);
  return binom_[n][k];
}

// ---------------------------------------------------------------------------
// CycNum

CycNum::CycNum(const CyclotomicField* f, std::vector<mpz_class> num, mpz_class den)
    : field_(f), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void CycNum::normalize() {
  bool all_zero = true;
  for (const auto& c : num_) {
    if (c != 0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) {
    num_.clear();
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    den_ /= g;
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

const CyclotomicField* CycNum::common(const CycNum& a, const CycNum& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_) throw FieldMismatch();
  return a.field_ ? a.field_ : b.field_;
}

bool CycNum::is_one() const {
  if (num_.empty() || den_ != 1 || num_[0] != 1) return false;
  return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return c == 0; });
}

std::vector<mpq_class> CycNum::coefficients() const {
  std::vector<mpq_class> out;
  out.reserve(num_.size());
  for (const auto& c : num_) {
    mpq_class v(c, den_);
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

std::complex<double> CycNum::to_complex() const {
  if (num_.empty()) return {0.0, 0.0};
  const double step = std::numbers::pi / (2.0 * field_->p());
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    acc += num_[k].get_d() * std::polar(1.0, step * static_cast<double>(k));
  }
  return acc / den_.get_d();
}

bool CycNum::as_monomial(mpq_class& c, int& k) const {
  if (num_.empty()) {
    c = 0;
    k = 0;
    return true;
  }
  for (int e = 0; e < field_->order(); ++e) {
    const auto& row = field_->power_row(e);
    // find scale from the first nonzero entry of row
    std::size_t j0 = 0;
    while (j0 < row.size() && row[j0] == 0) ++j0;
    if (num_[j0] == 0) continue;
    mpq_class scale(num_[j0], den_ * row[j0]);
    scale.canonicalize();
    bool ok = true;
    for (std::size_t j = 0; j < row.size() && ok; ++j) {
      mpq_class lhs(num_[j], den_);
      lhs.canonicalize();
      ok = (lhs == scale * row[j]);
    }
    if (ok) {
      c = scale;
      k = e;
      return true;
    }
  }
  return false;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  const CyclotomicField* f = common(*this, o);
  if (o.num_.empty()) return *this;
  if (num_.empty()) {
    *this = o;
    return *this;
  }
  field_ = f;
  if (den_ == o.den_) {
    for (std::size_t j = 0; j < num_.size(); ++j) num_[j] += o.num_[j];
  } else {
    for (std::size_t j = 0; j < num_.size(); ++j) num_[j] = num_[j] * o.den_ + o.num_[j] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum operator*(const CycNum& a, const CycNum& b) {
  const CyclotomicField* f = CycNum::common(a, b);
  if (a.num_.empty() || b.num_.empty()) return {};
  const int phi = f->degree();
  std::vector<mpz_class> prod(2 * phi - 1, 0);
  for (int i = 0; i < phi; ++i) {
    if (a.num_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (b.num_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  std::vector<mpz_class> num(prod.begin(), prod.begin() + phi);
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& row = f->power_row(k);
    for (int j = 0; j < phi; ++j) {
      if (row[j] != 0) num[j] += prod[k] * row[j];
    }
  }
  return CycNum(f, std::move(num), a.den_ * b.den_);
}

CycNum& CycNum::operator*=(const CycNum& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.num_.empty() || b.num_.empty()) return a.num_.empty() && b.num_.empty();
  CycNum::common(a, b);
  return a.den_ == b.den_ && a.num_ == b.num_;
}

bool operator<(const CycNum& a, const CycNum& b) {
  if (a.num_.empty() || b.num_.empty()) return a.num_.empty() && !b.num_.empty();
  if (a.den_ != b.den_) return a.den_ < b.den_;
  return a.num_ < b.num_;
}

namespace {

using QPoly = std::vector<mpq_class>;  // low degree first, trimmed

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

void poly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const mpq_class c = r.back() / b.back();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    trim(r);
  }
  trim(q);
}

}  // namespace

CycNum CycNum::inv() const {
  if (num_.empty()) throw DivisionByZero();
  const CyclotomicField* f = field_;
  QPoly a;
  for (const auto& c : num_) a.emplace_back(c);
  trim(a);
  QPoly m;
  for (long c : f->cyclotomic_polynomial()) m.emplace_back(c);
  // extended Euclid: track s with s*a == r (mod m)
  QPoly r0 = m, r1 = a, s0, s1{mpq_class(1)};
  while (!(r1.size() == 1)) {
    QPoly q, rem;
    poly_divmod(r0, r1, q, rem);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant (Phi irreducible); s1 * a == r1
  QPoly unused, s_red;
  poly_divmod(s1, m, unused, s_red);
  const mpq_class scale = mpq_class(den_) / r1[0];
  mpz_class common_den = 1;
  std::vector<mpq_class> coeffs(f->degree(), 0);
  for (std::size_t j = 0; j < s_red.size(); ++j) {
    coeffs[j] = s_red[j] * scale;
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), coeffs[j].get_den_mpz_t());
  }
  std::vector<mpz_class> num(f->degree());
  for (int j = 0; j < f->degree(); ++j) num[j] = coeffs[j].get_num() * (common_den / coeffs[j].get_den());
  return CycNum(f, std::move(num), common_den);
}

std::string CycNum::to_string() const {
  if (num_.empty()) return "0";
  std::ostringstream os;
  mpq_class c;
  int k = 0;
  if (as_monomial(c, k)) {
    if (k == 0) {
      os << c;
    } else {
      if (c == -1) {
        os << '-';
      } else if (c != 1) {
        os << c << '*';
      }
      os << "z^" << k;
    }
    return os.str();
  }
  bool first = true;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    mpq_class v(num_[j], den_);
    v.canonicalize();
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << '-';
    mpq_class mag = abs(v);
    if (j == 0 || mag != 1) os << mag;
    if (j > 0) os << (mag != 1 ? "*" : "") << "z^" << j;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

}  // namespace ydf

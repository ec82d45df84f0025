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
#include "ydfusion/classify.hpp"

#include <sstream>
#include <stdexcept>

namespace ydf {

char kind_letter(Kind k) {
  switch (k) {
    case Kind::X: return 'X';
    case Kind::S: return 'S';
    case Kind::V: return 'V';
    case Kind::L: return 'L';
    case Kind::B: return 'B';
    case Kind::P: return 'P';
  }
  return '?';
}

Kind kind_from_letter(char c) {
  switch (c) {
    case 'X': return Kind::X;
    case 'S': return Kind::S;
    case 'V': return Kind::V;
    case 'L': return Kind::L;
    case 'B': return Kind::B;
    case 'P': return Kind::P;
    default: throw std::invalid_argument(std::string("unknown module kind ") + c);
  }
}

int ModuleDescriptor::dimension(int p) const {
  switch (kind) {
    case Kind::X:
    case Kind::B: return r;
    case Kind::S:
    case Kind::V:
    case Kind::L: return p;
    case Kind::P: return r == p ? p : 2 * p;
  }
  return 0;
}

std::string ModuleDescriptor::to_string() const {
  std::ostringstream os;
  const bool bracket = kind == Kind::V || kind == Kind::L || kind == Kind::P;
  os << kind_letter(kind) << (bracket ? '[' : '(') << r << (bracket ? ']' : ')') << '_' << nu_raw;
  if (vertices == 1) os << " at a=" << a;
  if (vertices == 2) os << " at (a,t,b)=(" << a << "," << t << "," << b << ")";
  return os.str();
}

ModuleDescriptor make_descriptor(Kind kind, int r, int nu_raw) {
  ModuleDescriptor d;
  d.kind = kind;
  d.r = r;
  d.nu_raw = nu_raw;
  return d;
}

int beta_param(long a, long b, long t, int p) { return residue(a + b - 2 * t, p) + 1; }

int raw_sector(long a_eff, int r, int p) {
  const long d = r - 1 - a_eff;
  if (d % p != 0) throw std::invalid_argument("charge is not congruent to r - 1 mod p");
  return static_cast<int>(d / p);
}

int braiding_sector(long a_eff, int r, int p) { return residue(raw_sector(a_eff, r, p), 4); }

bool iso_check(const ModuleDescriptor& d1, const ModuleDescriptor& d2, IsoMode mode) {
  if (d1.kind != d2.kind || d1.r != d2.r) return false;
  switch (mode) {
    case IsoMode::module_comodule: return true;
    case IsoMode::braided: return residue(d1.nu_raw - d2.nu_raw, 4) == 0;
    case IsoMode::entwined: return residue(d1.nu_raw - d2.nu_raw, 2) == 0;
  }
  return false;
}

ConditionFlags condition_flags(long a, long b, int t, int p) {
  ConditionFlags c;
  const int r = beta_param(a, b, t, p);
  const int am = residue(a, p);
  c.s = r == p;
  if (c.s) return c;
  c.xi = t <= am && am - r + 1 <= t && t <= p - 1 - r;
  c.xii = t >= am + 1 && p - r <= t && t <= p - r + am;
  c.p3 = t >= p - r + am + 1;
  c.p4 = p - r <= t && t <= am;
  c.p1 = t <= am - r;
  c.p2 = am + 1 <= t && t <= p - r - 1;
  return c;
}

ModuleDescriptor classify_one_vertex(long a, int p) {
  const int r = residue(a, p) + 1;
  ModuleDescriptor d = make_descriptor(r == p ? Kind::S : Kind::X, r, raw_sector(a, r, p));
  d.vertices = 1;
  d.a = static_cast<int>(a);
  return d;
}

ModuleDescriptor classify_coinvariant(long a, long b, int t, int p) {
  if (t < 0 || t >= p) throw std::invalid_argument("t out of range");
  const int r = beta_param(a, b, t, p);
  const ConditionFlags c = condition_flags(a, b, t, p);
  Kind kind;
  if (c.s) {
    kind = Kind::S;
  } else if (c.xi || c.xii) {
    kind = Kind::X;
  } else {
    kind = t + r >= p ? Kind::B : Kind::L;
  }
  ModuleDescriptor d = make_descriptor(kind, r, raw_sector(a + b - 2L * t, r, p));
  d.vertices = 2;
  d.a = static_cast<int>(a);
  d.b = static_cast<int>(b);
  d.t = t;
  return d;
}

Kind property_kind(int a, int b, int u, int p) {
  if (u < 0 || u > a || u > b || a >= p || b >= p) throw std::invalid_argument("need 0 <= u <= a,b <= p-1");
  if (a + b <= p - 1) return Kind::X;
  if (u >= a + b - p + 2) return Kind::X;
  const int d = a + b - 2 * u - p;
  if (d >= 0) return Kind::L;
  if (d == -1) return Kind::S;
  return Kind::B;
}

namespace {

bool coact_trivial(const CyclotomicField& f, const YDVec& v) {
  for (const auto& [term, c] : coact(f, v))
    if (term.first != 0) return false;
  return true;
}

YDVec apply_F(const CyclotomicField& f, const YDVec& v) {
  YDVec out;
  for (const auto& [w, c] : v) add_scaled(out, act_F(f, w), c);
  return out;
}

// Adds one cross to the first group of every term.
YDVec shift_first(const CyclotomicField& f, const YDVec& v) {
  YDVec out;
  for (const auto& [w, c] : v) {
    BasisVector x = w;
    ++x.s[0];
    if (x.s[0] >= f.p()) throw std::logic_error("extension vector leaves the basis");
    add_term(out, x, c);
  }
  return out;
}

int grade(const BasisVector& v) {
  int g = 0;
  for (int i = 0; i < v.n; ++i) g += v.s[i];
  return g;
}

std::vector<int> charges_of(const BasisVector& v) {
  std::vector<int> out;
  for (int i = 0; i < v.n; ++i) out.push_back(v.a[i]);
  return out;
}

long effective_charge(const BasisVector& v) {
  long c = 0;
  for (int i = 0; i < v.n; ++i) c += v.a[i];
  for (int i = 1; i < v.n; ++i) c -= 2L * v.s[i];
  return c;
}

}  // namespace

bool in_image_of_F(const CyclotomicField& f, const YDVec& v) {
  if (v.empty()) return true;
  const BasisVector& lead = v.begin()->first;
  const int g = grade(lead);
  if (g == 0) return false;
  EchelonSpan<BasisVector> span;
  for (const auto& w : sector_basis(f.p(), charges_of(lead)))
    if (grade(w) == g - 1) span.insert(act_F(f, w));
  return span.contains(v);
}

bool is_subcomodule_module(const CyclotomicField& f, const std::vector<YDVec>& basis) {
  EchelonSpan<BasisVector> span;
  for (const auto& v : basis) span.insert(v);
  for (const auto& v : basis) {
    if (!span.contains(apply_F(f, v))) return false;
    std::map<int, YDVec> parts;
    for (const auto& [term, c] : coact(f, v)) add_term(parts[term.first], term.second, c);
    for (const auto& [deg, part] : parts)
      if (!span.contains(part)) return false;
  }
  return true;
}

Submodule generate_submodule(const CyclotomicField& f, const BasisVector& coinv) {
  const int p = f.p();
  if (coinv.n < 1 || coinv.n > 2) throw std::invalid_argument("generate_submodule: one- or two-vertex input expected");
  if (coinv.s[0] != 0) throw std::invalid_argument("generate_submodule: input is not a left coinvariant");
  Submodule sub;
  YDVec v = unit_vector(f, coinv);
  int inner = -1;
  while (!v.empty() && static_cast<int>(sub.basis.size()) < p) {
    if (!sub.basis.empty() && inner < 0 && coact_trivial(f, v)) inner = static_cast<int>(sub.basis.size());
    if (inner >= 0) break;
    sub.basis.push_back(v);
    v = apply_F(f, v);
  }
  const long a_eff = effective_charge(coinv);
  const int beta = residue(a_eff, p) + 1;
  Kind kind;
  int r;
  if (inner >= 0) {
    kind = Kind::L;
    r = inner;
    // the L module continues through the inner coinvariant
    while (!v.empty() && static_cast<int>(sub.basis.size()) < p) {
      sub.basis.push_back(v);
      v = apply_F(f, v);
    }
  } else {
    r = static_cast<int>(sub.basis.size());
    if (r == p) {
      kind = Kind::S;
    } else if (in_image_of_F(f, sub.basis.front())) {
      kind = Kind::B;
    } else {
      kind = Kind::X;
    }
  }
  sub.desc = make_descriptor(kind, r, static_cast<int>((beta - 1 - a_eff) / p));
  sub.desc.vertices = coinv.n;
  sub.desc.a = coinv.a[0];
  if (coinv.n == 2) {
    sub.desc.b = coinv.a[1];
    sub.desc.t = coinv.s[1];
  }
  return sub;
}

Submodule extend_to_V(const CyclotomicField& f, const Submodule& x) {
  if (x.desc.kind != Kind::X) throw std::invalid_argument("extend_to_V: X module expected");
  const int p = f.p(), r = x.desc.r;
  Submodule out;
  out.basis = x.basis;
  YDVec u = shift_first(f, x.basis.back());
  for (int i = 1; i <= p - r; ++i) {
    out.basis.push_back(u);
    u = apply_F(f, u);
  }
  out.desc = x.desc;
  out.desc.kind = Kind::V;
  return out;
}

Submodule extend_to_P(const CyclotomicField& f, const Submodule& l) {
  if (l.desc.kind != Kind::L) throw std::invalid_argument("extend_to_P: L module expected");
  const int p = f.p(), r = l.desc.r;
  Submodule out;
  out.basis = l.basis;
  YDVec u = shift_first(f, l.basis.at(r - 1));
  for (int i = 1; i <= p; ++i) {
    out.basis.push_back(u);
    u = apply_F(f, u);
  }
  out.desc = l.desc;
  out.desc.kind = Kind::P;
  return out;
}

ModuleDescriptor extend_to_V(const ModuleDescriptor& d) {
  if (d.kind != Kind::X) throw std::invalid_argument("extend_to_V: X module expected");
  ModuleDescriptor out = d;
  out.kind = Kind::V;
  return out;
}

ModuleDescriptor extend_to_P(const ModuleDescriptor& d) {
  if (d.kind != Kind::L) throw std::invalid_argument("extend_to_P: L module expected");
  ModuleDescriptor out = d;
  out.kind = Kind::P;
  return out;
}

std::vector<ModuleDescriptor> subquotients(const ModuleDescriptor& d, int p) {
  const auto X = [](int r, int nu) { return make_descriptor(Kind::X, r, nu); };
  switch (d.kind) {
    case Kind::X:
    case Kind::B: return {X(d.r, d.nu_raw)};
    case Kind::S: return {X(p, d.nu_raw)};
    case Kind::V:
    case Kind::L: return {X(d.r, d.nu_raw), X(p - d.r, d.nu_raw + 1)};
    case Kind::P:
      if (d.r == p) return {X(p, d.nu_raw)};
      return {X(d.r, d.nu_raw), X(d.r, d.nu_raw + 2), X(p - d.r, d.nu_raw + 1), X(p - d.r, d.nu_raw + 1)};
  }
  return {};
}

int Decomposition::count(Kind k, int r) const {
  auto it = multiplicity.find({k, r});
  return it == multiplicity.end() ? 0 : it->second;
}

Decomposition decompose_space(int vertices, int p) {
  if (vertices != 1 && vertices != 2) throw std::invalid_argument("decompose_space: 1 or 2 vertices");
  const auto& f = CyclotomicField::get(p);
  Decomposition dec;
  dec.vertices = vertices;
  dec.p = p;
  dec.ambient_dimension = vertices == 1 ? static_cast<long>(p) * p : static_cast<long>(p) * p * p * p;

  auto absorb = [&](const Submodule& m, EchelonSpan<BasisVector>& span) {
    dec.multiplicity[{m.desc.kind, m.desc.r}] += 1;
    dec.total_dimension += m.desc.dimension(p);
    if (static_cast<int>(m.basis.size()) != m.desc.dimension(p)) dec.extensions_closed = false;
    if (!is_subcomodule_module(f, m.basis)) dec.extensions_closed = false;
    for (const auto& v : m.basis) span.insert(v);
  };

  if (vertices == 1) {
    for (int a = 0; a < p; ++a) {
      EchelonSpan<BasisVector> span;
      const Submodule m = generate_submodule(f, V1(a, 0));
      const ModuleDescriptor expect = classify_one_vertex(a, p);
      if (m.desc.key() != expect.key()) dec.classification_agrees = false;
      absorb(m.desc.kind == Kind::S ? m : extend_to_V(f, m), span);
      dec.rank += static_cast<long>(span.rank());
    }
    return dec;
  }
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      EchelonSpan<BasisVector> span;
      for (int t = 0; t < p; ++t) {
        const Submodule m = generate_submodule(f, V2(a, b, 0, t));
        const ModuleDescriptor expect = classify_coinvariant(a, b, t, p);
        if (m.desc.key() != expect.key()) dec.classification_agrees = false;
        switch (m.desc.kind) {
          case Kind::S: absorb(m, span); break;
          case Kind::X: absorb(extend_to_V(f, m), span); break;
          case Kind::L: absorb(extend_to_P(f, m), span); break;
          case Kind::B: ++dec.bottom_count; break;
          default: dec.classification_agrees = false;
        }
      }
      dec.rank += static_cast<long>(span.rank());
    }
  }
  return dec;
}

std::vector<TableCell> figure1_table(int p) {
  std::vector<TableCell> out;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int t = 0; t < p; ++t) out.push_back({a, t, b, classify_coinvariant(a, b, t, p)});
  return out;
}

}  // namespace ydf

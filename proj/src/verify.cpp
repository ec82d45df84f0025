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
#include "ydfusion/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "ydfusion/classify.hpp"
#include "ydfusion/fusion.hpp"
#include "ydfusion/fusionring.hpp"
#include "ydfusion/loop.hpp"
#include "ydfusion/nichols.hpp"
#include "ydfusion/ydspace.hpp"

namespace ydf {

void SuiteReport::add(CheckResult c) {
  checked += c.checked;
  if (!c.ok()) ++failed;
  checks.push_back(std::move(c));
}

bool SuiteReport::ok() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

std::string SuiteReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << suite << "/" << c.name << " " << (c.ok() ? "ok" : "FAIL") << " checked=" << c.checked << " failed=" << c.failed;
    if (!c.detail.empty()) os << " [" << c.detail << "]";
    os << "\n";
  }
  return os.str();
}

namespace {

// Accumulates one named check.
class Tally {
 public:
  explicit Tally(std::string name) { res_.name = std::move(name); }
  void record(bool ok, const std::function<std::string()>& what = {}) {
    ++res_.checked;
    if (!ok) {
      ++res_.failed;
      if (res_.detail.empty() && what) res_.detail = what();
    }
  }
  void note(const std::string& s) {
    if (res_.detail.empty()) res_.detail = s;
  }
  CheckResult done() { return std::move(res_); }

 private:
  CheckResult res_;
};

CheckResult from_count(const std::string& name, const CheckCount& c) {
  CheckResult r;
  r.name = name;
  r.checked = c.checked;
  r.failed = c.failed;
  return r;
}

CheckResult from_ring(const std::string& name, const RingReport& c) {
  CheckResult r;
  r.name = name;
  r.checked = c.checked;
  r.failed = c.failed;
  r.detail = c.first_failure;
  return r;
}

std::string at(std::initializer_list<long> xs) {
  std::ostringstream os;
  os << "at";
  for (long x : xs) os << " " << x;
  return os.str();
}

using Triple = LinComb<std::tuple<int, int, int>>;

}  // namespace

SuiteReport check_hopf_axioms(int p) {
  const auto& f = CyclotomicField::get(p);
  SuiteReport rep;
  rep.suite = "hopf";
  rep.p = p;

  Tally assoc("product_associative");
  for (int r = 0; r < p; ++r)
    for (int s = 0; s < p; ++s)
      for (int t = 0; t < p; ++t)
        assoc.record(equal(product(f, product(f, F(f, r), F(f, s)), F(f, t)), product(f, F(f, r), product(f, F(f, s), F(f, t)))),
                     [&] { return at({r, s, t}); });
  rep.add(assoc.done());

  Tally coassoc("coproduct_coassociative");
  for (int r = 0; r < p; ++r) {
    Triple left, right;
    for (const auto& [k, c] : coproduct(f, F(f, r))) {
      for (const auto& [k2, c2] : coproduct(f, F(f, k.first))) add_term(left, std::make_tuple(k2.first, k2.second, k.second), c * c2);
      for (const auto& [k2, c2] : coproduct(f, F(f, k.second))) add_term(right, std::make_tuple(k.first, k2.first, k2.second), c * c2);
    }
    coassoc.record(equal(left, right), [&] { return at({r}); });
  }
  rep.add(coassoc.done());

  Tally bialg("braided_bialgebra");
  for (int r = 0; r < p; ++r)
    for (int s = 0; s < p; ++s)
      bialg.record(equal(coproduct(f, product(f, F(f, r), F(f, s))),
                         braided_tensor_product(f, coproduct(f, F(f, r)), coproduct(f, F(f, s)))),
                   [&] { return at({r, s}); });
  rep.add(bialg.done());

  Tally unit("unit_counit");
  for (int r = 0; r < p; ++r) {
    unit.record(equal(product(f, F(f, 0), F(f, r)), F(f, r)) && equal(product(f, F(f, r), F(f, 0)), F(f, r)));
    NicholsElt left, right;
    for (const auto& [k, c] : coproduct(f, F(f, r))) {
      add_scaled(left, F(f, k.second), c * counit(F(f, k.first)));
      add_scaled(right, F(f, k.first), c * counit(F(f, k.second)));
    }
    unit.record(equal(left, F(f, r)) && equal(right, F(f, r)), [&] { return at({r}); });
  }
  rep.add(unit.done());

  Tally anti("antipode");
  for (int r = 0; r < p; ++r) {
    NicholsElt left, right;
    for (const auto& [k, c] : coproduct(f, F(f, r))) {
      add_scaled(left, product(f, antipode(f, F(f, k.first)), F(f, k.second)), c);
      add_scaled(right, product(f, F(f, k.first), antipode(f, F(f, k.second))), c);
    }
    const NicholsElt expected = F(f, 0, counit(F(f, r)));
    anti.record(equal(left, expected) && equal(right, expected), [&] { return at({r}); });
    anti.record(equal(antipode_inv(f, antipode(f, F(f, r))), F(f, r)) && equal(antipode(f, antipode_inv(f, F(f, r))), F(f, r)));
    anti.record(equal(antipode(f, F(f, r)), F(f, r, antipode_scalar(f, r))));
  }
  rep.add(anti.done());

  Tally powers("divided_powers");
  for (int r = 0; r < p; ++r) powers.record(equal(generator_power(f, r), F(f, r, f.q_fact(r))), [&] { return at({r}); });
  powers.record(generator_power(f, p).empty(), [] { return std::string("F^p != 0"); });
  rep.add(powers.done());

  Tally shuffle("shuffle_oracle");
  for (int r = 0; r <= 6; ++r)
    for (int s = 0; r + s <= 6; ++s)
      shuffle.record(shuffle_product_oracle(f, r, s) == f.q_binom(r + s, r), [&] { return at({r, s}); });
  rep.add(shuffle.done());

  Tally twist("half_twist_oracle");
  for (int r = 0; r < std::min(p, 7); ++r)
    twist.record(half_twist_oracle(f, r) == antipode_scalar(f, r), [&] { return at({r}); });
  rep.add(twist.done());
  return rep;
}

namespace {

std::vector<BasisVector> one_and_two_vertex_basis(int p) {
  std::vector<BasisVector> out;
  for (int a = 0; a < 2 * p; ++a)
    for (int s = 0; s < p; ++s) out.push_back(V1(a, s));
  for (int a = 0; a < 2 * p; ++a)
    for (int b = 0; b < 2 * p; ++b)
      for (int s = 0; s < p; ++s)
        for (int t = 0; t < p; ++t) out.push_back(V2(a, b, s, t));
  return out;
}

std::vector<TensorKey> simple_pairs(int p) {
  std::vector<TensorKey> out;
  for (int a = 0; a < 2 * p; ++a)
    for (int b = 0; b < 2 * p; ++b)
      for (int s = 0; s <= residue(a, p); ++s)
        for (int t = 0; t <= residue(b, p); ++t) out.emplace_back(V1(a, s), V1(b, t));
  return out;
}

std::string describe(const BasisVector& v) {
  std::ostringstream os;
  os << "V^{";
  for (int i = 0; i < v.n; ++i) os << (i ? "," : "") << v.a[i];
  os << "}_{";
  for (int i = 0; i < v.n; ++i) os << (i ? "," : "") << v.s[i];
  os << "}";
  return os.str();
}

}  // namespace

SuiteReport check_yd_axioms(int p) {
  const auto& f = CyclotomicField::get(p);
  SuiteReport rep;
  rep.suite = "yd";
  rep.p = p;
  const auto basis = one_and_two_vertex_basis(p);

  Tally yd("yd_axiom_sectors");
  for (const auto& v : basis)
    for (int r = 1; r < p; ++r) yd.record(yd_axiom_check(f, r, v), [&] { return describe(v) + " r=" + std::to_string(r); });
  rep.add(yd.done());

  Tally ydt("yd_axiom_simple_tensors");
  for (const auto& k : simple_pairs(p))
    for (int r = 1; r < p; ++r)
      ydt.record(yd_axiom_check(f, r, k), [&] { return describe(k.first) + " (x) " + describe(k.second); });
  rep.add(ydt.done());

  Tally mod("module_axiom");
  Tally closed("closed_action_vs_iterated");
  for (const auto& v : basis) {
    for (int r = 1; r < p; ++r) {
      closed.record(equal(act_Fr(f, r, v), act_Fr_iterated(f, r, v)), [&] { return describe(v); });
      for (int s = 1; s < p; ++s) {
        YDVec expected;
        if (r + s < p) expected = scaled(act_Fr(f, r + s, v), f.q_binom(r + s, r));
        mod.record(equal(act_Fr(f, r, act_Fr(f, s, v)), expected), [&] { return describe(v); });
      }
    }
  }
  rep.add(mod.done());
  rep.add(closed.done());

  Tally com("comodule_axiom");
  using Coco = LinComb<std::tuple<int, int, BasisVector>>;
  for (const auto& v : basis) {
    Coco left, right;
    YDVec degree0;
    for (const auto& [term, c] : coact(f, v)) {
      if (term.first == 0) add_term(degree0, term.second, c);
      for (const auto& [k, c2] : coproduct(f, F(f, term.first)))
        add_term(left, std::make_tuple(k.first, k.second, term.second), c * c2);
      for (const auto& [t2, c2] : coact(f, term.second))
        add_term(right, std::make_tuple(term.first, t2.first, t2.second), c * c2);
    }
    com.record(equal(left, right) && equal(degree0, unit_vector(f, v)), [&] { return describe(v); });
  }
  rep.add(com.done());
  return rep;
}

SuiteReport check_braiding(int p) {
  const auto& f = CyclotomicField::get(p);
  SuiteReport rep;
  rep.suite = "braiding";
  rep.p = p;
  std::vector<TensorKey> pairs;
  for (int a = 0; a < 2 * p; ++a)
    for (int b = 0; b < 2 * p; ++b)
      for (int s = 0; s < p; ++s)
        for (int t = 0; t < p; ++t) pairs.emplace_back(V1(a, s), V1(b, t));

  Tally inv("inverse");
  Tally diag("double_braiding_diagram");
  Tally nat("braiding_is_morphism");
  for (const auto& k : pairs) {
    const TensorVec x{{k, f.one()}};
    const TensorVec bx = braid_B(f, x);
    inv.record(equal(braid_B_inv(f, bx), x) && equal(braid_B(f, braid_B_inv(f, x)), x),
               [&] { return describe(k.first) + " (x) " + describe(k.second); });
    diag.record(equal(braid_B2(f, x), braid_B2_diagram(f, x)), [&] { return describe(k.first) + " (x) " + describe(k.second); });
    bool ok = true;
    for (int r = 1; r < p && ok; ++r) ok = equal(braid_B(f, tensor_act_Fr(f, r, k)), tensor_act_Fr(f, r, bx));
    CoactVec<TensorKey> mapped;
    for (const auto& [term, c] : tensor_coact(f, k))
      for (const auto& [k2, c2] : braid_B(f, TensorVec{{term.second, f.one()}})) add_term(mapped, std::make_pair(term.first, k2), c * c2);
    nat.record(ok && equal(mapped, tensor_coact(f, bx)), [&] { return describe(k.first) + " (x) " + describe(k.second); });
  }
  rep.add(inv.done());
  rep.add(diag.done());
  rep.add(nat.done());

  CheckResult fi;
  fi.name = "fusion_map_is_morphism";
  fi.checked = static_cast<long>(pairs.size());
  fi.failed = check_fusion_intertwines(p);
  rep.add(fi);

  const MonodromyReport m = check_monodromy(p);
  CheckResult fused;
  fused.name = "monodromy_closed_form_after_fusion";
  fused.checked = m.pairs;
  fused.failed = m.pairs - m.fused_matches;
  if (!m.fused_ok()) fused.detail = "first mismatch " + m.first_mismatch;
  rep.add(fused);
  CheckResult embedded;
  embedded.name = "monodromy_closed_form_embedded";
  embedded.checked = m.pairs;
  embedded.failed = m.pairs - m.embedded_matches;
  rep.add(embedded);
  return rep;
}

SuiteReport check_ribbon(int p) {
  const auto& f = CyclotomicField::get(p);
  SuiteReport rep;
  rep.suite = "ribbon";
  rep.p = p;
  Tally comm("theta_is_morphism");
  for (const auto& v : one_and_two_vertex_basis(p)) {
    const YDVec tv = ribbon(f, v);
    bool ok = true;
    for (int r = 1; r < p && ok; ++r) ok = equal(ribbon(f, act_Fr(f, r, v)), act_Fr(f, r, tv));
    CoactVec<BasisVector> mapped;
    for (const auto& [term, c] : coact(f, v))
      for (const auto& [w, cw] : ribbon(f, term.second)) add_term(mapped, std::make_pair(term.first, w), c * cw);
    comm.record(ok && equal(mapped, coact(f, tv)), [&] { return describe(v); });
  }
  rep.add(comm.done());

  Tally scalar("theta_scalar_on_simples");
  for (int a = 0; a < 2 * p; ++a) {
    const YDVec t0 = ribbon(f, V1(a, 0));
    const CycNum c0 = t0.count(V1(a, 0)) ? t0.at(V1(a, 0)) : CycNum();
    for (int s = 0; s <= residue(a, p); ++s)
      scalar.record(!c0.is_zero() && equal(ribbon(f, V1(a, s)), scaled(unit_vector(f, V1(a, s)), c0)),
                    [&] { return describe(V1(a, s)); });
  }
  rep.add(scalar.done());

  const RibbonReport rr = check_ribbon_through_fusion(p);
  CheckResult through;
  through.name = "ribbon_through_fusion";
  through.checked = rr.pairs;
  through.failed = rr.failures;
  rep.add(through);
  return rep;
}

SuiteReport check_duality(int p) {
  SuiteReport rep;
  rep.suite = "duality";
  rep.p = p;
  rep.add(from_count("zigzag", check_zigzag(p)));
  rep.add(from_count("ev_coev_are_morphisms", check_ev_coev_morphisms(p)));
  rep.add(from_count("one_vertex_dual_basis", check_one_vertex_identification(p)));
  rep.add(from_count("two_vertex_dual_basis", check_two_vertex_identification(p)));
  rep.add(from_count("c_coefficient_symmetry", check_c_symmetry(p)));
  rep.add(from_count("dual_descriptors", check_dual_descriptors(p)));
  rep.add(from_count("sigma2_intertwining", check_sigma2_intertwining(p)));
  return rep;
}

SuiteReport check_fusion_suite(int p) {
  SuiteReport rep;
  rep.suite = "fusion";
  rep.p = p;

  Tally d1("one_vertex_decomposition");
  const Decomposition one = decompose_space(1, p);
  d1.record(one.total_dimension == static_cast<long>(p) * p && one.rank == one.total_dimension);
  d1.record(one.count(Kind::S, p) == 1);
  for (int r = 1; r < p; ++r) d1.record(one.count(Kind::V, r) == 1, [&] { return "V[" + std::to_string(r) + "]"; });
  d1.record(one.classification_agrees && one.extensions_closed);
  rep.add(d1.done());

  Tally d2("two_vertex_decomposition");
  const Decomposition two = decompose_space(2, p);
  const long p4 = static_cast<long>(p) * p * p * p;
  d2.record(two.total_dimension == p4 && two.rank == p4, [&] { return "total " + std::to_string(two.total_dimension); });
  d2.record(two.count(Kind::S, p) == p * p);
  long v_sum = 0, p_sum = 0;
  for (int r = 1; r < p; ++r) {
    d2.record(two.count(Kind::V, r) == 2 * r * (p - r), [&] { return "V[" + std::to_string(r) + "]"; });
    d2.record(two.count(Kind::P, r) == (p - r) * (p - r), [&] { return "P[" + std::to_string(r) + "]"; });
    v_sum += two.count(Kind::V, r);
    p_sum += two.count(Kind::P, r);
  }
  // aggregate counts: sum 2r(p-r) and sum (p-r)^2
  d2.record(3 * v_sum == static_cast<long>(p) * (static_cast<long>(p) * p - 1), [] { return std::string("V total"); });
  d2.record(6 * p_sum == static_cast<long>(p) * (p - 1) * (2 * p - 1), [] { return std::string("P total"); });
  d2.record(two.classification_agrees && two.extensions_closed);
  rep.add(d2.done());

  Tally cls("classification_vs_orbit");
  for (const auto& cell : figure1_table(p)) {
    const Submodule m = generate_submodule(CyclotomicField::get(p), V2(cell.a, cell.b, 0, cell.t));
    cls.record(m.desc.key() == cell.desc.key(), [&] { return at({cell.a, cell.t, cell.b}); });
  }
  rep.add(cls.done());

  Tally fus("closed_form_vs_brute_force");
  for (int r1 = 1; r1 <= p; ++r1)
    for (int nu1 = 0; nu1 < 4; ++nu1)
      for (int r2 = 1; r2 <= p; ++r2)
        for (int nu2 = 0; nu2 < 4; ++nu2) {
          const FusionCheck c = fuse_simples(r1, nu1, r2, nu2, p);
          fus.record(c.agree, [&] { return c.closed.to_string(); });
        }
  rep.add(fus.done());
  return rep;
}

SuiteReport check_loop(int p) {
  SuiteReport rep;
  rep.suite = "loop";
  rep.p = p;

  Tally simple("chi_on_simples");
  for (int rp = 1; rp <= p; ++rp)
    for (int nup = 0; nup < 4; ++nup)
      for (int r = 1; r <= p; ++r)
        for (int nu = 0; nu < 4; ++nu) {
          const LoopAction a = chi_on_simple(rp, nup, r, nu, p);
          const CycNum expected = rp == p ? lambda_steinberg(nup, r, nu, p) : lambda_closed(rp, nup, r, nu, p);
          simple.record(a.scalar && a.commutes && a.forms_agree && a.lambda == expected,
                        [&] { return at({rp, nup, r, nu}); });
        }
  rep.add(simple.done());

  Tally forms("lambda_sum_vs_ratio");
  Tally sub("lambda_subquotient_identity");
  Tally mod2("lambda_mu_mod_2");
  for (int rp = 1; rp < p; ++rp)
    for (int nup = 0; nup < 4; ++nup)
      for (int r = 1; r <= p; ++r)
        for (int nu = 0; nu < 4; ++nu) {
          const CycNum l = lambda_closed(rp, nup, r, nu, p);
          forms.record(l == lambda_ratio(rp, nup, r, nu, p), [&] { return at({rp, nup, r, nu}); });
          sub.record(l == lambda_closed(p - rp, nup + 1, r, nu, p), [&] { return at({rp, nup, r, nu}); });
          mod2.record(l == lambda_closed(rp, nup + 2, r, nu, p) && l == lambda_closed(rp, nup, r, nu + 2, p) &&
                          mu_closed(rp, nup, r, nu, p) == mu_closed(rp, nup + 2, r, nu, p) &&
                          mu_closed(rp, nup, r, nu, p) == mu_closed(rp, nup, r, nu + 2, p),
                      [&] { return at({rp, nup, r, nu}); });
        }
  rep.add(forms.done());
  rep.add(sub.done());
  rep.add(mod2.done());

  CheckResult form{"chi_on_P_shape", 0, 0, {}}, lam{"chi_on_P_lambda", 0, 0, {}}, mu{"chi_on_P_mu_closed", 0, 0, {}},
      scaled_mu{"chi_on_P_mu_up_to_basis_factor", 0, 0, "factor (-1)^nu' q^(1-r')"};
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int t = 0; t < p; ++t) {
        if (classify_coinvariant(a, b, t, p).kind != Kind::L) continue;
        const PCheck c = check_chi_on_P(a, t, b, p);
        form.checked += c.cases;
        form.failed += c.form_fail;
        lam.checked += c.cases;
        lam.failed += c.lambda_fail;
        mu.checked += c.cases;
        mu.failed += c.mu_fail;
        scaled_mu.checked += c.cases;
        scaled_mu.failed += c.mu_scaled_fail;
        if (mu.detail.empty() && c.mu_fail) mu.detail = c.first_failure;
      }
  rep.add(form);
  rep.add(lam);
  rep.add(mu);
  rep.add(scaled_mu);

  Tally mult("multiplicativity");
  for (int rw = 1; rw <= p; ++rw)
    for (int nuw = 0; nuw < 2; ++nuw)
      for (int rz = 1; rz <= p; ++rz)
        for (int nuz = 0; nuz < 2; ++nuz)
          for (int ry = 1; ry <= p; ++ry)
            for (int nuy = 0; nuy < 4; ++nuy)
              mult.record(verify_multiplicativity(rw, nuw, rz, nuz, ry, nuy, p),
                          [&] { return at({rw, nuw, rz, nuz, ry, nuy}); });
  rep.add(mult.done());
  return rep;
}

SuiteReport check_ring(int p) {
  SuiteReport rep;
  rep.suite = "ring";
  rep.p = p;
  rep.add(from_ring("commutative_associative", verify_ring(p)));
  rep.add(from_ring("matches_module_fusion", verify_against_fusion(p)));
  rep.add(from_ring("lambda_characters", verify_against_lambda(p)));
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hopf", "yd", "braiding", "ribbon", "duality", "fusion", "loop", "ring"};
  return names;
}

SuiteReport run_suite(const std::string& name, int p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  if (name == "all") {
    SuiteReport all;
    all.suite = "all";
    all.p = p;
    for (const auto& n : suite_names()) {
      SuiteReport one = run_suite(n, p);
      for (auto& c : one.checks) {
        c.name = n + "/" + c.name;
        all.add(std::move(c));
      }
    }
    return all;
  }
  if (name == "hopf") return check_hopf_axioms(p);
  if (name == "yd") return check_yd_axioms(p);
  if (name == "braiding") return check_braiding(p);
  if (name == "ribbon") return check_ribbon(p);
  if (name == "duality") return check_duality(p);
  if (name == "fusion") return check_fusion_suite(p);
  if (name == "loop") return check_loop(p);
  if (name == "ring") return check_ring(p);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace ydf

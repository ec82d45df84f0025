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
// Acceptance run: one PASS/FAIL line per criterion, with counts and wall
// time against the budget.  Usage: acceptance <path to ydfusion binary>.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "figure1_cells.hpp"
#include "ydfusion/classify.hpp"
#include "ydfusion/fusionring.hpp"
#include "ydfusion/verify.hpp"

namespace {

struct Verdict {
  bool ok = true;
  long checked = 0;
  long failed = 0;
  std::string detail;

  void note(const std::string& s) {
    if (detail.empty()) detail = s;
  }
};

std::map<std::pair<std::string, int>, ydf::SuiteReport> g_reports;

const ydf::SuiteReport& report(const std::string& suite, int p) {
  auto it = g_reports.find({suite, p});
  if (it == g_reports.end()) it = g_reports.emplace(std::make_pair(suite, p), ydf::run_suite(suite, p)).first;
  return it->second;
}

// Folds the named checks of a suite over a p range into the verdict.
void take(Verdict& v, const std::string& suite, int p_lo, int p_hi, const std::set<std::string>& names) {
  for (int p = p_lo; p <= p_hi; ++p) {
    std::set<std::string> seen;
    for (const auto& c : report(suite, p).checks) {
      if (!names.count(c.name)) continue;
      seen.insert(c.name);
      v.checked += c.checked;
      v.failed += c.failed;
      if (!c.ok()) {
        v.ok = false;
        v.note(suite + "/" + c.name + " p=" + std::to_string(p) + " failed " + std::to_string(c.failed) + "/" +
               std::to_string(c.checked) + (c.detail.empty() ? "" : " (" + c.detail + ")"));
      }
    }
    for (const auto& n : names)
      if (!seen.count(n)) {
        v.ok = false;
        v.note("missing check " + suite + "/" + n);
      }
  }
}

void take(Verdict& v, const ydf::RingReport& r, const std::string& what, int p) {
  v.checked += r.checked;
  v.failed += r.failed;
  if (!r.ok()) {
    v.ok = false;
    v.note(what + " p=" + std::to_string(p) + ": " + r.first_failure);
  }
}

Verdict c1() {
  Verdict v;
  take(v, "hopf", 2, 6,
       {"product_associative", "coproduct_coassociative", "braided_bialgebra", "unit_counit", "antipode", "divided_powers",
        "shuffle_oracle", "half_twist_oracle"});
  return v;
}

Verdict c2() {
  Verdict v;
  take(v, "yd", 2, 5, {"yd_axiom_sectors"});
  take(v, "yd", 2, 3, {"yd_axiom_simple_tensors"});
  return v;
}

Verdict c3() {
  Verdict v;
  take(v, "fusion", 2, 6, {"one_vertex_decomposition", "two_vertex_decomposition"});
  for (int p = 2; p <= 6; ++p) {
    const auto d = ydf::decompose_space(2, p);
    long tri = 0, sq = 0;
    bool counts = d.total_dimension == static_cast<long>(p) * p * p * p && d.count(ydf::Kind::S, p) == p * p;
    for (int r = 1; r < p; ++r) {
      counts = counts && d.count(ydf::Kind::V, r) == 2 * r * (p - r) && d.count(ydf::Kind::P, r) == (p - r) * (p - r);
      tri += d.count(ydf::Kind::V, r);
      sq += d.count(ydf::Kind::P, r);
    }
    ++v.checked;
    if (!counts || 3 * tri != static_cast<long>(p) * (p * p - 1) || 6 * sq != static_cast<long>(p) * (p - 1) * (2 * p - 1)) {
      ++v.failed;
      v.ok = false;
      v.note("two-vertex counts p=" + std::to_string(p));
    }
  }
  return v;
}

Verdict c4() {
  Verdict v;
  std::map<std::tuple<int, int, int>, ydf::ModuleDescriptor> cells;
  for (const auto& c : ydf::figure1_table(5)) cells[{c.a, c.t, c.b}] = c.desc;
  for (const auto& ref : ydf::testdata::kFigure1Cells) {
    ++v.checked;
    const auto it = cells.find({ref.a, ref.t, ref.b});
    const bool same = it != cells.end() && ydf::kind_letter(it->second.kind) == ref.kind && it->second.r == ref.r &&
                      it->second.nu() == ydf::residue(ref.nu, 4);
    if (!same) {
      ++v.failed;
      v.ok = false;
      v.note("cell a=" + std::to_string(ref.a) + " t=" + std::to_string(ref.t) + " b=" + std::to_string(ref.b));
    }
  }
  return v;
}

Verdict c5() {
  Verdict v;
  take(v, "fusion", 2, 5, {"closed_form_vs_brute_force"});
  return v;
}

Verdict c6() {
  Verdict v;
  take(v, "braiding", 2, 4, {"monodromy_closed_form_after_fusion", "monodromy_closed_form_embedded"});
  return v;
}

Verdict c7() {
  Verdict v;
  take(v, "ribbon", 2, 4, {"ribbon_through_fusion"});
  return v;
}

Verdict c8() {
  Verdict v;
  take(v, "duality", 2, 4,
       {"zigzag", "one_vertex_dual_basis", "two_vertex_dual_basis", "c_coefficient_symmetry", "dual_descriptors"});
  return v;
}

Verdict c9() {
  Verdict v;
  take(v, "loop", 2, 4,
       {"chi_on_simples", "lambda_sum_vs_ratio", "lambda_subquotient_identity", "lambda_mu_mod_2", "chi_on_P_shape",
        "chi_on_P_lambda", "chi_on_P_mu_closed"});
  return v;
}

Verdict c10() {
  Verdict v;
  take(v, "loop", 2, 4, {"multiplicativity"});
  return v;
}

Verdict c11() {
  Verdict v;
  for (int p = 2; p <= 10; ++p) take(v, ydf::verify_ring(p), "ring axioms", p);
  for (int p = 2; p <= 5; ++p) take(v, ydf::verify_against_fusion(p), "module fusion", p);
  for (int p = 2; p <= 4; ++p) take(v, ydf::verify_against_lambda(p), "lambda characters", p);
  return v;
}

std::pair<std::string, int> run_cli(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {"", -1};
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

std::string g_cli;

Verdict c12() {
  Verdict v;
  if (g_cli.empty()) {
    v.ok = false;
    v.note("no CLI path given");
    return v;
  }
  const std::string cmd = "'" + g_cli + "' verify --p 3 --suite all --format pretty";
  const auto [out1, rc1] = run_cli(cmd);
  const auto [out2, rc2] = run_cli(cmd);
  v.checked = 2;
  const bool same = out1 == out2 && rc1 == rc2 && !out1.empty();
  if (!same) {
    v.ok = false;
    v.note("reports differ between runs");
  }
  if (rc1 != 0 || rc2 != 0) {
    v.ok = false;
    v.failed = (rc1 != 0) + (rc2 != 0);
    std::string failing;
    std::istringstream lines(out1);
    for (std::string line; std::getline(lines, line);)
      if (line.find(" FAIL ") != std::string::npos) failing += (failing.empty() ? "" : "; ") + line.substr(0, line.find(" checked"));
    v.note(std::string(same ? "byte-identical, " : "") + "exit " + std::to_string(rc1) + " (" + failing + ")");
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Hopf axioms and oracles, p=2..6", 10, c1},
      {2, "YD axiom on sectors p=2..5 and simple tensors p=2..3", 60, c2},
      {3, "one- and two-vertex decomposition counts, p=2..6", 60, c3},
      {4, "classification table at p=5, 75 cells", 5, c4},
      {5, "fusion closed form vs brute force, p=2..5", 300, c5},
      {6, "monodromy closed form after fusion, p=2..4", 120, c6},
      {7, "ribbon identity through fusion, p=2..4", 120, c7},
      {8, "duality identities and dual descriptors, p=2..4", 120, c8},
      {9, "loop operator on simples and projectives, p=2..4", 300, c9},
      {10, "loop operator multiplicativity, p=2..4", 120, c10},
      {11, "fusion ring axioms p<=10, module fusion p<=5, characters p<=4", 30, c11},
      {12, "CLI verify --p 3 --suite all deterministic with exit 0", 600, c12},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) {
      v.ok = false;
      v.note("over time budget");
    }
    if (!v.ok) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, c.budget_s);
    std::cout << "criterion " << c.id << ": " << (v.ok ? "PASS" : "FAIL") << "  " << c.name << "  checked=" << v.checked
              << " failed=" << v.failed << " time=" << timing;
    if (!v.ok && !v.detail.empty()) std::cout << "  [" << v.detail << "]";
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}

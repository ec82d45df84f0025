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
// Verification suites run by the command-line tool and the tests.  Every
// check records how many cases it looked at and how many failed; output is
// ordered and free of timings.

#pragma once

#include <string>
#include <vector>

namespace ydf {

struct CheckResult {
  std::string name;
  long checked = 0;
  long failed = 0;
  std::string detail;  // first failure, or a note

  bool ok() const { return checked > 0 && failed == 0; }
};

struct SuiteReport {
  std::string suite;
  int p = 0;
  std::vector<CheckResult> checks;
  long checked = 0;
  long failed = 0;

  void add(CheckResult c);
  bool ok() const;
  /// One line per check: "suite/name ok|FAIL checked=N failed=M [detail]".
  std::string summary() const;
};

/// Associativity, coassociativity, braided bialgebra compatibility, unit and
/// counit, antipode on both sides, A A^{-1} = id, divided powers, and the
/// shuffle and half-twist oracles up to degree 6.
SuiteReport check_hopf_axioms(int p);
/// YD compatibility on the one- and two-vertex sectors (charges 0..2p-1) and
/// on tensor products of simples; action and coaction axioms.
SuiteReport check_yd_axioms(int p);
/// B B^{-1} = id, B^2 against the one-diagram oracle, naturality of B, the
/// fusion map as a morphism, and the closed-form monodromy in both readings.
SuiteReport check_braiding(int p);
/// theta commutes with action and coaction, is scalar on simples, and the
/// ribbon identity through the fusion map.
SuiteReport check_ribbon(int p);
SuiteReport check_duality(int p);
/// Decomposition counts, classification, fusion closed form vs brute force.
SuiteReport check_fusion_suite(int p);
SuiteReport check_loop(int p);
SuiteReport check_ring(int p);

/// hopf, yd, braiding, ribbon, duality, fusion, loop, ring.
const std::vector<std::string>& suite_names();
/// One suite by name; "all" runs every suite in order into one report.
SuiteReport run_suite(const std::string& name, int p);

}  // namespace ydf

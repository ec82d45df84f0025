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
// ydfusion: fusion tables, decompositions, classification, loop eigenvalues
// and verification suites.  Exit codes: 0 ok, 1 usage, 2 verification failure.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ydfusion/classify.hpp"
#include "ydfusion/fusion.hpp"
#include "ydfusion/loop.hpp"
#include "ydfusion/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "ydfusion-cache-1";

struct RunConfig {
  std::string command;
  int p = 2;
  int max_p = 12;
  std::string format = "json";
  int nu_mod = 4;
  std::string output;
  std::string suite = "all";
  int vertices = 2;
  std::optional<long> a, b, t;
  std::string cache_dir;
};

struct Outcome {
  std::string text;
  int exit_code = 0;
};

int nu_out(int nu_raw, const RunConfig& cfg) { return ydf::residue(nu_raw, cfg.nu_mod); }

Json label_json(const ydf::ModuleDescriptor& d, const RunConfig& cfg) {
  Json j;
  j["kind"] = std::string(1, ydf::kind_letter(d.kind));
  j["r"] = d.r;
  j["nu"] = nu_out(d.nu_raw, cfg);
  return j;
}

std::string label_text(const ydf::ModuleDescriptor& d, const RunConfig& cfg) {
  const bool bracket = d.kind == ydf::Kind::V || d.kind == ydf::Kind::L || d.kind == ydf::Kind::P;
  std::ostringstream os;
  os << ydf::kind_letter(d.kind) << (bracket ? "[" : "(") << d.r << (bracket ? "]" : ")") << "_" << nu_out(d.nu_raw, cfg);
  return os.str();
}

double tidy(double x) {
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

// Exact coefficients over zeta^k plus a labeled floating-point image.
Json scalar_json(const ydf::CycNum& x, int p) {
  Json j;
  Json exact = Json::array();
  const auto coeffs = x.coefficients();
  const int degree = ydf::CyclotomicField::get(p).degree();
  for (int k = 0; k < degree; ++k) exact.push_back(coeffs.empty() ? std::string("0") : coeffs[k].get_str());
  j["exact_zeta_coefficients"] = exact;
  const auto z = x.to_complex();
  j["approx"] = Json{{"re", tidy(z.real())}, {"im", tidy(z.imag())}};
  return j;
}

std::string render(const Json& j) { return j.dump() + "\n"; }

// -- commands -----------------------------------------------------------------

Outcome cmd_fusion(const RunConfig& cfg) {
  const int p = cfg.p;
  const bool brute = p <= 6;  // the brute-force path is exact but grows fast
  Json entries = Json::array();
  Json mismatches = Json::array();
  std::ostringstream csv, pretty;
  csv << "r1,nu1,r2,nu2,summands\n";
  for (int r1 = 1; r1 <= p; ++r1)
    for (int nu1 = 0; nu1 < cfg.nu_mod; ++nu1)
      for (int r2 = 1; r2 <= p; ++r2)
        for (int nu2 = 0; nu2 < cfg.nu_mod; ++nu2) {
          const ydf::FusionResult closed = ydf::fuse_closed(r1, nu1, r2, nu2, p);
          if (brute && !ydf::fuse_simples(r1, nu1, r2, nu2, p).agree)
            mismatches.push_back(Json{{"r1", r1}, {"nu1", nu1}, {"r2", r2}, {"nu2", nu2}});
          Json e;
          e["r1"] = r1;
          e["nu1"] = nu1;
          e["r2"] = r2;
          e["nu2"] = nu2;
          Json sums = Json::array();
          std::string joined;
          for (const auto& m : closed.summands) {
            sums.push_back(label_json(m, cfg));
            joined += (joined.empty() ? "" : " + ") + label_text(m, cfg);
          }
          e["summands"] = sums;
          entries.push_back(e);
          csv << r1 << "," << nu1 << "," << r2 << "," << nu2 << "," << joined << "\n";
          pretty << "X(" << r1 << ")_" << nu1 << " x X(" << r2 << ")_" << nu2 << " = " << joined << "\n";
        }
  Outcome out;
  out.exit_code = mismatches.empty() ? 0 : 2;
  if (cfg.format == "json") {
    Json j;
    j["p"] = p;
    j["nu_mod"] = cfg.nu_mod;
    j["brute_force_checked"] = brute;
    j["entries"] = entries;
    j["mismatches"] = mismatches;
    out.text = render(j);
  } else {
    out.text = cfg.format == "csv" ? csv.str() : pretty.str();
  }
  return out;
}

Outcome cmd_decompose(const RunConfig& cfg) {
  const int p = cfg.p;
  const ydf::Decomposition d = ydf::decompose_space(cfg.vertices, p);
  bool ok = d.total_dimension == d.ambient_dimension && d.rank == d.ambient_dimension && d.classification_agrees &&
            d.extensions_closed;
  Json mult = Json::array();
  std::ostringstream csv, pretty;
  csv << "kind,r,count\n";
  pretty << "p=" << p << " vertices=" << cfg.vertices << " total=" << d.total_dimension << "\n";
  for (ydf::Kind k : {ydf::Kind::S, ydf::Kind::V, ydf::Kind::P}) {
    for (int r = 1; r <= p; ++r) {
      const int c = d.count(k, r);
      if (c == 0) continue;
      const std::string letter(1, ydf::kind_letter(k));
      mult.push_back(Json{{"kind", letter}, {"r", r}, {"count", c}});
      csv << letter << "," << r << "," << c << "\n";
      pretty << "  " << c << " x " << letter << (k == ydf::Kind::S ? "(" : "[") << r << (k == ydf::Kind::S ? ")" : "]") << "\n";
    }
  }
  Outcome out;
  out.exit_code = ok ? 0 : 2;
  if (cfg.format == "json") {
    Json j;
    j["p"] = p;
    j["vertices"] = cfg.vertices;
    j["total_dimension"] = d.total_dimension;
    j["ambient_dimension"] = d.ambient_dimension;
    j["rank"] = d.rank;
    j["classification_agrees"] = d.classification_agrees;
    j["extensions_closed"] = d.extensions_closed;
    j["multiplicities"] = mult;
    out.text = render(j);
  } else {
    out.text = cfg.format == "csv" ? csv.str() : pretty.str();
  }
  return out;
}

Outcome cmd_classify(const RunConfig& cfg) {
  const int p = cfg.p;
  const auto& f = ydf::CyclotomicField::get(p);
  Outcome out;
  if (cfg.a && (cfg.vertices == 1 || (cfg.b && cfg.t))) {
    ydf::ModuleDescriptor d;
    bool agrees = true;
    if (cfg.vertices == 1) {
      d = ydf::classify_one_vertex(*cfg.a, p);
      agrees = ydf::generate_submodule(f, ydf::V1(static_cast<int>(*cfg.a), 0)).desc.key() == d.key();
    } else {
      if (*cfg.t < 0 || *cfg.t >= p) throw CLI::ValidationError("--t", "t must lie in 0..p-1");
      d = ydf::classify_coinvariant(*cfg.a, *cfg.b, static_cast<int>(*cfg.t), p);
      agrees = ydf::generate_submodule(f, ydf::V2(static_cast<int>(*cfg.a), static_cast<int>(*cfg.b), 0, static_cast<int>(*cfg.t)))
                   .desc.key() == d.key();
    }
    out.exit_code = agrees ? 0 : 2;
    if (cfg.format == "json") out.text = render(label_json(d, cfg));
    else if (cfg.format == "csv") out.text = "kind,r,nu\n" + std::string(1, ydf::kind_letter(d.kind)) + "," + std::to_string(d.r) + "," + std::to_string(nu_out(d.nu_raw, cfg)) + "\n";
    else out.text = label_text(d, cfg) + "\n";
    return out;
  }
  if (cfg.a || cfg.b || cfg.t) throw CLI::ValidationError("classify", "give --a, --b and --t together (or --a with --vertices 1)");
  Json cells = Json::array();
  std::ostringstream csv, pretty;
  csv << "a,t,b,kind,r,nu\n";
  bool agrees = true;
  for (const auto& c : ydf::figure1_table(p)) {
    if (ydf::generate_submodule(f, ydf::V2(c.a, c.b, 0, c.t)).desc.key() != c.desc.key()) agrees = false;
    Json j{{"a", c.a}, {"t", c.t}, {"b", c.b}};
    for (const auto& [k, v] : label_json(c.desc, cfg).items()) j[k] = v;
    cells.push_back(j);
    csv << c.a << "," << c.t << "," << c.b << "," << ydf::kind_letter(c.desc.kind) << "," << c.desc.r << "," << nu_out(c.desc.nu_raw, cfg) << "\n";
    pretty << "a=" << c.a << " t=" << c.t << " b=" << c.b << ": " << label_text(c.desc, cfg) << "\n";
  }
  out.exit_code = agrees ? 0 : 2;
  if (cfg.format == "json") out.text = render(Json{{"p", p}, {"cells", cells}});
  else out.text = cfg.format == "csv" ? csv.str() : pretty.str();
  return out;
}

Outcome cmd_loop(const RunConfig& cfg) {
  const int p = cfg.p;
  Json rows = Json::array();
  std::ostringstream csv, pretty;
  csv << "rp,nup,r,nu,lambda,mu\n";
  for (int rp = 1; rp <= p; ++rp)
    for (int nup = 0; nup < cfg.nu_mod; ++nup)
      for (int r = 1; r <= p; ++r)
        for (int nu = 0; nu < cfg.nu_mod; ++nu) {
          const ydf::CycNum lambda = rp == p ? ydf::lambda_steinberg(nup, r, nu, p) : ydf::lambda_closed(rp, nup, r, nu, p);
          Json row{{"rp", rp}, {"nup", nup}, {"r", r}, {"nu", nu}};
          row["lambda"] = scalar_json(lambda, p);
          std::string mu_text = "-";
          if (rp < p) {
            const ydf::CycNum mu = ydf::mu_closed(rp, nup, r, nu, p);
            row["mu"] = scalar_json(mu, p);
            mu_text = mu.to_string();
          } else {
            row["mu"] = nullptr;
          }
          rows.push_back(row);
          csv << rp << "," << nup << "," << r << "," << nu << ",\"" << lambda.to_string() << "\",\"" << mu_text << "\"\n";
          pretty << "Y=X(" << rp << ")_" << nup << " Z=X(" << r << ")_" << nu << ": lambda=" << lambda << " mu=" << mu_text << "\n";
        }
  Outcome out;
  if (cfg.format == "json") out.text = render(Json{{"p", p}, {"nu_mod", cfg.nu_mod}, {"rows", rows}});
  else out.text = cfg.format == "csv" ? csv.str() : pretty.str();
  return out;
}

Outcome cmd_verify(const RunConfig& cfg) {
  const ydf::SuiteReport rep = ydf::run_suite(cfg.suite, cfg.p);
  Outcome out;
  out.exit_code = rep.ok() ? 0 : 2;
  if (cfg.format == "json") {
    Json checks = Json::array();
    for (const auto& c : rep.checks)
      checks.push_back(Json{{"name", c.name}, {"status", c.ok() ? "ok" : "fail"}, {"checked", c.checked}, {"failed", c.failed}, {"detail", c.detail}});
    out.text = render(Json{{"p", cfg.p}, {"suite", cfg.suite}, {"ok", rep.ok()}, {"checks", checks}});
  } else if (cfg.format == "csv") {
    std::ostringstream os;
    os << "name,status,checked,failed\n";
    for (const auto& c : rep.checks) os << c.name << "," << (c.ok() ? "ok" : "fail") << "," << c.checked << "," << c.failed << "\n";
    out.text = os.str();
  } else {
    out.text = rep.summary() + (rep.ok() ? "all checks passed\n" : "some checks FAILED\n");
  }
  return out;
}

// -- caching -------------------------------------------------------------------

std::string cache_key(const RunConfig& cfg) {
  std::ostringstream os;
  os << cfg.command << "_p" << cfg.p << "_" << cfg.format << "_nu" << cfg.nu_mod;
  if (cfg.command == "verify") os << "_" << cfg.suite;
  if (cfg.command == "decompose" || cfg.command == "classify") os << "_v" << cfg.vertices;
  if (cfg.a) os << "_a" << *cfg.a;
  if (cfg.b) os << "_b" << *cfg.b;
  if (cfg.t) os << "_t" << *cfg.t;
  return os.str();
}

std::optional<Outcome> cache_load(const std::filesystem::path& file, const std::string& key) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    const Json j = Json::parse(in);
    if (j.value("schema", "") != kSchemaVersion || j.value("key", "") != key) return std::nullopt;
    return Outcome{j.at("output").get<std::string>(), j.at("exit").get<int>()};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void cache_store(const std::filesystem::path& file, const std::string& key, const Outcome& o) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  std::ofstream outf(file);
  if (!outf) return;
  outf << Json{{"schema", kSchemaVersion}, {"key", key}, {"exit", o.exit_code}, {"output", o.text}}.dump(2) << "\n";
}

Outcome run(const RunConfig& cfg) {
  if (cfg.command == "fusion") return cmd_fusion(cfg);
  if (cfg.command == "decompose") return cmd_decompose(cfg);
  if (cfg.command == "classify") return cmd_classify(cfg);
  if (cfg.command == "loop") return cmd_loop(cfg);
  return cmd_verify(cfg);
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--p", cfg.p, "p >= 2")->required();
  sub->add_option("--max-p", cfg.max_p, "upper bound accepted for --p")->capture_default_str();
  sub->add_option("--format", cfg.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}))->capture_default_str();
  sub->add_option("--nu-mod", cfg.nu_mod, "report nu mod 2 or mod 4")->check(CLI::IsMember({2, 4}))->capture_default_str();
  sub->add_option("--output", cfg.output, "write to this file instead of stdout");
  sub->add_option("--cache-dir", cfg.cache_dir, "cache directory (default: $YDFUSION_CACHE_DIR, none if unset)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Yetter-Drinfeld modules over the rank-one Nichols algebra B_p"};
  app.require_subcommand(1);
  RunConfig cfg;
  long a = 0, b = 0, t = 0;

  auto* fusion = app.add_subcommand("fusion", "fusion table of all simple pairs");
  auto* decompose = app.add_subcommand("decompose", "decompose the one- or two-vertex space");
  auto* classify = app.add_subcommand("classify", "classify V^{a,b}_{0,t} or print the whole table");
  auto* loop = app.add_subcommand("loop", "lambda and mu tables of the loop operators");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  for (auto* sub : {fusion, decompose, classify, loop, verify}) add_common(sub, cfg);
  decompose->add_option("--vertices", cfg.vertices, "1 or 2")->check(CLI::IsMember({1, 2}))->capture_default_str();
  classify->add_option("--vertices", cfg.vertices, "1 or 2")->check(CLI::IsMember({1, 2}))->capture_default_str();
  auto* opt_a = classify->add_option("--a", a, "first charge");
  auto* opt_b = classify->add_option("--b", b, "second charge");
  auto* opt_t = classify->add_option("--t", t, "crosses before the second vertex");
  verify->add_option("--suite", cfg.suite, "hopf, yd, braiding, ribbon, duality, fusion, loop, ring or all")
      ->check(CLI::IsMember({"hopf", "yd", "braiding", "ribbon", "duality", "fusion", "loop", "ring", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (*opt_a) cfg.a = a;
  if (*opt_b) cfg.b = b;
  if (*opt_t) cfg.t = t;
  if (cfg.p < 2 || cfg.p > cfg.max_p) {
    std::cerr << "error: --p must lie in 2.." << cfg.max_p << " (raise the bound with --max-p)\n";
    return 1;
  }
  if (cfg.cache_dir.empty())
    if (const char* env = std::getenv("YDFUSION_CACHE_DIR")) cfg.cache_dir = env;

  Outcome outcome;
  try {
    const std::string key = cache_key(cfg);
    std::optional<Outcome> cached;
    std::filesystem::path file;
    if (!cfg.cache_dir.empty()) {
      file = std::filesystem::path(cfg.cache_dir) / (key + ".json");
      cached = cache_load(file, key);
    }
    if (cached) {
      outcome = *cached;
    } else {
      outcome = run(cfg);
      if (!cfg.cache_dir.empty()) cache_store(file, key, outcome);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (cfg.output.empty()) {
    std::cout << outcome.text;
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.output << "\n";
      return 1;
    }
    out << outcome.text;
  }
  return outcome.exit_code;
}

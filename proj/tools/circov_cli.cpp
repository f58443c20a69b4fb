// Copyright 2026 The circov Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// circov: batch front end for generation, separation, verification and minor
// enumeration. Output is JSON lines.
//
// Exit status: 0 success (for `separate`: nothing violated), 2 a violated
// inequality was found, 1 usage or input error.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "circov/error.hpp"
#include "circov/inequality.hpp"
#include "circov/json_io.hpp"
#include "circov/minor.hpp"
#include "circov/oracle.hpp"
#include "circov/separation.hpp"

namespace {

using circov::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolated = 2;
constexpr std::uint64_t kDefaultSeed = 20130901;
constexpr std::size_t kDefaultSamples = 100000;

enum class Command { kGenerate, kSeparate, kVerify, kMinors };

struct RunConfig {
  Command command = Command::kGenerate;
  int n = 0;
  int k = 0;
  std::string p = "all";
  std::vector<int> r;
  std::string n_file;
  std::string point_file;
  std::string ineq_file;
  std::string out;
  std::size_t limit_count = std::numeric_limits<std::size_t>::max();
  std::size_t limit_size = std::numeric_limits<std::size_t>::max();
  bool sample = false;
  std::uint64_t seed = kDefaultSeed;
  int bound = circov::kDefaultCoverBound;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw circov::InputError("cannot open output file " + path);
    }
  }
  void line(const Json& record) { stream() << record.dump() << '\n'; }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw circov::InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw circov::InputError("malformed JSON in " + path + ": " + e.what());
  }
}

// "all" means 1..k-2 for generation (sets with |W| divisible by k-1 give
// integral right-hand sides) and 1..k-1 for the minor catalog.
std::vector<int> residues(const RunConfig& cfg) {
  std::vector<int> out;
  if (cfg.p == "all") {
    const int top = cfg.command == Command::kMinors ? cfg.k - 1 : cfg.k - 2;
    for (int p = 1; p <= top; ++p) out.push_back(p);
    return out;
  }
  try {
    out.push_back(std::stoi(cfg.p));
  } catch (const std::exception&) {
    throw circov::InputError("--p must be an integer or \"all\"");
  }
  return out;
}

std::vector<circov::MinorSpec> enumerated_minors(const circov::Circulant& c, const RunConfig& cfg) {
  const circov::EnumLimits limits{cfg.limit_count, cfg.limit_size};
  std::vector<circov::MinorSpec> specs;
  for (int p : residues(cfg)) {
    const circov::WFamily family = circov::enumerate_w1p(c, p, limits);
    if (family.truncated) std::cerr << "warning: enumeration for p = " << p << " truncated by limits\n";
    for (const circov::IndexSet& w : family.sets) {
      specs.push_back(*circov::minor_from_N(c, *circov::n_from_w(c, w)));
    }
  }
  return specs;
}

int run_generate(const RunConfig& cfg) {
  const circov::Circulant c(cfg.n, cfg.k);
  std::vector<circov::MinorSpec> specs;
  if (!cfg.n_file.empty()) {
    for (const auto& members : circov::io::index_lists_from_json(read_json_file(cfg.n_file))) {
      Json error;
      try {
        const auto spec = circov::minor_from_N(c, circov::IndexSet::checked(members, c.n()));
        if (spec) {
          specs.push_back(*spec);
          continue;
        }
        error["error"] = "not a circulant minor";
      } catch (const circov::InputError& e) {
        error["error"] = e.what();
      }
      error["N"] = members;
      std::cerr << error.dump() << '\n';
    }
  } else {
    specs = enumerated_minors(c, cfg);
  }

  Output out(cfg.out);
  for (const circov::Ineq& q : circov::candidate_closure_system(c, specs)) {
    if (!cfg.r.empty() && q.origin().kind == circov::IneqKind::kRMinor &&
        std::find(cfg.r.begin(), cfg.r.end(), q.origin().r) == cfg.r.end()) {
      continue;
    }
    out.line(circov::io::json_of(q));
  }
  return kExitOk;
}

int run_separate(const RunConfig& cfg) {
  const circov::Circulant c(cfg.n, cfg.k);
  const circov::RatVec point = circov::io::point_from_json(read_json_file(cfg.point_file), c.n());
  const auto result = circov::separate(c, point);
  Output out(cfg.out);
  out.line(circov::io::json_of(result));
  return result ? kExitViolated : kExitOk;
}

int run_verify(const RunConfig& cfg) {
  const circov::Circulant c(cfg.n, cfg.k);
  if (c.n() > cfg.bound && !cfg.sample) {
    std::cerr << "refused: n = " << c.n() << " exceeds the exhaustive bound " << cfg.bound
              << "; rerun with --sample for a randomized check\n";
    return kExitError;
  }
  std::ifstream in(cfg.ineq_file);
  if (!in) throw circov::InputError("cannot open " + cfg.ineq_file);

  std::optional<circov::CoverSet> covers;
  std::vector<std::uint64_t> samples;
  if (cfg.sample) {
    const std::size_t count = cfg.limit_count == std::numeric_limits<std::size_t>::max() ? kDefaultSamples
                                                                                          : cfg.limit_count;
    samples = circov::sample_covers(c, count, cfg.seed);
  } else {
    covers = circov::enumerate_covers(c, cfg.bound);
  }

  Output out(cfg.out);
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json record;
    try {
      record = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw circov::InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
    const circov::Ineq q = circov::io::ineq_from_json(record, c.n());
    const circov::VerifyReport report =
        covers ? circov::verify_exact(*covers, q) : circov::verify_sampled(samples, q);
    out.line(circov::io::json_of(report, c.n()));
  }
  return kExitOk;
}

int run_minors(const RunConfig& cfg) {
  const circov::Circulant c(cfg.n, cfg.k);
  const std::vector<circov::MinorSpec> specs = enumerated_minors(c, cfg);
  Output out(cfg.out);
  for (const circov::MinorSpec& spec : specs) out.line(circov::io::json_of(spec));
  if (specs.empty()) std::cerr << "warning: no minors with d = n1 = 1 for the requested p\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Generalized minor inequalities for circulant set covering"};
  app.require_subcommand(1);

  auto add_circulant = [&cfg](CLI::App* cmd) {
    cmd->add_option("--n", cfg.n, "Order n of C_n^k")->required();
    cmd->add_option("--k", cfg.k, "Row length k of C_n^k")->required();
    cmd->add_option("--out", cfg.out, "Output file (default: stdout)");
  };
  auto add_limits = [&cfg](CLI::App* cmd) {
    cmd->add_option("--p", cfg.p, "Residue of |W| mod (k-1), or \"all\"");
    cmd->add_option("--limit-count", cfg.limit_count, "Maximum number of enumerated sets W");
    cmd->add_option("--limit-size", cfg.limit_size, "Maximum size of an enumerated set W");
  };

  CLI::App* generate = app.add_subcommand("generate", "Write the candidate closure system");
  add_circulant(generate);
  add_limits(generate);
  generate->add_option("--r", cfg.r, "Keep only these levels r for r-minor inequalities");
  generate->add_option("--N-file", cfg.n_file, "JSON file with explicit contraction sets N");

  CLI::App* separate = app.add_subcommand("separate", "Separate r-minor inequalities (d = n1 = 1)");
  add_circulant(separate);
  separate->add_option("--point", cfg.point_file, "JSON array of rational strings")->required();

  CLI::App* verify = app.add_subcommand("verify", "Check inequalities against 0/1 covers");
  add_circulant(verify);
  verify->add_option("ineq_file", cfg.ineq_file, "Inequality file (JSON lines)")->required();
  verify->add_flag("--sample", cfg.sample, "Use sampled covers instead of the exhaustive sweep");
  verify->add_option("--seed", cfg.seed, "Seed for cover sampling");
  verify->add_option("--limit-count", cfg.limit_count, "Number of sampled covers");

  CLI::App* minors = app.add_subcommand("minors", "List d = n1 = 1 circulant minors");
  add_circulant(minors);
  add_limits(minors);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (generate->parsed()) return run_generate(cfg);
    if (separate->parsed()) return run_separate(cfg);
    if (verify->parsed()) return run_verify(cfg);
    if (minors->parsed()) {
      cfg.command = Command::kMinors;
      return run_minors(cfg);
    }
  } catch (const circov::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const circov::OracleRefusal& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

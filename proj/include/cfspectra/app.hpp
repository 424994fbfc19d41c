// Copyright 2026 The cfspectra Authors
//
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


#pragma once

// Batch front end: settings resolution, input files, the expansion cache,
// per-subcommand execution and report rendering.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cfspectra/algebraic.hpp"
#include "cfspectra/cf.hpp"

namespace cfspectra::app {

using json = nlohmann::json;

/// Raw key -> (value, origin) pairs; origin is "--flag" or "file:line".
struct Setting {
  std::string value;
  std::string origin;
};
using Settings = std::map<std::string, Setting>;

struct JobConfig {
  std::string command;
  std::string action;
  std::string poly, poly2;  // inline "c0,c1,...", or "@path"
  long root = -1, root2 = -1;
  std::string word, word2;  // word file paths
  long depth = 200;
  long bits = 256;       // starting precision
  long max_bits = 65536;  // escalation cap; beyond it a decision is "undecided"
  Rational L = 1;
  std::optional<Rational> delta;
  long min_block = 1;
  bool allow_empty = false;
  bool mirror = false;
  long limit = 1000;
  long height = 100;
  Rational epsilon{1, 10};
  std::string mode = "classic";
  long k = 1;
  long max_n = 20;
  long min_norm = 1;
  long window = -1;
  std::string matrix;  // "a,b,c,d"
  std::string format = "json";
  std::string output;
  long workers = 1;
  bool no_cache = false;

  /// Everything that influences results, for the report header.
  json to_json() const;
};

/// Thrown by parse_arguments for --help; what() is the usage text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Keys accepted on the command line (as --key), in config files and in job lines.
const std::vector<std::string>& known_keys();

/// Parses one command line (without the program name). Throws InputError.
Settings parse_arguments(const std::vector<std::string>& args);

/// key=value lines; '#' starts a comment. Throws InputError naming the line.
Settings read_config_file(const std::filesystem::path& path);

/// Later layers override earlier ones; values are validated here.
JobConfig resolve(const std::vector<const Settings*>& layers);

/// One job per non-empty line, tokens split on whitespace. Throws InputError naming the line.
std::vector<Settings> read_job_file(const std::filesystem::path& path);

/// "c0,c1,..." or "@path" (commas or whitespace, '#' comments). Throws InputError.
IntPolynomial read_polynomial(const std::string& spec);

/// JSON {"a0": n, "quotients": [...]} or one integer per line, a0 first.
/// The result is an exact finite continued fraction. Throws InputError.
CFExpansion read_word_file(const std::filesystem::path& path);

std::string sha256_hex(const std::string& data);

/// SHA-256 of "a0,a1,...", and of "p0/q0;p1/q1;..." over all convergents.
std::string word_digest(const CFExpansion& cf);
std::string convergents_digest(const CFExpansion& cf);

/// Quotient words keyed by (canonical polynomial, root index, depth).
class ExpansionCache {
 public:
  explicit ExpansionCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}
  /// CFSPECTRA_CACHE_DIR, else $XDG_CACHE_HOME/cfspectra, else ~/.cache/cfspectra.
  static std::optional<std::filesystem::path> default_dir();

  /// Same result as expand(x, depth); x must be root `root_index` (ascending)
  /// of the primitive squarefree polynomial `canonical`.
  CFExpansion expand(const AlgebraicNumber& x, const IntPolynomial& canonical, std::size_t root_index,
                     std::size_t depth) const;

  bool enabled() const { return dir_.has_value(); }

 private:
  std::optional<std::filesystem::path> dir_;
};

/// Result of one job, before the report envelope is added.
struct Outcome {
  json result;
  json inputs = json::array();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  int exit_code = 0;  // 2 when some decision stayed undecided
};

/// Throws InputError / DomainError on bad input, UndecidedError at precision caps.
Outcome execute(const JobConfig& config, const ExpansionCache& cache);

/// Report envelope: tool, version, resolved config, result, inputs, digest
/// (SHA-256 over everything except the timestamp), timestamp.
json make_report(const JobConfig& config, const Outcome& outcome, const std::string& timestamp);

/// Current UTC time, or SOURCE_DATE_EPOCH when set.
std::string timestamp_now();

std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

/// Full command-line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfspectra::app

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


#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cfspectra/app.hpp"

namespace cfspectra::app {
namespace {

struct KeyHelp {
  const char* key;
  const char* help;
};

const std::vector<KeyHelp> kValueKeys = {
    {"poly", "integer coefficients, constant term first (e.g. -2,0,0,1), or @file"},
    {"root", "real root index, ascending; negative counts from the largest (default -1)"},
    {"poly2", "second polynomial (pair commands; orbit scan base point)"},
    {"root2", "real root index for --poly2"},
    {"word", "explicit quotients a0,a1,...; or @file"},
    {"word2", "second explicit word"},
    {"depth", "number of partial quotients after a0 (default 200)"},
    {"bits", "working precision in bits (default 256)"},
    {"L", "detector ratio bound, rational (default 1)"},
    {"delta", "growth-condition slack; derived from L when absent"},
    {"minB", "minimum block length (default 1)"},
    {"limit", "maximum witnesses reported (default 1000)"},
    {"max-bits", "precision cap before giving up as undecided (default 65536)"},
    {"height", "orbit scan height bound (default 100)"},
    {"epsilon", "exponent margin for orbit records (default 1/10)"},
    {"mode", "orbit norm: classic | quadratic"},
    {"k", "gap scan multiplier (default 1)"},
    {"max-n", "gap scan range (default 20)"},
    {"min-norm", "skip orbit candidates below this norm (default 1)"},
    {"window", "translate window for orbit scans (default: height)"},
    {"matrix", "a,b,c,d for orbit equivalence"},
    {"format", "json | csv"},
    {"output", "write the report here instead of stdout"},
    {"workers", "worker threads (default 1)"},
};
const std::vector<KeyHelp> kFlagKeys = {
    {"allow-empty", "accept witnesses with an empty leading block"},
    {"mirror", "shared blocks match reversed"},
    {"no-cache", "bypass the expansion cache"},
};

const std::map<std::string, std::vector<std::string>>& command_actions() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"expand", {""}},
      {"convergents", {""}},
      {"period", {""}},
      {"complexity", {""}},
      {"detect", {"repetition", "mirror", "shared"}},
      {"verify", {"identities"}},
      {"harness", {"transport", "l1", "growth"}},
      {"orbit", {"scan", "separation", "gap", "equivalence"}},
  };
  return table;
}

[[noreturn]] void fail(const Setting& s, const std::string& key, const std::string& what) {
  throw InputError(s.origin + ": " + key + ": " + what);
}

long to_long(const Setting& s, const std::string& key, long min_value) {
  Int v;
  try {
    v = parse_int(s.value);
  } catch (const std::exception&) {
    fail(s, key, "expected an integer, got '" + s.value + "'");
  }
  if (!v.fits_slong_p() || v < min_value) fail(s, key, "must be an integer >= " + std::to_string(min_value));
  return v.get_si();
}

Rational to_rational(const Setting& s, const std::string& key) {
  try {
    return parse_rational(s.value);
  } catch (const std::exception&) {
    fail(s, key, "expected a rational such as 3/2, got '" + s.value + "'");
  }
}

bool to_bool(const Setting& s, const std::string& key) {
  if (s.value == "true" || s.value == "1" || s.value == "yes") return true;
  if (s.value == "false" || s.value == "0" || s.value == "no") return false;
  fail(s, key, "expected true or false");
}

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

}  // namespace

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k{"command", "action"};
    for (const KeyHelp& h : kValueKeys) k.emplace_back(h.key);
    for (const KeyHelp& h : kFlagKeys) k.emplace_back(h.key);
    return k;
  }();
  return keys;
}

Settings parse_arguments(const std::vector<std::string>& args) {
  CLI::App cli{"Certified continued fractions, word detectors and orbit scans", "cfspectra"};
  std::map<std::string, std::string> values;
  std::string command, action, config, job;
  cli.add_option("command", command, "expand | convergents | period | complexity | detect | verify | harness | orbit");
  cli.add_option("action", action, "detect: repetition|mirror|shared; harness: transport|l1|growth; "
                                   "orbit: scan|separation|gap|equivalence");
  cli.add_option("--config", config, "key=value settings file (command-line flags win)");
  cli.add_option("--job", job, "job file, one command line per line");
  for (const KeyHelp& h : kValueKeys) cli.add_option(std::string("--") + h.key, values[h.key], h.help);
  std::map<std::string, bool> flags;
  for (const KeyHelp& h : kFlagKeys) cli.add_flag(std::string("--") + h.key, flags[h.key], h.help);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    cli.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(cli.help());
  } catch (const CLI::ParseError& e) {
    throw InputError(std::string("command line: ") + e.what());
  }
  Settings out;
  auto put = [&](const std::string& key, const std::string& value) { out[key] = {value, "--" + key}; };
  if (!command.empty()) out["command"] = {command, "command line"};
  if (!action.empty()) out["action"] = {action, "command line"};
  if (!config.empty()) put("config", config);
  if (!job.empty()) put("job", job);
  for (const KeyHelp& h : kValueKeys) {
    if (cli.get_option(std::string("--") + h.key)->count() > 0) put(h.key, values[h.key]);
  }
  for (const KeyHelp& h : kFlagKeys) {
    if (flags[h.key]) put(h.key, "true");
  }
  return out;
}

Settings read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open config file");
  const std::set<std::string> keys(known_keys().begin(), known_keys().end());
  Settings out;
  std::string line;
  for (long n = 1; std::getline(in, line); ++n) {
    const std::string origin = path.string() + ":" + std::to_string(n);
    std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw InputError(origin + ": expected key=value");
    std::string key = trim(body.substr(0, eq));
    if (!keys.count(key)) throw InputError(origin + ": unknown key '" + key + "'");
    out[key] = {trim(body.substr(eq + 1)), origin};
  }
  return out;
}

std::vector<Settings> read_job_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open job file");
  std::vector<Settings> jobs;
  std::string line;
  for (long n = 1; std::getline(in, line); ++n) {
    std::istringstream tokens(line.substr(0, line.find('#')));
    std::vector<std::string> args{std::istream_iterator<std::string>(tokens), {}};
    if (args.empty()) continue;
    const std::string origin = path.string() + ":" + std::to_string(n);
    Settings s;
    try {
      s = parse_arguments(args);
    } catch (const InputError& e) {
      throw InputError(origin + ": " + e.what());
    }
    if (s.count("job") || s.count("config")) throw InputError(origin + ": --job and --config are not allowed here");
    for (auto& [key, setting] : s) setting.origin = origin + " " + setting.origin;
    jobs.push_back(std::move(s));
  }
  return jobs;
}

JobConfig resolve(const std::vector<const Settings*>& layers) {
  Settings merged;
  for (const Settings* layer : layers) {
    for (const auto& [key, value] : *layer) merged[key] = value;
  }
  JobConfig c;
  const auto get = [&](const std::string& key) -> const Setting* {
    auto it = merged.find(key);
    return it == merged.end() ? nullptr : &it->second;
  };
  const Setting* command = get("command");
  if (!command) throw InputError("missing subcommand");
  const auto& table = command_actions();
  auto entry = table.find(command->value);
  if (entry == table.end()) fail(*command, "command", "unknown subcommand '" + command->value + "'");
  c.command = command->value;
  c.action = entry->second.front();
  if (const Setting* s = get("action")) {
    const auto& allowed = entry->second;
    if (std::find(allowed.begin(), allowed.end(), s->value) == allowed.end() || s->value.empty()) {
      fail(*s, "action", "'" + s->value + "' is not an action of " + c.command);
    }
    c.action = s->value;
  }
  if (const Setting* s = get("poly")) c.poly = s->value;
  if (const Setting* s = get("poly2")) c.poly2 = s->value;
  if (const Setting* s = get("word")) c.word = s->value;
  if (const Setting* s = get("word2")) c.word2 = s->value;
  if (const Setting* s = get("root")) c.root = to_long(*s, "root", LONG_MIN);
  if (const Setting* s = get("root2")) c.root2 = to_long(*s, "root2", LONG_MIN);
  if (const Setting* s = get("depth")) c.depth = to_long(*s, "depth", 1);
  if (const Setting* s = get("bits")) c.bits = to_long(*s, "bits", 32);
  if (const Setting* s = get("max-bits")) c.max_bits = to_long(*s, "max-bits", 32);
  if (c.max_bits < c.bits) throw InputError("max-bits must be at least bits");
  if (const Setting* s = get("L")) {
    c.L = to_rational(*s, "L");
    if (c.L <= 0) fail(*s, "L", "must be positive");
  }
  if (const Setting* s = get("delta")) {
    c.delta = to_rational(*s, "delta");
    if (*c.delta < 0) fail(*s, "delta", "must be nonnegative");
  }
  if (const Setting* s = get("minB")) c.min_block = to_long(*s, "minB", 1);
  if (const Setting* s = get("allow-empty")) c.allow_empty = to_bool(*s, "allow-empty");
  if (const Setting* s = get("mirror")) c.mirror = to_bool(*s, "mirror");
  if (const Setting* s = get("limit")) c.limit = to_long(*s, "limit", 1);
  if (const Setting* s = get("height")) c.height = to_long(*s, "height", 1);
  if (const Setting* s = get("epsilon")) {
    c.epsilon = to_rational(*s, "epsilon");
    if (c.epsilon <= 0) fail(*s, "epsilon", "must be positive");
  }
  if (const Setting* s = get("mode")) {
    if (s->value != "classic" && s->value != "quadratic") fail(*s, "mode", "expected classic or quadratic");
    c.mode = s->value;
  }
  if (const Setting* s = get("k")) c.k = to_long(*s, "k", 1);
  if (const Setting* s = get("max-n")) c.max_n = to_long(*s, "max-n", 1);
  if (const Setting* s = get("min-norm")) c.min_norm = to_long(*s, "min-norm", 1);
  if (const Setting* s = get("window")) c.window = to_long(*s, "window", -1);
  if (const Setting* s = get("matrix")) c.matrix = s->value;
  if (const Setting* s = get("format")) {
    if (s->value != "json" && s->value != "csv") fail(*s, "format", "expected json or csv");
    c.format = s->value;
  }
  if (const Setting* s = get("output")) c.output = s->value;
  if (const Setting* s = get("workers")) c.workers = to_long(*s, "workers", 1);
  if (const Setting* s = get("no-cache")) c.no_cache = to_bool(*s, "no-cache");
  return c;
}

json JobConfig::to_json() const {
  json j;
  j["command"] = command;
  j["action"] = action;
  j["poly"] = poly;
  j["poly2"] = poly2;
  j["root"] = root;
  j["root2"] = root2;
  j["word"] = word;
  j["word2"] = word2;
  j["depth"] = depth;
  j["bits"] = bits;
  j["max_bits"] = max_bits;
  j["L"] = L.get_str();
  j["delta"] = delta ? json(delta->get_str()) : json(nullptr);
  j["minB"] = min_block;
  j["allow_empty"] = allow_empty;
  j["mirror"] = mirror;
  j["limit"] = limit;
  j["height"] = height;
  j["epsilon"] = epsilon.get_str();
  j["mode"] = mode;
  j["k"] = k;
  j["max_n"] = max_n;
  j["min_norm"] = min_norm;
  j["window"] = window;
  j["matrix"] = matrix;
  j["format"] = format;
  // Output path, worker count and caching do not change results.
  return j;
}

}  // namespace cfspectra::app

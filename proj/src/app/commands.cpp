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


#include <algorithm>
#include <map>

#include "cfspectra/app.hpp"
#include "cfspectra/enclosure.hpp"
#include "cfspectra/harness.hpp"
#include "cfspectra/modular.hpp"
#include "cfspectra/words.hpp"

namespace cfspectra::app {
namespace {

json int_json(const Int& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.get_str();
}

json ints_json(const std::vector<Int>& values) {
  json out = json::array();
  for (const Int& v : values) out.push_back(int_json(v));
  return out;
}

// Exact integers (classic norms) print as integers.
json interval_or_int_json(const Interval& iv) {
  if (iv.is_point() && iv.lo().is_integer()) return int_json(iv.lo().floor());
  return {{"lo", enclose::decimal_down(iv.lo())}, {"hi", enclose::decimal_up(iv.hi())}};
}

std::string bound_text(const Dyadic& x, bool upper) {
  if (x.is_integer()) return x.floor().get_str();
  return upper ? enclose::decimal_up(x) : enclose::decimal_down(x);
}

json interval_json(const Interval& iv) {
  return {{"lo", enclose::decimal_down(iv.lo())}, {"hi", enclose::decimal_up(iv.hi())}};
}

std::string word_text(const CFExpansion& cf) {
  std::string s = "[" + cf.a0.get_str();
  for (std::size_t i = 0; i < cf.quotients.size(); ++i) s += (i ? "," : ";") + cf.quotients[i].get_str();
  return s + "]";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

struct Input {
  CFExpansion cf;
  std::optional<AlgebraicNumber> number;
  json provenance;
};

struct NumberSpec {
  AlgebraicNumber value;
  IntPolynomial canonical;
  std::size_t index;
};

NumberSpec pick_root(const std::string& poly_spec, long root) {
  const IntPolynomial canonical = squarefree_part(read_polynomial(poly_spec));
  std::vector<AlgebraicNumber> roots = isolate_real_roots(canonical);
  if (roots.empty()) throw InputError("polynomial " + canonical.to_text() + " has no real roots");
  const long count = static_cast<long>(roots.size());
  const long idx = root < 0 ? count + root : root;
  if (idx < 0 || idx >= count) {
    throw InputError("root index " + std::to_string(root) + " out of range: " + std::to_string(count) +
                     " real root(s)");
  }
  return {roots[static_cast<std::size_t>(idx)], canonical, static_cast<std::size_t>(idx)};
}

std::optional<Input> load_input(const JobConfig& cfg, int which, const ExpansionCache& cache) {
  const std::string& poly = which == 1 ? cfg.poly : cfg.poly2;
  const std::string& word = which == 1 ? cfg.word : cfg.word2;
  const long root = which == 1 ? cfg.root : cfg.root2;
  const std::string suffix = which == 1 ? "" : "2";
  if (!poly.empty() && !word.empty()) throw InputError("give either --poly" + suffix + " or --word" + suffix);
  if (poly.empty() && word.empty()) return std::nullopt;
  Input in;
  if (!word.empty()) {
    in.cf = read_word_file(word);
    in.provenance = {{"kind", "word"}, {"path", word}};
  } else {
    NumberSpec spec = pick_root(poly, root);
    in.cf = cache.expand(spec.value, spec.canonical, spec.index, static_cast<std::size_t>(cfg.depth));
    in.number = spec.value;
    in.provenance = {{"kind", "poly"},
                     {"canonical_poly", spec.canonical.to_text()},
                     {"root_index", spec.index},
                     {"degree", spec.value.degree()},
                     {"depth", cfg.depth}};
  }
  in.provenance["word_sha256"] = word_digest(in.cf);
  in.provenance["convergents_sha256"] = convergents_digest(in.cf);
  return in;
}

Input require_input(const JobConfig& cfg, int which, const ExpansionCache& cache, Outcome& out) {
  std::optional<Input> in = load_input(cfg, which, cache);
  if (!in) {
    throw InputError(cfg.command + " needs " + (which == 1 ? "--poly or --word" : "--poly2 or --word2"));
  }
  out.inputs.push_back(in->provenance);
  return std::move(*in);
}

DetectOptions detect_options(const JobConfig& cfg) {
  DetectOptions o;
  o.L = cfg.L;
  o.min_block = static_cast<std::size_t>(cfg.min_block);
  o.require_nonempty_a = !cfg.allow_empty;
  return o;
}

template <typename W>
json witness_json(const W& w) {
  return {{"k", w.k}, {"l", w.l}, {"m", w.m}, {"mirror", w.mirror}, {"ratio", w.ratio().get_str()}};
}

template <typename W>
void emit_witnesses(const std::vector<W>& all, const JobConfig& cfg, Outcome& out) {
  out.result["count"] = all.size();
  out.result["truncated"] = all.size() > static_cast<std::size_t>(cfg.limit);
  out.result["witnesses"] = json::array();
  out.csv_header = {"k", "l", "m", "mirror", "ratio"};
  for (std::size_t i = 0; i < all.size() && i < static_cast<std::size_t>(cfg.limit); ++i) {
    const W& w = all[i];
    out.result["witnesses"].push_back(witness_json(w));
    out.csv_rows.push_back({std::to_string(w.k), std::to_string(w.l), std::to_string(w.m), yes_no(w.mirror),
                            w.ratio().get_str()});
  }
}

void run_expand(const JobConfig& cfg, const ExpansionCache& cache, Outcome& out) {
  Input in = require_input(cfg, 1, cache, out);
  out.result = {{"a0", int_json(in.cf.a0)},
                {"quotients", ints_json(in.cf.quotients)},
                {"terminated", in.cf.terminated},
                {"word", word_text(in.cf)}};
  out.csv_header = {"n", "quotient"};
  for (std::size_t n = 0; n <= in.cf.depth(); ++n) out.csv_rows.push_back({std::to_string(n), in.cf.at(n).get_str()});
}

void run_convergents(const JobConfig& cfg, const ExpansionCache& cache, Outcome& out) {
  Input in = require_input(cfg, 1, cache, out);
  out.result["convergents"] = json::array();
  out.csv_header = {"n", "p", "q"};
  std::size_t n = 0;
  for (const Convergent& c : convergents(in.cf)) {
    out.result["convergents"].push_back({{"n", n}, {"p", int_json(c.p)}, {"q", int_json(c.q)}});
    out.csv_rows.push_back({std::to_string(n), c.p.get_str(), c.q.get_str()});
    ++n;
  }
}

void run_period(const JobConfig& cfg, Outcome& out) {
  if (cfg.poly.empty()) throw InputError("period needs --poly");
  NumberSpec spec = pick_root(cfg.poly, cfg.root);
  out.inputs.push_back({{"kind", "poly"}, {"canonical_poly", spec.canonical.to_text()}, {"root_index", spec.index}});
  PeriodicForm f = detect_period(spec.value);
  out.result = {{"preperiod", ints_json(f.preperiod)}, {"period", ints_json(f.period)}};
  out.csv_header = {"part", "index", "quotient"};
  for (std::size_t i = 0; i < f.preperiod.size(); ++i) {
    out.csv_rows.push_back({"preperiod", std::to_string(i), f.preperiod[i].get_str()});
  }
  for (std::size_t i = 0; i < f.period.size(); ++i) {
    out.csv_rows.push_back({"period", std::to_string(i), f.period[i].get_str()});
  }
}

void run_complexity(const JobConfig& cfg, const ExpansionCache& cache, Outcome& out) {
  Input in = require_input(cfg, 1, cache, out);
  const Word& w = in.cf.quotients;
  if (w.empty()) throw InputError("complexity needs at least one partial quotient after a0");
  const std::size_t top = std::min(static_cast<std::size_t>(cfg.max_n), w.size());
  out.result["length"] = w.size();
  out.result["values"] = json::array();
  out.csv_header = {"n", "count"};
  for (std::size_t n = 1; n <= top; ++n) {
    const std::size_t c = subword_complexity(w, n);
    out.result["values"].push_back({{"n", n}, {"count", c}});
    out.csv_rows.push_back({std::to_string(n), std::to_string(c)});
  }
}

void run_detect(const JobConfig& cfg, const ExpansionCache& cache, Outcome& out) {
  Input a = require_input(cfg, 1, cache, out);
  const DetectOptions opts = detect_options(cfg);
  if (cfg.action == "repetition") {
    emit_witnesses(find_repetitions(a.cf.quotients, opts), cfg, out);
  } else if (cfg.action == "mirror") {
    emit_witnesses(find_mirror_repetitions(a.cf.quotients, opts), cfg, out);
  } else {
    Input b = require_input(cfg, 2, cache, out);
    emit_witnesses(find_shared_blocks(a.cf.quotients, b.cf.quotients, opts, cfg.mirror), cfg, out);
  }
}

void run_verify(const JobConfig& cfg, const ExpansionCache& cache, Outcome& out) {
  Input in = require_input(cfg, 1, cache, out);
  VerifyOptions opts;
  opts.start_bits = cfg.bits;
  opts.max_bits = cfg.max_bits;
  IdentityReport rep = verify_cf_identities(in.cf, in.cf.depth(), opts);
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
  json failed = json::array();
  for (const IdentityCheck& c : rep.checks) {
    auto& [checks, failures] = tally[c.identity];
    ++checks;
    if (!c.pass) {
      ++failures;
      failed.push_back({{"identity", c.identity}, {"n", c.n}, {"m", c.m}, {"detail", c.detail}});
    }
  }
  json by = json::object();
  out.csv_header = {"identity", "checks", "failures"};
  for (const auto& [name, counts] : tally) {
    by[name] = {{"checks", counts.first}, {"failures", counts.second}};
    out.csv_rows.push_back({name, std::to_string(counts.first), std::to_string(counts.second)});
  }
  out.result = {{"all_pass", rep.all_pass()},
                {"checks", rep.checks.size()},
                {"failures", rep.failures()},
                {"approximation_checked", rep.approximation_checked},
                {"by_identity", by},
                {"failed", failed}};
}

Word slice(const Word& w, std::size_t from, std::size_t len) {
  return Word(w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(from + len));
}

void run_harness(const JobConfig& cfg, const ExpansionCache& cache, Outcome& out) {
  Input a = require_input(cfg, 1, cache, out);
  Input b = require_input(cfg, 2, cache, out);
  const PairContext ctx(a.cf, b.cf);
  const bool mirror = cfg.action == "transport" && cfg.mirror;
  std::vector<SharedBlockWitness> all = find_shared_blocks(ctx.word(), ctx.word_prime(), detect_options(cfg), mirror);
  const std::size_t n = std::min(all.size(), static_cast<std::size_t>(cfg.limit));
  out.result["witness_count"] = all.size();
  out.result["checked"] = n;
  json rows = json::array();

  if (cfg.action == "transport") {
    bool all_hold = true;
    out.csv_header = {"k", "l", "m", "mirror", "holds", "sign"};
    for (std::size_t i = 0; i < n; ++i) {
      const SharedBlockWitness& w = all[i];
      TransportCheck t = check_transport_identity(slice(ctx.word(), 0, w.k), slice(ctx.word_prime(), 0, w.l),
                                                  slice(ctx.word(), w.k, w.m), w.mirror);
      all_hold = all_hold && t.holds;
      rows.push_back({{"k", w.k}, {"l", w.l}, {"m", w.m}, {"mirror", w.mirror}, {"holds", t.holds}, {"sign", t.sign}});
      out.csv_rows.push_back({std::to_string(w.k), std::to_string(w.l), std::to_string(w.m), yes_no(w.mirror),
                              yes_no(t.holds), std::to_string(t.sign)});
    }
    out.result["all_hold"] = all_hold;
  } else if (cfg.action == "l1") {
    std::map<std::string, std::size_t> decisions;
    out.csv_header = {"k", "l", "m", "decision", "premise_ok", "routes_agree", "bound", "bits"};
    for (std::size_t i = 0; i < n; ++i) {
      const SharedBlockWitness& w = all[i];
      SmallnessResult r = check_L1_smallness(ctx, w, cfg.max_bits, cfg.bits);
      ++decisions[to_string(r.decision)];
      if (r.decision == Decision::undecided) out.exit_code = 2;
      rows.push_back({{"k", w.k},
                      {"l", w.l},
                      {"m", w.m},
                      {"decision", to_string(r.decision)},
                      {"premise_ok", r.premise_ok},
                      {"routes_agree", r.routes_agree},
                      {"bound", r.bound.get_str()},
                      {"direct", interval_json(r.direct)},
                      {"bits", r.bits}});
      out.csv_rows.push_back({std::to_string(w.k), std::to_string(w.l), std::to_string(w.m), to_string(r.decision),
                              yes_no(r.premise_ok), yes_no(r.routes_agree), r.bound.get_str(),
                              std::to_string(r.bits)});
    }
    out.result["decisions"] = decisions;
  } else {
    Rational delta;
    if (cfg.delta) {
      delta = *cfg.delta;
      out.result["delta"] = {{"source", "user"}, {"value", delta.get_str()}};
    } else {
      // Derived from L through the growth constant of the pair; the upper
      // endpoint is the conservative choice.
      GrowthReport g = growth_metrics(a.cf, &b.cf);
      Interval d = delta_from_L(g.max_value, cfg.L);
      delta = d.hi().to_rational();
      out.result["delta"] = {{"source", "derived"}, {"enclosure", interval_json(d)}, {"value", delta.get_str()}};
    }
    std::size_t holds = 0;
    out.csv_header = {"k", "l", "m", "holds"};
    for (std::size_t i = 0; i < n; ++i) {
      const SharedBlockWitness& w = all[i];
      const bool ok = check_growth_condition(ctx, w, delta, cfg.L);
      holds += ok;
      rows.push_back({{"k", w.k}, {"l", w.l}, {"m", w.m}, {"holds", ok}});
      out.csv_rows.push_back({std::to_string(w.k), std::to_string(w.l), std::to_string(w.m), yes_no(ok)});
    }
    out.result["holding"] = holds;
  }
  out.result["results"] = rows;
}

Mat2 parse_matrix(const std::string& text) {
  if (text.empty()) throw InputError("orbit equivalence needs --matrix a,b,c,d");
  std::vector<Int> v;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    try {
      v.push_back(parse_int(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    } catch (const InputError&) {
      throw InputError("--matrix: expected four integers a,b,c,d");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (v.size() != 4) throw InputError("--matrix: expected four integers a,b,c,d");
  return {v[0], v[1], v[2], v[3]};
}

void run_orbit(const JobConfig& cfg, const ExpansionCache& cache, Outcome& out) {
  if (cfg.action == "equivalence") {
    NormRatioRange r = norm_equivalence_estimate(parse_matrix(cfg.matrix), cfg.height);
    out.result = {{"min_ratio", r.min_ratio.get_str()},
                  {"max_ratio", r.max_ratio.get_str()},
                  {"samples", r.samples},
                  {"label", "empirical"}};
    out.csv_header = {"min_ratio", "max_ratio", "samples"};
    out.csv_rows.push_back({r.min_ratio.get_str(), r.max_ratio.get_str(), std::to_string(r.samples)});
    return;
  }
  Input a = require_input(cfg, 1, cache, out);
  if (cfg.action == "gap") {
    std::vector<long> hits = growth_gap_scan(a.cf, cfg.k, cfg.epsilon);
    out.result = {{"indices", hits}, {"k", cfg.k}, {"epsilon", cfg.epsilon.get_str()}};
    out.csv_header = {"n"};
    for (long h : hits) out.csv_rows.push_back({std::to_string(h)});
    return;
  }
  if (cfg.action == "separation") {
    Input b = require_input(cfg, 2, cache, out);
    SeparationResult r = separation_bound(a.cf, b.cf, cfg.bits);
    out.result = {{"n", r.n},
                  {"bound", r.bound.get_str()},
                  {"distance", interval_json(r.distance)},
                  {"consistent", r.consistent}};
    out.csv_header = {"n", "bound", "distance_lo", "distance_hi", "consistent"};
    out.csv_rows.push_back({std::to_string(r.n), r.bound.get_str(), enclose::decimal_down(r.distance.lo()),
                            enclose::decimal_up(r.distance.hi()), yes_no(r.consistent)});
    return;
  }
  std::optional<AlgebraicNumber> alpha;
  if (!cfg.poly2.empty()) {
    NumberSpec spec = pick_root(cfg.poly2, cfg.root2);
    alpha = spec.value;
    out.inputs.push_back({{"kind", "poly"}, {"canonical_poly", spec.canonical.to_text()}, {"root_index", spec.index}});
  }
  OrbitOptions o;
  o.mode = cfg.mode == "quadratic" ? NormMode::quadratic : NormMode::classic;
  o.epsilon = cfg.epsilon;
  o.translate_window = cfg.window;
  o.min_norm = cfg.min_norm;
  o.workers = static_cast<unsigned>(cfg.workers);
  OrbitScan s = orbit_best_approximations(a.cf, alpha, cfg.height, o);
  json records = json::array();
  out.csv_header = {"a", "b", "c", "d", "norm_lo", "norm_hi", "distance_lo", "distance_hi", "exponent_lo",
                    "exponent_hi", "exceeds_1_plus_eps", "exceeds_2_plus_eps"};
  for (const ApproxRecord& r : s.records) {
    const Mat2& m = r.matrix.matrix();
    records.push_back({{"matrix", {int_json(m.a), int_json(m.b), int_json(m.c), int_json(m.d)}},
                       {"norm", interval_or_int_json(r.norm)},
                       {"distance", interval_json(r.distance)},
                       {"exponent", interval_json(*r.exponent)},
                       {"exceeds_1_plus_eps", r.exceeds_one},
                       {"exceeds_2_plus_eps", r.exceeds_two}});
    out.csv_rows.push_back({m.a.get_str(), m.b.get_str(), m.c.get_str(), m.d.get_str(),
                            bound_text(r.norm.lo(), false), bound_text(r.norm.hi(), true),
                            enclose::decimal_down(r.distance.lo()), enclose::decimal_up(r.distance.hi()),
                            enclose::decimal_down(r.exponent->lo()), enclose::decimal_up(r.exponent->hi()),
                            yes_no(r.exceeds_one), yes_no(r.exceeds_two)});
  }
  out.result = {{"alpha", alpha ? json(alpha->reduced_minpoly().to_text()) : json("infinity")},
                {"xi_in_orbit", s.xi_in_orbit},
                {"candidates", s.candidates},
                {"records", records},
                {"trend_constant", s.trend_constant ? interval_json(*s.trend_constant) : json(nullptr)}};
}

}  // namespace

Outcome execute(const JobConfig& cfg, const ExpansionCache& cache) {
  Outcome out;
  out.result = json::object();
  if (cfg.command == "expand") {
    run_expand(cfg, cache, out);
  } else if (cfg.command == "convergents") {
    run_convergents(cfg, cache, out);
  } else if (cfg.command == "period") {
    run_period(cfg, out);
  } else if (cfg.command == "complexity") {
    run_complexity(cfg, cache, out);
  } else if (cfg.command == "detect") {
    run_detect(cfg, cache, out);
  } else if (cfg.command == "verify") {
    run_verify(cfg, cache, out);
  } else if (cfg.command == "harness") {
    run_harness(cfg, cache, out);
  } else if (cfg.command == "orbit") {
    run_orbit(cfg, cache, out);
  } else {
    throw InputError("unknown subcommand '" + cfg.command + "'");
  }
  return out;
}

}  // namespace cfspectra::app

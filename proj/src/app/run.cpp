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
#include <atomic>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <thread>

#include "cfspectra/app.hpp"

#ifndef CFSPECTRA_VERSION
#define CFSPECTRA_VERSION "unknown"
#endif

namespace cfspectra::app {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string digest_of(json report) {
  report.erase("timestamp");
  report.erase("digest");
  return sha256_hex(report.dump());
}

struct JobRun {
  JobConfig config;
  Outcome outcome;
  std::string error;
  int exit_code = 0;
};

void execute_guarded(JobRun& job, const ExpansionCache& cache) {
  try {
    job.outcome = execute(job.config, cache);
    job.exit_code = job.outcome.exit_code;
  } catch (const UndecidedError& e) {
    job.error = std::string("undecided: ") + e.what();
    job.exit_code = 2;
  } catch (const std::invalid_argument& e) {  // InputError derives from runtime_error, DomainError from this
    job.error = e.what();
    job.exit_code = 1;
  } catch (const InputError& e) {
    job.error = e.what();
    job.exit_code = 1;
  }
}

json job_report(const JobRun& job, const std::string& timestamp) {
  if (job.error.empty()) return make_report(job.config, job.outcome, timestamp);
  json r;
  r["tool"] = "cfspectra";
  r["version"] = CFSPECTRA_VERSION;
  r["config"] = job.config.to_json();
  r["error"] = job.error;
  r["exit_code"] = job.exit_code;
  r["digest"] = digest_of(r);
  r["timestamp"] = timestamp;
  return r;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError(path + ": cannot open output file");
  f << text;
  if (!f) throw InputError(path + ": write failed");
}

// workers, format and output for a job file come from the outer layers only.
JobConfig outer_config(const Settings& file, const Settings& cli) {
  Settings base = file;
  for (const auto& [k, v] : cli) base[k] = v;
  base["command"] = {"expand", "job file"};
  base.erase("action");
  return resolve({&base});
}

ExpansionCache make_cache(bool disabled) {
  return ExpansionCache(disabled ? std::nullopt : ExpansionCache::default_dir());
}

}  // namespace

json make_report(const JobConfig& config, const Outcome& outcome, const std::string& timestamp) {
  json r;
  r["tool"] = "cfspectra";
  r["version"] = CFSPECTRA_VERSION;
  r["config"] = config.to_json();
  r["inputs"] = outcome.inputs;
  r["result"] = outcome.result;
  r["exit_code"] = outcome.exit_code;
  r["digest"] = digest_of(r);
  r["timestamp"] = timestamp;
  return r;
}

std::string timestamp_now() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
    out += "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const Settings cli = parse_arguments(args);
    Settings file;
    if (auto it = cli.find("config"); it != cli.end()) file = read_config_file(it->second.value);
    const std::string timestamp = timestamp_now();

    if (auto job_it = cli.find("job"); job_it != cli.end()) {
      const JobConfig outer = outer_config(file, cli);
      std::vector<Settings> lines = read_job_file(job_it->second.value);
      std::vector<JobRun> jobs(lines.size());
      for (std::size_t i = 0; i < lines.size(); ++i) {
        jobs[i].config = resolve({&file, &cli, &lines[i]});
      }
      const ExpansionCache cache = make_cache(outer.no_cache);
      const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(outer.workers), jobs.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) execute_guarded(jobs[i], cache);
      };
      {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
        worker();
      }
      int code = 0;
      std::string text;
      if (outer.format == "csv") {
        for (std::size_t i = 0; i < jobs.size(); ++i) {
          code = std::max(code, jobs[i].exit_code);
          text += "# job " + std::to_string(i + 1) + "\n";
          text += jobs[i].error.empty() ? to_csv(jobs[i].outcome.csv_header, jobs[i].outcome.csv_rows)
                                        : "# error: " + jobs[i].error + "\n";
        }
      } else {
        json all;
        all["tool"] = "cfspectra";
        all["version"] = CFSPECTRA_VERSION;
        all["jobs"] = json::array();
        for (const JobRun& j : jobs) {
          code = std::max(code, j.exit_code);
          all["jobs"].push_back(job_report(j, timestamp));
        }
        all["digest"] = digest_of(all);
        all["timestamp"] = timestamp;
        text = all.dump(2) + "\n";
      }
      for (const JobRun& j : jobs) {
        if (!j.error.empty()) err << "error: " << j.error << "\n";
      }
      write_output(text, outer.output, out);
      return code;
    }

    JobRun job;
    job.config = resolve({&file, &cli});
    execute_guarded(job, make_cache(job.config.no_cache));
    if (!job.error.empty()) {
      err << "error: " << job.error << "\n";
      return job.exit_code;
    }
    const std::string text = job.config.format == "csv"
                                 ? to_csv(job.outcome.csv_header, job.outcome.csv_rows)
                                 : make_report(job.config, job.outcome, timestamp).dump(2) + "\n";
    write_output(text, job.config.output, out);
    return job.exit_code;
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cfspectra::app

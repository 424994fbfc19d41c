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


#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "cfspectra/app.hpp"

namespace cfspectra::app {

std::string word_digest(const CFExpansion& cf) {
  std::string text = cf.a0.get_str();
  for (const Int& q : cf.quotients) text += "," + q.get_str();
  return sha256_hex(text);
}

std::string convergents_digest(const CFExpansion& cf) {
  std::string text;
  for (const Convergent& c : convergents(cf)) text += c.p.get_str() + "/" + c.q.get_str() + ";";
  return sha256_hex(text);
}

std::optional<std::filesystem::path> ExpansionCache::default_dir() {
  if (const char* dir = std::getenv("CFSPECTRA_CACHE_DIR"); dir && *dir) return std::filesystem::path(dir);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "cfspectra";
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "cfspectra";
  }
  return std::nullopt;
}

CFExpansion ExpansionCache::expand(const AlgebraicNumber& x, const IntPolynomial& canonical, std::size_t root_index,
                                   std::size_t depth) const {
  if (!dir_) return cfspectra::expand(x, depth);
  const std::string key = canonical.to_text() + "|" + std::to_string(root_index) + "|" + std::to_string(depth);
  const std::filesystem::path file = *dir_ / (sha256_hex(key).substr(0, 32) + ".json");

  if (std::ifstream in(file); in) {
    try {
      json entry = json::parse(in);
      CFExpansion cf;
      cf.a0 = Int(entry.at("a0").get<std::string>());
      for (const auto& q : entry.at("quotients")) cf.quotients.emplace_back(q.get<std::string>());
      cf.terminated = entry.at("terminated").get<bool>();
      // A damaged or foreign entry falls through to recomputation.
      if (entry.at("key") == key && entry.at("convergents_sha256") == convergents_digest(cf)) {
        cf.source = x;
        return cf;
      }
    } catch (const std::exception&) {
    }
  }

  CFExpansion cf = cfspectra::expand(x, depth);
  json entry;
  entry["key"] = key;
  entry["a0"] = cf.a0.get_str();
  entry["quotients"] = json::array();
  for (const Int& q : cf.quotients) entry["quotients"].push_back(q.get_str());
  entry["terminated"] = cf.terminated;
  entry["convergents_sha256"] = convergents_digest(cf);
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  std::ostringstream tag;
  tag << ::getpid() << "-" << std::this_thread::get_id();
  const std::filesystem::path tmp = file.string() + ".tmp" + sha256_hex(tag.str()).substr(0, 8);
  {
    std::ofstream out(tmp);
    out << entry.dump();
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
  return cf;
}

}  // namespace cfspectra::app

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


#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cfspectra/app.hpp"

namespace cfspectra::app {
namespace {

std::string slurp(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open " + what);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

long line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<long>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

Int json_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Int(std::to_string(v.get<std::uint64_t>()))
                                                           : Int(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    try {
      return parse_int(v.get<std::string>());
    } catch (const InputError&) {
    }
  }
  throw InputError(where + ": expected an integer (use a string for very large values)");
}

CFExpansion word_from_json(const std::string& text, const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ":" + std::to_string(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1)) +
                     ": malformed JSON (" + e.what() + ")");
  }
  const std::string where = path.string();
  if (doc.is_array()) {
    // A bare letter array is the quotient word of [0; w1, w2, ...].
    CFExpansion cf;
    std::size_t i = 0;
    for (const json& q : doc) {
      ++i;
      Int v = json_integer(q, where + ": [" + std::to_string(i) + "]");
      if (v < 1) throw InputError(where + ": [" + std::to_string(i) + "] must be >= 1");
      cf.quotients.push_back(std::move(v));
    }
    cf.terminated = true;
    return cf;
  }
  if (!doc.is_object()) throw InputError(where + ":1: expected an object with a0 and quotients");
  for (const auto& [key, _] : doc.items()) {
    if (key != "a0" && key != "quotients" && key != "terminated") {
      throw InputError(where + ": unknown key '" + key + "'");
    }
  }
  if (!doc.contains("a0") || !doc.contains("quotients") || !doc["quotients"].is_array()) {
    throw InputError(where + ": expected \"a0\" and a \"quotients\" array");
  }
  CFExpansion cf;
  cf.a0 = json_integer(doc["a0"], where + ": a0");
  std::size_t i = 0;
  for (const json& q : doc["quotients"]) {
    ++i;
    Int v = json_integer(q, where + ": quotients[" + std::to_string(i) + "]");
    if (v < 1) throw InputError(where + ": quotients[" + std::to_string(i) + "] must be >= 1");
    cf.quotients.push_back(std::move(v));
  }
  cf.terminated = doc.value("terminated", true);
  return cf;
}

CFExpansion word_from_lines(const std::string& text, const std::filesystem::path& path) {
  std::istringstream in(text);
  std::string line;
  CFExpansion cf;
  bool have_a0 = false;
  for (long n = 1; std::getline(in, line); ++n) {
    const std::string body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string origin = path.string() + ":" + std::to_string(n);
    Int v;
    try {
      v = parse_int(body);
    } catch (const InputError&) {
      throw InputError(origin + ": expected one integer per line");
    }
    if (!have_a0) {
      cf.a0 = v;
      have_a0 = true;
      continue;
    }
    if (v < 1) throw InputError(origin + ": partial quotient must be >= 1");
    cf.quotients.push_back(std::move(v));
  }
  if (!have_a0) throw InputError(path.string() + ": empty word file");
  cf.terminated = true;
  return cf;
}

}  // namespace

IntPolynomial read_polynomial(const std::string& spec) {
  if (spec.empty()) throw InputError("empty polynomial");
  if (spec.front() != '@') {
    IntPolynomial p = IntPolynomial::parse(spec);
    if (p.is_constant()) throw InputError("polynomial must have degree >= 1: '" + spec + "'");
    return p;
  }
  const std::filesystem::path path = spec.substr(1);
  std::istringstream in(slurp(path, "polynomial file"));
  std::vector<Int> coeffs;
  std::string line;
  for (long n = 1; std::getline(in, line); ++n) {
    std::string body = line.substr(0, line.find('#'));
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream tokens(body);
    for (std::string tok; tokens >> tok;) {
      try {
        coeffs.push_back(parse_int(tok));
      } catch (const InputError&) {
        throw InputError(path.string() + ":" + std::to_string(n) + ": coefficient is not an integer: '" + tok + "'");
      }
    }
  }
  IntPolynomial p(std::move(coeffs));
  if (p.is_constant()) throw InputError(path.string() + ": polynomial must have degree >= 1");
  return p;
}

CFExpansion read_word_file(const std::filesystem::path& path) {
  const std::string text = slurp(path, "word file");
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return word_from_json(text, path);
  return word_from_lines(text, path);
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  char byte[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(byte, sizeof byte, "%02x", digest[i]);
    hex += byte;
  }
  return hex;
}

}  // namespace cfspectra::app

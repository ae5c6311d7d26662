// Copyright 2026 The hyperhoffman Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "hyperhoffman/config.hpp"

#include <charconv>
#include <fstream>
#include <set>

namespace hyperhoffman {

namespace {

template <class T>
T get_field(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config field '") + key + "': " + e.what());
  }
}

std::vector<std::string> string_list(const Json& j, const char* key) {
  const Json& v = j.at(key);
  std::vector<std::string> out;
  auto one = [&](const Json& x) {
    if (x.is_string()) {
      out.push_back(x.get<std::string>());
    } else if (x.is_number()) {
      // Shortest round-trip form, so 0.6 stays 3/5 after parse_rational.
      char buf[32];
      auto res = std::to_chars(buf, buf + sizeof buf, x.get<double>());
      out.emplace_back(buf, res.ptr);
    } else {
      throw ConfigError(std::string("config field '") + key + "' must hold numbers or strings");
    }
  };
  if (v.is_array()) {
    for (const auto& x : v) one(x);
  } else {
    one(v);
  }
  return out;
}

// Null means unset, as written by config_json.
bool has(const Json& j, const char* key) { return j.contains(key) && !j.at(key).is_null(); }

}  // namespace

RunConfig merge_config(RunConfig c, const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known = {"command", "n",      "r",    "p",   "rational", "eps",    "ks_slack",
                                              "eps_threshold", "census", "cross", "out", "format", "base_classes"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw ConfigError("unknown config field '" + key + "'");
  }
  if (has(j, "command")) c.command = get_field<std::string>(j, "command");
  if (has(j, "n")) c.n = get_field<int>(j, "n");
  if (has(j, "r")) c.r = get_field<int>(j, "r");
  if (has(j, "p")) c.p = string_list(j, "p");
  if (has(j, "rational")) c.rational = get_field<bool>(j, "rational");
  if (has(j, "eps")) c.eps = get_field<double>(j, "eps");
  if (has(j, "ks_slack")) c.ks_slack = get_field<double>(j, "ks_slack");
  if (has(j, "eps_threshold")) c.eps_threshold = get_field<double>(j, "eps_threshold");
  if (has(j, "census")) c.census = get_field<double>(j, "census");
  if (has(j, "cross")) c.cross = get_field<bool>(j, "cross");
  if (has(j, "out")) c.out = get_field<std::string>(j, "out");
  if (has(j, "format")) c.format = get_field<std::string>(j, "format");
  if (has(j, "base_classes")) c.base_classes = string_list(j, "base_classes");
  return c;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file " + path + ": " + e.what());
  }
  return merge_config(std::move(base), j);
}

Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["n"] = c.n ? Json(*c.n) : Json(nullptr);
  j["r"] = c.r;
  j["p"] = c.p;
  j["rational"] = c.rational;
  j["eps"] = c.eps ? Json(*c.eps) : Json(nullptr);
  j["ks_slack"] = c.ks_slack;
  j["eps_threshold"] = c.eps_threshold ? Json(*c.eps_threshold) : Json(nullptr);
  j["census"] = c.census ? Json(*c.census) : Json(nullptr);
  j["cross"] = c.cross;
  j["out"] = c.out ? Json(*c.out) : Json(nullptr);
  j["format"] = c.format;
  j["base_classes"] = c.base_classes;
  return j;
}

int resolved_n(const RunConfig& c) {
  if (c.n) {
    if (c.p.size() > 1 && static_cast<int>(c.p.size()) != *c.n) {
      throw ConfigError("--n " + std::to_string(*c.n) + " disagrees with " + std::to_string(c.p.size()) + " p values");
    }
    return *c.n;
  }
  if (c.p.empty()) throw ConfigError("need --p (and --n for a uniform p)");
  return static_cast<int>(c.p.size());
}

RationalBiasVector resolved_p_exact(const RunConfig& c) {
  if (c.p.empty()) throw ConfigError("need --p");
  const int n = resolved_n(c);
  std::vector<Rational> vals;
  try {
    for (const auto& s : c.p) vals.push_back(parse_rational(s));
  } catch (const Error& e) {
    throw ConfigError(std::string("bad p value: ") + e.what());
  }
  if (vals.size() == 1) vals.assign(static_cast<std::size_t>(n), vals.front());
  try {
    return RationalBiasVector(std::move(vals));
  } catch (const RangeError& e) {
    throw ConfigError(e.what());
  }
}

BiasVector resolved_p(const RunConfig& c) { return to_double(resolved_p_exact(c)); }

}  // namespace hyperhoffman

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


// Command-line driver: bound, oracle, fourier, stability, verify.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hyperhoffman/bounds.hpp"
#include "hyperhoffman/config.hpp"
#include "hyperhoffman/fourier.hpp"
#include "hyperhoffman/oracle.hpp"
#include "hyperhoffman/serialize.hpp"
#include "hyperhoffman/stability.hpp"
#include "hyperhoffman/verify.hpp"

namespace hh = hyperhoffman;

namespace {

constexpr int kExitUsage = 2;

struct Flags {
  std::optional<int> n;
  std::optional<int> r;
  std::optional<std::string> p;
  bool rational = false;
  std::optional<double> eps;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::string> config;
  bool cross = false;
  std::optional<double> census;
  std::optional<double> eps_max;
  std::optional<double> ks_slack;
  std::optional<double> eps_threshold;
  std::optional<std::string> family;
  std::optional<std::string> named;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--n", f.n, "ground set size");
  sub->add_option("--r", f.r, "arity r");
  sub->add_option("--p", f.p, "bias values p1,p2,... (decimal or a/b); one value with --n is uniform");
  sub->add_flag("--rational", f.rational, "exact rational arithmetic");
  sub->add_option("--eps", f.eps, "eps of the perturbed r-wise construction");
  sub->add_option("--out", f.out, "output file (default stdout)");
  sub->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--config", f.config, "JSON config file; flags override it");
  sub->add_option("--ks-slack", f.ks_slack, "constant replacing 4 in the one-coordinate approximation");
  sub->add_option("--eps-threshold", f.eps_threshold, "smallness threshold on eps");
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

hh::RunConfig resolve(const std::string& command, const Flags& f) {
  hh::RunConfig c;
  c.command = command;
  if (command == "stability") c.r = 3;
  if (f.config) c = hh::load_config_file(*f.config, c);
  c.command = command;
  if (f.n) c.n = *f.n;
  if (f.r) c.r = *f.r;
  if (f.p) c.p = split_csv(*f.p);
  if (f.rational) c.rational = true;
  if (f.eps) c.eps = *f.eps;
  if (f.out) c.out = *f.out;
  if (f.format) c.format = *f.format;
  if (f.cross) c.cross = true;
  if (f.census) c.census = *f.census;
  if (f.eps_max) c.census = *f.eps_max;
  if (f.ks_slack) c.ks_slack = *f.ks_slack;
  if (f.eps_threshold) c.eps_threshold = *f.eps_threshold;
  if (c.r < 2) throw hh::ConfigError("--r must be >= 2");
  return c;
}

void emit(const hh::RunConfig& c, const std::string& text) {
  if (c.out) {
    std::ofstream os(*c.out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + *c.out);
    os << text;
    if (!os) throw std::runtime_error("write failed for " + *c.out);
  } else {
    std::cout << text;
  }
}

std::string dump(const hh::Json& j) { return j.dump(2) + "\n"; }

hh::SubsetFamily parse_named(int n, const std::string& spec) {
  std::vector<std::string> tok;
  std::stringstream ss(spec);
  std::string t;
  while (std::getline(ss, t, ':')) tok.push_back(t);
  if (tok.empty()) throw hh::ConfigError("empty --named");
  auto arg = [&](std::size_t i) {
    if (i >= tok.size()) throw hh::ConfigError("--named " + spec + ": missing argument");
    return std::stoi(tok[i]);
  };
  if (tok[0] == "star") return hh::families::star(n, arg(1) - 1);
  if (tok[0] == "co-star") return hh::families::complement_of_star(n, arg(1) - 1);
  if (tok[0] == "majority") return hh::families::majority(n, arg(1), arg(2));
  if (tok[0] == "brace-daykin") return hh::families::brace_daykin(n);
  if (tok[0] == "ak") return hh::families::ak_family(n, arg(1));
  if (tok[0] == "a") return hh::families::a_n(n);
  if (tok[0] == "a-prime") return hh::families::a_prime_n(n);
  if (tok[0] == "full") return hh::SubsetFamily::full(n);
  throw hh::ConfigError("unknown family '" + tok[0] + "'");
}

int cmd_bound(const hh::RunConfig& c) {
  const auto p = hh::resolved_p(c);
  const auto rep = hh::theorem_dispatch(p, c.r);
  hh::Json j;
  j["config"] = hh::config_json(c);
  j["bound"] = hh::report_json(rep);
  if (!rep.claims_p1() && p.n() <= hh::kOracleMaxN) {
    // Outside every regime the oracle value is the useful output.
    if (c.rational) {
      j["oracle"] = hh::report_json(hh::max_measure(p.n(), c.r, hh::resolved_p_exact(c)));
    } else {
      j["oracle"] = hh::report_json(hh::max_measure(p.n(), c.r, p));
    }
  }
  emit(c, dump(j));
  return 0;
}

template <hh::Scalar T>
hh::Json oracle_payload(const hh::RunConfig& c, const hh::BasicBiasVector<T>& p) {
  if (c.cross) {
    std::vector<hh::BasicBiasVector<T>> ps(static_cast<std::size_t>(c.r), p);
    return hh::report_json(hh::cross_max<T>(p.n(), ps));
  }
  return hh::report_json(hh::max_measure(p.n(), c.r, p));
}

int cmd_oracle(const hh::RunConfig& c) {
  if (c.census) {
    const auto p = hh::resolved_p(c);
    if (!p.is_uniform()) throw hh::ConfigError("--census needs a uniform p");
    const auto records = hh::stability_census(p.n(), c.r, p.p(0), *c.census);
    if (c.format == "csv") {
      emit(c, hh::census_csv(records));
    } else {
      hh::Json j;
      j["config"] = hh::config_json(c);
      j["census_csv"] = hh::census_csv(records);
      emit(c, dump(j));
    }
    return 0;
  }
  hh::Json j;
  j["config"] = hh::config_json(c);
  j["oracle"] = c.rational ? oracle_payload(c, hh::resolved_p_exact(c)) : oracle_payload(c, hh::resolved_p(c));
  emit(c, dump(j));
  return 0;
}

int cmd_fourier(const hh::RunConfig& c, const Flags& f) {
  const auto p = hh::resolved_p(c);
  hh::SubsetFamily fam(p.n());
  if (f.family) {
    fam = hh::SubsetFamily::from_hex(p.n(), *f.family);
  } else if (f.named) {
    fam = parse_named(p.n(), *f.named);
  } else {
    throw hh::ConfigError("fourier needs --family HEX or --named SPEC");
  }
  if (c.r > 3) throw hh::ConfigError("fourier supports --r 2 or 3");
  const auto m = c.r == 2 ? hh::two_wise_measure(p) : hh::three_wise_measure(p);
  const auto spectrum = hh::operator_spectrum(hh::adjacency_operator(m));
  const auto e = hh::expand(fam, p);
  if (c.format == "csv") {
    emit(c, hh::fourier_csv(e, spectrum));
    return 0;
  }
  hh::Json j;
  j["config"] = hh::config_json(c);
  j["family"] = hh::report_json(fam);
  j["coefficients_csv"] = hh::fourier_csv(e, spectrum);
  j["mean"] = e.mean();
  j["high_degree_mass"] = hh::high_degree_mass(e);
  j["quadratic_form"] = hh::quadratic_form(e, spectrum);
  j["hoffman_deficit"] = hh::hoffman_deficit(e, spectrum);
  j["nearest_one_coordinate"] = hh::report_json(hh::nearest_one_coordinate(fam, p));
  const auto star = hh::star_detector(e);
  j["star_detector"] = star.detected ? hh::Json(star.center + 1) : hh::Json(star.failure);
  emit(c, dump(j));
  return 0;
}

int cmd_stability(const hh::RunConfig& c) {
  const auto p = hh::resolved_p(c);
  if (!p.is_uniform()) throw hh::ConfigError("stability needs a uniform p");
  const double pv = p.p(0);
  const double eps_max = c.census.value_or(0.05);
  const auto records = hh::stability_census(p.n(), c.r, pv, eps_max);
  if (c.format == "csv") {
    emit(c, hh::census_csv(records));
    return 0;
  }
  hh::Json j;
  j["config"] = hh::config_json(c);
  if (pv < 2.0 / 3.0) j["case_analysis"] = hh::report_json(hh::stability_case_analysis(pv, c.ks_slack));
  const bool regime = hh::in_stability_regime(c.r, pv);
  j["in_regime"] = regime;
  if (regime) {
    j["c_p"] = hh::c_p(c.r, pv);
    j["g2_elimination_threshold"] = hh::g2_elimination_threshold(c.r, pv, c.ks_slack);
  }
  std::size_t violations = 0;
  double worst_ratio = 0.0;
  for (const auto& r : records) {
    if (r.tau_bound && r.tau > *r.tau_bound + 1e-10) ++violations;
    if (r.eps > 0) worst_ratio = std::max(worst_ratio, r.star_distance / r.eps);
  }
  j["records"] = records.size();
  j["tau_violations"] = violations;
  j["max_star_distance_over_eps"] = worst_ratio;
  j["census_csv"] = hh::census_csv(records);
  emit(c, dump(j));
  return 0;
}

int cmd_verify(const hh::RunConfig& c) {
  const auto result = hh::run_verify(c);
  hh::Json j = hh::report_json(result);
  j["config"] = hh::config_json(c);
  if (c.out) {
    emit(c, dump(j));
  } else {
    std::cout << j.dump() << "\n";
  }
  for (const auto& chk : result.checks) {
    if (chk.status != hh::CheckStatus::Fail) continue;
    hh::Json w;
    w["id"] = chk.id;
    w["detail"] = chk.detail;
    w["witness"] = chk.witness;
    std::cout << w.dump() << "\n";
  }
  return result.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral independence bounds and exhaustive checks for intersecting families"};
  app.require_subcommand(1);
  Flags f;
  auto* bound = app.add_subcommand("bound", "evaluate the spectral bound for p and r");
  auto* oracle = app.add_subcommand("oracle", "exhaustive maximum over intersecting families");
  auto* fourier = app.add_subcommand("fourier", "Fourier coefficients of a family");
  auto* stability = app.add_subcommand("stability", "stability census and constants");
  auto* verify = app.add_subcommand("verify", "run the check suite");
  for (auto* s : {bound, oracle, fourier, stability, verify}) add_common(s, f);
  oracle->add_flag("--cross", f.cross, "r-cross-intersecting tuples, one p per family");
  oracle->add_option("--census", f.census, "record families with mu_p >= p - EPS");
  stability->add_option("--eps-max", f.eps_max, "census cutoff (default 0.05)");
  fourier->add_option("--family", f.family, "family as hex membership string");
  fourier->add_option("--named", f.named, "star:I, co-star:I, majority:K:M, brace-daykin, ak:I, a, a-prime, full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    const auto c = resolve(name, f);
    if (name == "bound") return cmd_bound(c);
    if (name == "oracle") return cmd_oracle(c);
    if (name == "fourier") return cmd_fourier(c, f);
    if (name == "stability") return cmd_stability(c);
    return cmd_verify(c);
  } catch (const hh::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

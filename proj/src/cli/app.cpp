// Copyright 2026 The logent Authors
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

#include "logent/cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "logent/cli/json_out.hpp"
#include "logent/cli/matrix_file.hpp"
#include "logent/errors.hpp"
#include "logent/postselection.hpp"
#include "logent/quantum.hpp"

#ifndef LOGENT_VERSION
#define LOGENT_VERSION "0.0.0"
#endif

namespace logent::cli {

namespace {

using nlohmann::json;

struct Options {
  std::vector<std::string> in;
  std::string pvm;
  std::string pre;
  std::string post;
  std::vector<std::string> props{"all"};
  std::vector<std::size_t> dims{2, 3, 4};
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 42;
  double tol = tol::kEquality;
  unsigned threads = 1;
};

// Collects raw input bytes for the report digest.
class InputSet {
 public:
  MatrixFile read(const std::string& path) {
    std::string raw;
    MatrixFile file = read_matrix_file(path, &raw);
    bytes_ += std::to_string(raw.size());
    bytes_ += ':';
    bytes_ += raw;
    return file;
  }
  void add_text(const std::string& text) { bytes_ += text; }
  std::string digest() const { return "fnv1a64:" + fnv1a64_hex(bytes_); }

 private:
  std::string bytes_;
};

json value_json(const std::variant<double, Complex>& v) {
  if (const double* d = std::get_if<double>(&v)) return *d;
  return complex_json(std::get<Complex>(v));
}

json make_report(std::string command, json args, std::optional<std::uint64_t> seed,
                 const InputSet& inputs, json results, json warnings) {
  json doc;
  doc["command"] = std::move(command);
  doc["args"] = std::move(args);
  doc["version"] = tool_version();
  doc["seed"] = seed ? json(*seed) : json(nullptr);
  doc["inputs_digest"] = inputs.digest();
  doc["results"] = std::move(results);
  doc["warnings"] = std::move(warnings);
  return doc;
}

EntropyReport quantity(std::string name, std::variant<double, Complex> value) {
  EntropyReport r;
  r.quantity = std::move(name);
  r.value = value;
  return r;
}

json quantities_json(const std::vector<EntropyReport>& reports) {
  json out = json::object();
  for (const auto& r : reports) out[r.quantity] = value_json(r.value);
  return out;
}

json cmd_entropy(const Options& o) {
  InputSet inputs;
  const auto rho = state_from_file(inputs.read(o.in.front()));
  std::vector<EntropyReport> q{
      quantity("logical_entropy", logical_entropy(rho)),
      quantity("purity", purity(rho)),
      quantity("min_logical_entropy", min_logical_entropy(rho)),
  };
  json args{{"in", o.in.front()}};
  json results;
  results["eigenvalues"] = eigenvalues(rho.matrix());
  if (!o.pvm.empty()) {
    args["pvm"] = o.pvm;
    const Pvm pvm = pvm_from_file(inputs.read(o.pvm));
    const auto measured = measured_state(rho, pvm);
    q.push_back(quantity("pvm_logical_entropy", pvm_logical_entropy(rho, pvm)));
    q.push_back(quantity("measured_logical_entropy", logical_entropy(measured)));
    q.push_back(quantity("divergence_to_measured", logical_divergence(rho, measured)));
    results["outcome_probabilities"] = outcome_probabilities(rho, pvm);
    results["pvm_non_degenerate"] = pvm.non_degenerate();
    if (pvm.non_degenerate()) {
      const auto split = basis_decomposition_check(rho, pvm);
      results["basis_decomposition"] = {{"diagonal_purity", split.diagonal_purity},
                                        {"off_diagonal_mass", split.off_diagonal_mass}};
    }
  }
  results.update(quantities_json(q));
  return make_report("entropy", args, std::nullopt, inputs, results, json::array());
}

json cmd_divergence(const Options& o) {
  InputSet inputs;
  const auto rho = state_from_file(inputs.read(o.in[0]));
  const auto sigma = state_from_file(inputs.read(o.in[1]));
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("divergence: states have dimensions " + std::to_string(rho.dim()) +
                            " and " + std::to_string(sigma.dim()));
  }
  const auto forms = divergence_forms(rho, sigma);
  json results = quantities_json({quantity("divergence", logical_divergence(rho, sigma)),
                                  quantity("fidelity", fidelity(rho, sigma))});
  results["forms"] = {{"definitional", forms.definitional},
                      {"hilbert_schmidt", forms.hilbert_schmidt},
                      {"purity_overlap", forms.purity_overlap}};
  json warnings = json::array();
  if (std::abs(forms.definitional - forms.hilbert_schmidt) > o.tol) {
    warnings.push_back("divergence forms differ by more than the tolerance");
  }
  return make_report("divergence", {{"in", o.in}}, std::nullopt, inputs, results, warnings);
}

json cmd_relative(const Options& o) {
  InputSet inputs;
  const auto rho = state_from_file(inputs.read(o.in.front()));
  const auto r = relative_logical_entropy(rho, o.tol);
  json results{{"relative_logical_entropy", r.value},
               {"divergence_to_reference", r.divergence},
               {"negative_divergence", r.negative_divergence},
               {"quarter_scaled_divergence", r.quarter_scaled},
               {"matches_negative_divergence", r.matches_negative_divergence},
               {"matches_quarter_scaled_divergence", r.matches_quarter_scaled}};
  json warnings = json::array();
  if (!r.matches_quarter_scaled) {
    warnings.push_back("L(A/B) does not equal -d(rho_AB || I/d_A (x) rho_B)/4; it " +
                       std::string(r.matches_negative_divergence ? "equals" : "also differs from") +
                       " -d(rho_AB || I/d_A (x) rho_B)");
  }
  return make_report("relative", {{"in", o.in.front()}, {"tol", o.tol}}, std::nullopt, inputs,
                     results, warnings);
}

json cmd_postselect(const Options& o) {
  InputSet inputs;
  Vector pre = vector_from_file(inputs.read(o.pre));
  Vector post = vector_from_file(inputs.read(o.post));
  const Pvm pvm = pvm_from_file(inputs.read(o.pvm));
  const auto pair = PrePostPair::make(std::move(pre), std::move(post));
  const auto rho = pre_post_state(pair);

  json weak = json::array();
  Complex sum = 0.0;
  for (const auto& w : weak_values(rho, pvm)) {
    weak.push_back(complex_json(w));
    sum += w;
  }
  const auto abl = abl_probabilities(rho, pvm);
  const auto rel = relation_diagnostic(rho, pvm, o.tol);
  json results = quantities_json({
      quantity("postselected_logical_entropy", postselected_logical_entropy(rho, pvm)),
      quantity("weak_logical_entropy", weak_logical_entropy(rho, pvm)),
      quantity("overlap", pair.overlap()),
  });
  results["weak_values"] = weak;
  results["weak_value_sum"] = complex_json(sum);
  results["abl"] = {{"raw", abl.raw}, {"normalized", abl.normalized}};
  results["relation"] = {{"postselected", rel.postselected},
                         {"weak_modulus_squared", rel.weak_modulus_squared},
                         {"abs_difference", rel.abs_difference},
                         {"agree", rel.agree}};
  json warnings = json::array();
  if (!rel.agree) {
    warnings.push_back("L_pi = " + format_double(rel.postselected) + " but |L_pi^w|^2 = " +
                       format_double(rel.weak_modulus_squared));
  }
  return make_report("postselect", {{"pre", o.pre}, {"post", o.post}, {"pvm", o.pvm}, {"tol", o.tol}},
                     std::nullopt, inputs, results, warnings);
}

json cmd_sample(const Options& o) {
  InputSet inputs;
  const auto rho = state_from_file(inputs.read(o.in.front()));
  const Pvm pvm = pvm_from_file(inputs.read(o.pvm));
  const std::uint64_t trials = o.trials.value_or(100000);
  const double analytic = pvm_logical_entropy(rho, pvm);
  const double estimate = two_draw_quantum_mc(rho, pvm, trials, o.seed);
  const double sigma = std::sqrt(std::max(analytic * (1.0 - analytic), 0.0) /
                                 static_cast<double>(trials));
  double z = 0.0;
  if (sigma > 0.0) {
    z = (estimate - analytic) / sigma;
  } else if (std::abs(estimate - analytic) > o.tol) {
    z = std::copysign(HUGE_VAL, estimate - analytic);
  }
  json results{{"estimate", estimate}, {"analytic", analytic}, {"sigma", sigma},
               {"z_score", z}, {"trials", trials}};
  json warnings = json::array();
  if (std::abs(z) > 4.0) warnings.push_back("estimate lies more than 4 sigma from the analytic value");
  return make_report("sample",
                     {{"in", o.in.front()}, {"pvm", o.pvm}, {"trials", trials}, {"seed", o.seed}},
                     o.seed, inputs, results, warnings);
}

std::vector<Proposition> resolve_props(const std::vector<std::string>& names) {
  std::vector<Proposition> out;
  for (const auto& name : names) {
    if (name == "all") {
      for (auto p : all_propositions()) out.push_back(p);
      continue;
    }
    const auto p = parse_proposition(name);
    if (!p) throw ParseError("unknown proposition \"" + name + "\"");
    out.push_back(*p);
  }
  std::vector<Proposition> unique;
  for (auto p : out)
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(p);
  return unique;
}

json cmd_verify(const Options& o, int& exit_code) {
  const auto props = resolve_props(o.props);
  SamplerConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials.value_or(1000);
  cfg.dims = o.dims;
  cfg.tolerance = o.tol;
  cfg.threads = o.threads;
  cfg.validate();

  json ids = json::array();
  for (auto p : props) ids.push_back(proposition_id(p));
  // Thread count is left out on purpose: it must not change the report.
  json args{{"prop", ids}, {"dims", cfg.dims}, {"trials", cfg.trials}, {"seed", cfg.seed},
            {"tol", cfg.tolerance}};
  InputSet inputs;
  inputs.add_text(args.dump());

  json list = json::array();
  json warnings = json::array();
  bool all_expected = true;
  for (auto p : props) {
    const auto result = verify_proposition(p, cfg);
    if (!result.expected()) {
      all_expected = false;
      warnings.push_back("proposition " + std::string(proposition_id(p)) + ": " +
                         std::string(status_name(result.status)));
    }
    list.push_back(proposition_result_json(result));
  }
  exit_code = all_expected ? kExitOk : kExitVerify;
  json results{{"propositions", list}, {"all_expected", all_expected}};
  return make_report("verify", args, cfg.seed, inputs, results, warnings);
}

}  // namespace

std::string_view tool_version() { return LOGENT_VERSION; }

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json proposition_result_json(const PropositionResult& r) {
  json j;
  j["id"] = proposition_id(r.id);
  j["status"] = status_name(r.status);
  j["expected"] = r.expected();
  j["seed"] = r.seed;
  j["dims"] = r.dims;
  j["trials_run"] = r.trials_run;
  j["checks"] = r.checks;
  j["failure_count"] = r.failure_count;
  j["max_excess"] = r.max_excess;
  j["tolerance"] = r.tolerance;
  if (!r.note.empty()) j["note"] = r.note;
  json counters = json::object();
  for (const auto& [name, value] : r.counters) counters[name] = value;
  j["counters"] = counters;
  json failures = json::array();
  for (const auto& f : r.failures) {
    json e{{"dim", f.dim}, {"trial", f.trial}, {"seed", r.seed}, {"excess", f.excess}};
    if (!f.error.empty()) e["error"] = f.error;
    failures.push_back(std::move(e));
  }
  j["failures"] = failures;
  if (r.witness) {
    MatrixFile state;
    state.kind = MatrixKind::kDensity;
    state.dims = {2, 2, 2};
    state.matrices = {r.witness->state};
    j["witness"] = {{"state", matrix_file_json(state)},
                    {"trial", r.witness->trial},
                    {"gap", r.witness->gap},
                    {"recomputed_gap", r.witness->recomputed_gap}};
  }
  return j;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Logical entropy of partitions and quantum states", "logent"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  auto* entropy = app.add_subcommand("entropy", "L(rho), purity and spectrum; PVM quantities with --pvm");
  entropy->add_option("--in", o.in, "state file (density or vector)")->required()->expected(1);
  entropy->add_option("--pvm", o.pvm, "PVM file (projector or unitary)");

  auto* divergence = app.add_subcommand("divergence", "logical divergence and fidelity of two states");
  divergence->add_option("--in", o.in, "state file; give twice")->required()->expected(2);

  auto* relative = app.add_subcommand("relative", "relative logical entropy L(A/B) of a bipartite state");
  relative->add_option("--in", o.in, "bipartite state file with dims")->required()->expected(1);
  relative->add_option("--tol", o.tol, "comparison tolerance");

  auto* verify = app.add_subcommand("verify", "randomized proposition checks");
  verify->add_option("--prop", o.props, "proposition ids (1a..12, ssa) or all")->delimiter(',');
  verify->add_option("--dims", o.dims, "dimensions, comma separated")->delimiter(',');
  verify->add_option("--trials", o.trials, "trials per dimension (default 1000)");
  verify->add_option("--seed", o.seed, "base seed");
  verify->add_option("--tol", o.tol, "inequality slack");
  verify->add_option("--threads", o.threads, "worker threads; does not change results");

  auto* postselect = app.add_subcommand("postselect", "weak values and post-selected entropies");
  postselect->add_option("--pre", o.pre, "pre-selected vector file")->required();
  postselect->add_option("--post", o.post, "post-selected vector file")->required();
  postselect->add_option("--pvm", o.pvm, "PVM file")->required();
  postselect->add_option("--tol", o.tol, "relation check tolerance");

  auto* sample = app.add_subcommand("sample", "Monte Carlo two-draw distinction estimate");
  sample->add_option("--in", o.in, "state file")->required()->expected(1);
  sample->add_option("--pvm", o.pvm, "PVM file")->required();
  sample->add_option("--trials", o.trials, "draw pairs (default 100000)");
  sample->add_option("--seed", o.seed, "seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    int code = kExitOk;
    json doc;
    if (*entropy) {
      doc = cmd_entropy(o);
    } else if (*divergence) {
      doc = cmd_divergence(o);
    } else if (*relative) {
      doc = cmd_relative(o);
    } else if (*verify) {
      doc = cmd_verify(o, code);
    } else if (*postselect) {
      doc = cmd_postselect(o);
    } else {
      doc = cmd_sample(o);
    }
    write_json(out, doc);
    for (const auto& w : doc["warnings"]) err << "warning: " << w.get<std::string>() << '\n';
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const OrthogonalSelection& e) {
    err << "orthogonal selection: " << e.what() << '\n';
    return kExitOrthogonal;
  } catch (const DimensionMismatch& e) {
    err << "dimension mismatch: " << e.what() << '\n';
    return kExitDimension;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace logent::cli

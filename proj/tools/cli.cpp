// Copyright 2026 The tricount Authors.
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tricount/tricount.h"

namespace tricount_cli {
namespace {

using nlohmann::json;

// Carries a tc_status out of a helper so RunCli can pick the exit code.
struct CliFailure {
  tc_status status;
  std::string message;
};

int ExitCodeFor(tc_status status) {
  switch (status) {
    case TC_OK: return kExitOk;
    case TC_ERR_INVALID_ARGUMENT: return kExitUsage;
    case TC_ERR_PARSE:
    case TC_ERR_IO:
    case TC_ERR_OUT_OF_RANGE: return kExitInput;
    default: return kExitInvariant;
  }
}

void Check(tc_status status) {
  if (status != TC_OK) throw CliFailure{status, tc_last_error()};
}

struct GraphDeleter {
  void operator()(tc_graph* g) const { tc_graph_free(g); }
};
using GraphPtr = std::unique_ptr<tc_graph, GraphDeleter>;

std::string TakeString(char* s) {
  std::string out = s ? s : "";
  tc_string_free(s);
  return out;
}

std::string FormatNumber(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// |est - t| / t; null when t = 0 and est != 0.
json RelErr(double est, std::uint64_t t) {
  if (t == 0) return est == 0.0 ? json(0.0) : json(nullptr);
  const double td = static_cast<double>(t);
  return std::abs(est - td) / td;
}

GraphPtr LoadGraph(const std::string& path, bool remap) {
  tc_graph* g = nullptr;
  Check(tc_graph_load_file(path.c_str(), remap ? 1 : 0, &g));
  return GraphPtr(g);
}

std::uint64_t ExactCount(const tc_graph* g) {
  std::uint64_t t = 0;
  Check(tc_exact_count(g, &t));
  return t;
}

struct EstimateFlags {
  double epsilon = 0.5;
  std::uint64_t seed = 0;
  std::string profile = "practical";
  std::optional<std::int64_t> budget;
  bool timing = false;
};

tc_estimate_options MakeOptions(const EstimateFlags& f, std::uint64_t seed) {
  tc_estimate_options o;
  tc_estimate_options_init(&o);
  o.epsilon = f.epsilon;
  o.seed = seed;
  if (f.profile == "practical") {
    o.profile = TC_PROFILE_PRACTICAL;
  } else if (f.profile == "theoretical") {
    o.profile = TC_PROFILE_THEORETICAL;
  } else {
    throw CliFailure{TC_ERR_INVALID_ARGUMENT,
                     "unknown profile '" + f.profile + "'"};
  }
  o.budget = f.budget.value_or(-1);
  o.include_timing = f.timing ? 1 : 0;
  return o;
}

json RunEstimate(const tc_graph* g, const EstimateFlags& f,
                 std::uint64_t seed) {
  const auto options = MakeOptions(f, seed);
  double estimate = 0.0;
  char* report = nullptr;
  Check(tc_estimate(g, &options, &estimate, &report));
  return json::parse(TakeString(report));
}

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw CliFailure{TC_ERR_IO, "cannot open " + path};
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

int CmdExact(const std::string& path, bool remap, bool as_json,
             const std::string& out_path, std::ostream& out) {
  GraphPtr g = LoadGraph(path, remap);
  Sink sink(out_path, out);
  if (as_json) {
    char* stats = nullptr;
    Check(tc_exact_stats_json(g.get(), &stats));
    sink.stream() << TakeString(stats) << "\n";
  } else {
    sink.stream() << "t=" << ExactCount(g.get()) << "\n";
  }
  return kExitOk;
}

int CmdEstimate(const std::string& path, bool remap, const EstimateFlags& f,
                bool as_json, bool exact_check, const std::string& out_path,
                std::ostream& out) {
  GraphPtr g = LoadGraph(path, remap);
  json report = RunEstimate(g.get(), f, f.seed);
  if (exact_check) {
    const std::uint64_t t = ExactCount(g.get());
    const double est = report["estimate"].get<double>();
    report["exact_t"] = t;
    report["rel_err"] = RelErr(est, t);
  }
  Sink sink(out_path, out);
  auto& os = sink.stream();
  if (as_json) {
    os << report.dump() << "\n";
    return kExitOk;
  }
  const auto& q = report["queries"];
  os << "estimate=" << FormatNumber(report["estimate"].get<double>()) << "\n"
     << "queries: degree=" << q["degree"] << " neighbor=" << q["neighbor"]
     << " pair=" << q["pair"] << " vertex_samples=" << q["vertex_samples"]
     << " graph_queries=" << q["graph_queries"] << "\n"
     << "fallback_used=" << (report["fallback_used"].get<bool>() ? "true"
                                                                 : "false")
     << " termination=" << report["termination"].get<std::string>() << "\n";
  if (exact_check) {
    os << "exact_t=" << report["exact_t"] << " rel_err="
       << (report["rel_err"].is_null()
               ? std::string("inf")
               : FormatNumber(report["rel_err"].get<double>()))
       << "\n";
  }
  if (f.timing) {
    os << "wall_ms=" << FormatNumber(report["wall_ms"].get<double>()) << "\n";
  }
  return kExitOk;
}

struct GenFlags {
  std::string family;
  std::uint64_t n = 0, side = 0, t = 0, r = 0, k = 0, seed = 0;
  double p = 0.0;
  bool shuffle = false;
};

int CmdGen(const GenFlags& f, const std::string& out_path, std::ostream& out) {
  tc_gen_spec spec;
  tc_gen_spec_init(&spec);
  spec.family = f.family.c_str();
  spec.n = f.n;
  spec.side = f.side;
  spec.t = f.t;
  spec.r = f.r;
  spec.k = f.k;
  spec.p = f.p;
  spec.seed = f.seed;
  spec.shuffle = f.shuffle ? 1 : 0;
  tc_graph* raw = nullptr;
  char* sidecar = nullptr;
  Check(tc_generate(&spec, &raw, &sidecar));
  GraphPtr g(raw);
  const std::string side_json = json::parse(TakeString(sidecar)).dump(2);
  if (out_path.empty()) {
    out << side_json << "\n";
    return kExitOk;
  }
  Check(tc_graph_write_file(g.get(), out_path.c_str()));
  std::ofstream side(out_path + ".json");
  if (!(side << side_json << "\n")) {
    throw CliFailure{TC_ERR_IO, "cannot write " + out_path + ".json"};
  }
  out << "wrote " << out_path << " and " << out_path << ".json\n";
  return kExitOk;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

int CmdBench(const std::string& manifest_path, const EstimateFlags& f,
             bool as_json, const std::string& out_path, std::ostream& out) {
  std::ifstream in(manifest_path);
  if (!in) throw CliFailure{TC_ERR_IO, "cannot open " + manifest_path};
  json manifest;
  try {
    manifest = json::parse(in);
  } catch (const json::exception& e) {
    throw CliFailure{TC_ERR_PARSE, manifest_path + ": " + e.what()};
  }
  if (!manifest.is_array()) {
    throw CliFailure{TC_ERR_PARSE, manifest_path + ": expected a JSON array"};
  }

  json rows = json::array();
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    const json& entry = manifest[i];
    const std::string where =
        manifest_path + ": entry " + std::to_string(i) + ": ";
    GraphPtr g;
    std::string instance;
    std::optional<std::uint64_t> known_t;
    if (entry.contains("path")) {
      instance = entry["path"].get<std::string>();
      g = LoadGraph(instance, entry.value("remap", false));
    } else if (entry.contains("genspec")) {
      const std::string spec = entry["genspec"].dump();
      tc_graph* raw = nullptr;
      char* sidecar = nullptr;
      Check(tc_generate_json(spec.c_str(), &raw, &sidecar));
      g.reset(raw);
      const json side = json::parse(TakeString(sidecar));
      known_t = side["exact_t"].get<std::uint64_t>();
      instance = side["family"].get<std::string>() + ":" +
                 side["params"].dump();
    } else {
      throw CliFailure{TC_ERR_PARSE, where + "needs \"path\" or \"genspec\""};
    }
    const std::uint64_t exact_t = known_t ? *known_t : ExactCount(g.get());
    std::vector<std::uint64_t> seeds = {f.seed};
    if (entry.contains("seeds")) {
      seeds = entry["seeds"].get<std::vector<std::uint64_t>>();
    }
    for (std::uint64_t seed : seeds) {
      const json report = RunEstimate(g.get(), f, seed);
      const double est = report["estimate"].get<double>();
      json row = {
          {"instance", instance},
          {"seed", seed},
          {"n", tc_graph_num_vertices(g.get())},
          {"m", tc_graph_num_edges(g.get())},
          {"exact_t", exact_t},
          {"estimate", est},
          {"rel_err", RelErr(est, exact_t)},
          {"queries", report["queries"]},
          {"fallback_used", report["fallback_used"]},
          {"wall_ms", report["wall_ms"]},
      };
      rows.push_back(std::move(row));
    }
  }

  Sink sink(out_path, out);
  auto& os = sink.stream();
  if (as_json) {
    os << rows.dump() << "\n";
    return kExitOk;
  }
  os << "instance,seed,n,m,exact_t,estimate,rel_err,degree,neighbor,pair,"
        "vertex_samples,graph_queries,fallback_used,wall_ms\n";
  for (const auto& row : rows) {
    const auto& q = row["queries"];
    os << CsvField(row["instance"].get<std::string>()) << ','
       << row["seed"] << ',' << row["n"] << ',' << row["m"] << ','
       << row["exact_t"] << ',' << FormatNumber(row["estimate"].get<double>())
       << ','
       << (row["rel_err"].is_null()
               ? std::string("inf")
               : FormatNumber(row["rel_err"].get<double>()))
       << ',' << q["degree"] << ',' << q["neighbor"] << ',' << q["pair"] << ','
       << q["vertex_samples"] << ',' << q["graph_queries"] << ','
       << (row["fallback_used"].get<bool>() ? "true" : "false") << ','
       << (row["wall_ms"].is_null()
               ? std::string()
               : FormatNumber(row["wall_ms"].get<double>()))
       << '\n';
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Triangle-count estimation over a metered query oracle",
               "tricount"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tc_version());

  std::string input, out_path;
  bool as_json = false, remap = false, exact_check = false;
  EstimateFlags ef;
  GenFlags gf;
  std::int64_t budget = -1;

  auto add_estimate_flags = [&](CLI::App* cmd) {
    cmd->add_option("--epsilon", ef.epsilon, "Accuracy parameter in (0, 1]")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", ef.seed, "Root seed");
    cmd->add_option("--profile", ef.profile, "theoretical or practical")
        ->check(CLI::IsMember({"theoretical", "practical"}));
    cmd->add_option("--budget", budget,
                    "Distinct-query cap for the search (default 2*m_bar)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--timing", ef.timing, "Report wall-clock time");
  };

  auto* exact = app.add_subcommand("exact", "Count triangles exactly");
  exact->add_option("input", input, "Edge-list file")->required();
  exact->add_flag("--json", as_json, "Print t, t_v and t_e as JSON");
  exact->add_flag("--remap", remap, "Relabel arbitrary ids to 0..n-1");
  exact->add_option("--out", out_path, "Output file");

  auto* estimate = app.add_subcommand("estimate", "Estimate the triangle count");
  estimate->add_option("input", input, "Edge-list file")->required();
  add_estimate_flags(estimate);
  estimate->add_flag("--json", as_json, "Print the report as JSON");
  estimate->add_flag("--exact-check", exact_check,
                     "Also count exactly and report the relative error");
  estimate->add_flag("--remap", remap, "Relabel arbitrary ids to 0..n-1");
  estimate->add_option("--out", out_path, "Output file");

  auto* gen = app.add_subcommand("gen", "Generate a benchmark instance");
  gen->add_option("--family", gf.family,
                  "clique, g1-bipartite, g2-matching, g2-multi-matching, "
                  "g2-partial-matching, g1-double-bipartite, special-four, "
                  "erdos-renyi")
      ->required();
  gen->add_option("--n", gf.n, "Vertex count (0: smallest that fits)");
  gen->add_option("--side", gf.side, "Bipartite side length s");
  gen->add_option("--t", gf.t, "Triangle parameter");
  gen->add_option("--r", gf.r, "Number of matchings");
  gen->add_option("--k", gf.k, "Partial matching size");
  gen->add_option("--p", gf.p, "Edge probability");
  gen->add_option("--seed", gf.seed, "Generator seed");
  gen->add_flag("--shuffle", gf.shuffle, "Randomize vertex ids");
  gen->add_option("--out", out_path,
                  "Edge-list path; the sidecar goes to PATH.json");

  auto* bench = app.add_subcommand("bench", "Run a benchmark manifest");
  bench->add_option("manifest", input, "JSON manifest")->required();
  add_estimate_flags(bench);
  bench->add_flag("--json", as_json, "Emit JSON rows instead of CSV");
  bench->add_option("--out", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (budget >= 0) ef.budget = budget;

  try {
    if (exact->parsed()) return CmdExact(input, remap, as_json, out_path, out);
    if (estimate->parsed()) {
      return CmdEstimate(input, remap, ef, as_json, exact_check, out_path, out);
    }
    if (gen->parsed()) return CmdGen(gf, out_path, out);
    if (bench->parsed()) return CmdBench(input, ef, as_json, out_path, out);
  } catch (const CliFailure& f) {
    err << "error: " << f.message << "\n";
    return ExitCodeFor(f.status);
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace tricount_cli

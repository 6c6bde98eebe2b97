// Copyright 2026 The entcon Authors
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

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "entcon/entcon.hpp"
#include "measures.hpp"
#include "reproduce.hpp"

namespace {

using namespace entcon;
using namespace entcon::cli;

// 0 ok, 1 usage, 2 malformed state file, 3 unknown measure, 4 invalid state.
enum Exit { kOk = 0, kUsage = 1, kFormat = 2, kMeasure = 3, kState = 4 };

struct Common {
  std::size_t budget = 900;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string format = "pretty";
  bool polish = false;
  bool history = false;

  CreOptions cre() const {
    CreOptions o;
    o.budget = budget;
    o.seed = seed;
    o.threads = threads;
    o.polish = polish;
    o.history = history;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget", c.budget, "decompositions sampled per convex-roof estimate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "base random seed")->capture_default_str();
  cmd->add_option("--threads", c.threads, "worker threads (0 = all cores)")->capture_default_str();
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  cmd->add_flag("--polish", c.polish, "locally refine the best sampled decomposition");
}

std::vector<int> parse_modes(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (cur.empty()) throw InvalidArgument("bad mode list '" + s + "'");
      out.push_back(std::stoi(cur));
      cur.clear();
    } else if (ch >= '0' && ch <= '9') {
      cur += ch;
    } else if (ch != ' ') {
      throw InvalidArgument("bad mode list '" + s + "'");
    }
  }
  return out;
}

int run_compute(const std::string& state_src, const std::string& measure_text, const std::string& partition,
                const std::string& reduction, const std::string& normalize_over, const Common& c) {
  Request req;
  req.measure = parse_measure(measure_text);
  req.cre = c.cre();
  if (!partition.empty()) req.partition = ModePartition::parse(partition);
  if (!reduction.empty()) req.reduction = parse_modes(reduction);
  const auto state = load_state(state_src);
  const auto t0 = std::chrono::steady_clock::now();
  auto out = evaluate(req, state);
  double normalization = 1.0;
  if (!normalize_over.empty()) {
    normalization = 0.0;
    for (const auto& name : reference_names(normalize_over))
      normalization = std::max(normalization, evaluate(req, load_state(name)).value);
    if (!(normalization > 0.0)) throw InvalidArgument("normalization set has maximum zero");
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double value = out.value / normalization;
  if (c.format == "json") {
    json j = {{"state", state_src},
              {"measure", req.measure.name},
              {"value", value},
              {"unnormalized_value", out.value},
              {"normalization", normalization},
              {"method", out.method},
              {"budget", c.budget},
              {"seed", c.seed},
              {"detail", out.detail},
              {"seconds", seconds}};
    if (!normalize_over.empty()) j["normalize_over"] = normalize_over;
    std::cout << j.dump(2) << "\n";
  } else if (c.format == "csv" && c.history && out.detail.contains("history")) {
    std::cout << "sample_index,running_min\r\n";
    const auto& h = out.detail["history"];
    for (std::size_t i = 0; i < h.size(); ++i) std::cout << i << "," << io::number(h[i].get<double>()) << "\r\n";
  } else {
    if (normalization != 1.0) {
      out.table.notes.push_back("normalized value " + io::number(value) + " (divided by " + io::number(normalization) +
                                ", the maximum over " + normalize_over + ")");
    }
    std::cout << render(out.table, c.format);
  }
  return kOk;
}

int run_reproduce(const std::string& target, const Common& c) {
  const auto table = reproduce(target, c.cre());
  std::cout << render(table, c.format);
  return kOk;
}

int run_catalog(const std::string& format) {
  Table t{"catalog", {"name", "kind", "description"}, {}, {}};
  for (const auto& e : catalog_entries()) t.add({e.name, e.pure ? "pure" : "mixed", e.description});
  std::cout << render(t, format);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entcon: multipartite ent-based entanglement measures"};
  app.require_subcommand(1);

  Common common;
  std::string state_src, measure = "fdm", partition, reduction, normalize_over, target, path, catalog_format = "pretty";
  bool unnormalized = false;

  auto* compute = app.add_subcommand("compute", "compute a measure for one state");
  compute->add_option("--state", state_src, "catalog name or qstate-JSON file")->required();
  compute->add_option("--measure", measure,
                      "ent, fgm, fsm, fdm, gm<k>, sm<k>, dm<k>, sgm<k>, sfgm, pe, pec, vector, array, abs, rms")
      ->capture_default_str();
  compute->add_option("--partition", partition, "partition such as 1|2,3,4 (for pe/pec)");
  compute->add_option("--reduction", reduction, "mode list such as 1,2,4 (for vector/rms)");
  compute->add_option("--normalize-over", normalize_over,
                      "divide by the maximum over a state set: table1, pure-tests, mixed-tests, or names");
  compute->add_flag("--unnormalized", unnormalized, "report unnormalized values (the default)");
  compute->add_flag("--history", common.history, "record the running minimum of convex-roof searches");
  add_common(compute, common);

  auto* repro = app.add_subcommand("reproduce", "recompute a reference table or figure data set");
  repro->add_option("target", target, "table1, vectors, arrays, fig3 ... fig9")
      ->required()
      ->check(CLI::IsMember(reproduce_targets()));
  add_common(repro, common);

  auto* state_cmd = app.add_subcommand("state", "qstate-JSON import and export");
  state_cmd->require_subcommand(1);
  auto* exp = state_cmd->add_subcommand("export", "write a catalog state as qstate-JSON");
  exp->add_option("name", state_src, "catalog name")->required();
  exp->add_option("path", path, "output file (- for stdout)")->required();
  auto* imp = state_cmd->add_subcommand("import", "validate a qstate-JSON file and summarize it");
  imp->add_option("path", path, "input file")->required();

  auto* cat = app.add_subcommand("catalog", "list built-in states");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "list catalog names");
  list->add_option("--format", catalog_format)->check(CLI::IsMember({"json", "csv", "pretty"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*compute) {
      if (unnormalized && !normalize_over.empty()) throw InvalidArgument("--unnormalized conflicts with --normalize-over");
      return run_compute(state_src, measure, partition, reduction, normalize_over, common);
    }
    if (*repro) return run_reproduce(target, common);
    if (*exp) {
      const auto s = load_state(state_src);
      if (path == "-")
        std::cout << io::to_json(s).dump(2) << "\n";
      else
        io::write_state(path, s);
      return kOk;
    }
    if (*imp) {
      const auto s = io::read_state(path);
      const auto rho = io::as_density(s);
      json j = {{"dims", rho.dims().values()},
                {"kind", std::holds_alternative<PureState>(s) ? "pure" : "mixed"},
                {"purity", purity(rho)},
                {"rank", spectral(rho).rank},
                {"tgx", is_tgx(rho)}};
      std::cout << j.dump(2) << "\n";
      return kOk;
    }
    if (*list) return run_catalog(catalog_format);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFormat;
  } catch (const UnknownMeasure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMeasure;
  } catch (const InvalidState& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kState;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

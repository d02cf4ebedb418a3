#include "commands.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bpham/bp_graph.hpp"
#include "bpham/constructor.hpp"
#include "bpham/errors.hpp"
#include "bpham/oracle.hpp"
#include "fuzz.hpp"
#include "io.hpp"

namespace bpham::cli {

namespace {

BuildMode parse_mode(const std::string& m) {
  return m == "fallback" ? BuildMode::kFallback : BuildMode::kStrict;
}

void check_dim(int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw InputError("n must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  }
}

FaultSet faults_for(const RunConfig& config) {
  if (config.faults_path.empty()) return FaultSet{config.n, {}, {}};
  FaultSet f = load_faults(config.faults_path);
  if (f.n != config.n) throw InputError("fault file n differs from --n");
  return f;
}

// 0 when usable, otherwise the exit code after printing the violations.
int screen_faults(const FaultSet& f, int bound) {
  const auto report = validate(f, bound);
  if (report.ok) return kOk;
  for (const auto& v : report.violations) std::cerr << v.kind << ": " << v.detail << "\n";
  return report.structurally_valid() ? kBudgetExceeded : kInvalidInput;
}

SignedPermutation vertex_arg(const std::string& text, int n) {
  try {
    const auto u = parse_vertex(text);
    if (u.size() != n) throw InputError("vertex " + text + " is not in BP_" + std::to_string(n));
    return u;
  } catch (const DomainError& e) {
    throw InputError(std::string("bad vertex ") + text + ": " + e.what());
  }
}

void print_violations(const VerificationReport& r) {
  for (const auto& v : r.violations) {
    std::cout << kind_name(v.kind) << " " << v.position << " " << v.detail << "\n";
  }
}

std::string render_walk(const std::string& kind, int n, const std::vector<SignedPermutation>& vs,
                        const CaseTrace& trace, int fallbacks, const FaultSet& faults,
                        const SignedPermutation* u, const SignedPermutation* v,
                        const std::string& format) {
  if (format == "text") {
    std::string s;
    for (const auto& x : vs) s += to_string(x) + "\n";
    return s;
  }
  json out{{"kind", kind}, {"n", n}};
  if (u) out["source"] = vertex_json(*u);
  if (v) out["target"] = vertex_json(*v);
  json verts = json::array();
  for (const auto& x : vs) verts.push_back(vertex_json(x));
  out["vertices"] = std::move(verts);
  out["trace"] = trace_json(trace);
  out["fallback_invocations"] = fallbacks;
  out["faults"] = faults_json(faults);
  return out.dump() + "\n";
}

template <class Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const UsageError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const StrictModeFailure& e) {
    std::cerr << "strict-mode failure: " << e.what() << "\n";
    for (const auto& r : e.trace().records()) {
      std::cerr << std::string(static_cast<std::size_t>(2 * r.depth), ' ') << r.label << " "
                << r.detail << "\n";
    }
    return kStrictFailure;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  } catch (const CapabilityError& e) {
    std::cerr << "capability: " << e.what() << "\n";
    return kInvalidInput;
  }
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

int cmd_cycle(const RunConfig& config) {
  return guarded([&] {
    check_dim(config.n, 3, kMaxConstructionDim);
    const FaultSet f = faults_for(config);
    if (const int rc = screen_faults(f, config.n - 2)) return rc;
    const auto c = hamiltonian_cycle(config.n, f, BuildOptions{parse_mode(config.mode)});
    const auto check = verify_cycle(config.n, f, c.vertices);
    if (!check.ok) {
      print_violations(check);
      return static_cast<int>(kFailed);
    }
    emit(config.out, render_walk("cycle", config.n, c.vertices, c.trace, c.fallback_invocations,
                                 f, nullptr, nullptr, config.format));
    return static_cast<int>(kOk);
  });
}

int cmd_path(const RunConfig& config) {
  return guarded([&] {
    check_dim(config.n, 3, kMaxConstructionDim);
    const FaultSet f = faults_for(config);
    if (const int rc = screen_faults(f, config.n - 3)) return rc;
    const auto u = vertex_arg(config.source, config.n);
    const auto v = vertex_arg(config.target, config.n);
    const auto p = hamiltonian_path(config.n, u, v, f, BuildOptions{parse_mode(config.mode)});
    const auto check = verify_path(config.n, f, u, v, p.vertices);
    if (!check.ok) {
      print_violations(check);
      return static_cast<int>(kFailed);
    }
    emit(config.out, render_walk("path", config.n, p.vertices, p.trace, p.fallback_invocations, f,
                                 &u, &v, config.format));
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const RunConfig& config) {
  return guarded([&] {
    const json doc = read_json_file(config.artifact);
    if (!doc.is_object() || !doc.contains("kind") || !doc.contains("n") ||
        !doc.contains("vertices") || !doc.at("vertices").is_array()) {
      throw InputError("artifact needs kind, n and vertices");
    }
    const std::string kind = doc.at("kind").get<std::string>();
    const int n = doc.at("n").get<int>();
    check_dim(n, 1, SignedPermutation::kMaxDim);
    FaultSet f{n, {}, {}};
    if (!config.faults_path.empty()) {
      f = load_faults(config.faults_path);
    } else if (doc.contains("faults")) {
      f = faults_from_json(doc.at("faults"));
    }
    if (const auto r = validate(f, f.size()); !r.ok) {
      throw InputError("artifact fault set is invalid: " + r.violations.front().kind);
    }
    std::vector<SignedPermutation> vs;
    for (const auto& x : doc.at("vertices")) vs.push_back(vertex_from_json(x));
    VerificationReport report;
    if (kind == "cycle") {
      report = verify_cycle(n, f, vs);
    } else if (kind == "path") {
      if (!doc.contains("source") || !doc.contains("target")) {
        throw InputError("path artifact needs source and target");
      }
      report = verify_path(n, f, vertex_from_json(doc.at("source")),
                           vertex_from_json(doc.at("target")), vs);
    } else {
      throw InputError("unknown artifact kind " + kind);
    }
    if (!report.ok) {
      print_violations(report);
      return static_cast<int>(kFailed);
    }
    std::cout << "ok " << kind << " " << vs.size() << " vertices\n";
    return static_cast<int>(kOk);
  });
}

int cmd_fuzz(const RunConfig& config) {
  return guarded([&] {
    check_dim(config.n, 3, kMaxConstructionDim);
    if (config.trials < 1) throw InputError("--trials must be at least 1");
    if (config.max_faults < 0) throw InputError("--max-faults must be non-negative");
    FuzzConfig fc;
    fc.n = config.n;
    fc.trials = config.trials;
    fc.max_faults = config.max_faults;
    fc.seed = config.seed;
    fc.mode = parse_mode(config.mode);
    fc.kind = config.kind == "path" ? FuzzKind::kPath
              : config.kind == "both" ? FuzzKind::kBoth
                                      : FuzzKind::kCycle;
    const int bound = fc.kind == FuzzKind::kPath ? config.n - 3 : config.n - 2;
    if (config.max_faults > bound) {
      std::cerr << "fault budget exceeded: " << config.max_faults << " > " << bound << "\n";
      return static_cast<int>(kBudgetExceeded);
    }
    const auto t0 = std::chrono::steady_clock::now();
    const FuzzReport report = run_fuzz(fc);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const json doc = fuzz_report_json(fc, report);
    if (config.format == "text") {
      std::ostringstream s;
      for (const auto& [key, value] : doc.items()) {
        if (key == "histogram") {
          for (const auto& [label, count] : value.items()) s << "case " << label << " " << count << "\n";
        } else if (key == "failures") {
          for (const auto& fl : value) s << "failure " << fl.dump() << "\n";
        } else {
          s << key << " " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        }
      }
      emit(config.out, s.str());
    } else {
      emit(config.out, doc.dump(2) + "\n");
    }
    std::cerr << "wall time " << secs << " s\n";
    return static_cast<int>(report.successes == report.trials_run ? kOk : kFailed);
  });
}

int cmd_stats(const RunConfig& config) {
  return guarded([&] {
    const int n = config.n;
    check_dim(n, 1, 5);
    std::uint64_t verts = 0;
    std::uint64_t edges = 0;
    const auto idx = subgraph_indices(n);
    std::map<std::pair<int, int>, std::uint64_t> cross;
    for_each_vertex(n, [&](const SignedPermutation& u) {
      ++verts;
      for (int k = 1; k <= n; ++k) edges += u < prefix_reversal(u, k);
      if (n >= 2) ++cross[{u.last(), out_neighbor(u).last()}];
    });
    const std::uint64_t v_formula = (std::uint64_t{1} << n) * factorial(n);
    const std::uint64_t e_formula = static_cast<std::uint64_t>(n) * factorial(n) *
                                    (std::uint64_t{1} << (n - 1));
    bool matrix_ok = true;
    json rows = json::array();
    for (int i : idx) {
      json row = json::array();
      for (int j : idx) {
        const std::uint64_t got = cross.count({i, j}) ? cross[{i, j}] : 0;
        row.push_back(got);
        if (n < 2 || i == j) continue;
        const std::uint64_t want =
            i == -j ? 0 : factorial(n - 2) * (std::uint64_t{1} << (n - 2));
        matrix_ok = matrix_ok && got == want;
      }
      rows.push_back(row);
    }
    const bool ok = verts == v_formula && edges == e_formula && matrix_ok;
    auto verdict = [](bool b) { return b ? "PASS" : "FAIL"; };
    if (config.format == "text") {
      std::ostringstream s;
      s << "|V| " << verts << " formula " << v_formula << " " << verdict(verts == v_formula) << "\n";
      s << "|E| " << edges << " formula " << e_formula << " " << verdict(edges == e_formula) << "\n";
      if (n >= 2) {
        s << "E_ij";
        for (int j : idx) s << " " << j;
        s << "\n";
        for (std::size_t r = 0; r < idx.size(); ++r) {
          s << idx[r];
          for (const auto& x : rows[r]) s << " " << x.get<std::uint64_t>();
          s << "\n";
        }
        s << "E_ij formula " << verdict(matrix_ok) << "\n";
      }
      emit(config.out, s.str());
    } else {
      json doc{{"n", n},
               {"vertices", {{"count", verts}, {"formula", v_formula}, {"pass", verts == v_formula}}},
               {"edges", {{"count", edges}, {"formula", e_formula}, {"pass", edges == e_formula}}}};
      if (n >= 2) doc["cross_edges"] = {{"indices", idx}, {"matrix", rows}, {"pass", matrix_ok}};
      emit(config.out, doc.dump(2) + "\n");
    }
    return static_cast<int>(ok ? kOk : kFailed);
  });
}

int cmd_tightness(const RunConfig& config) {
  return guarded([&] {
    const int n = config.n;
    check_dim(n, 3, kMaxConstructionDim);
    const auto budget = std::chrono::milliseconds(static_cast<long>(config.time_budget * 1000));
    const auto id = SignedPermutation::identity(n);
    bool ok = true;

    const FaultSet fc = tightness_witness_cycle(n);
    const int deg = residual_degree(fc, id);
    json cyc{{"faults", faults_json(fc)},
             {"size", fc.size()},
             {"valid_at_bound", validate(fc, n - 1).ok},
             {"exceeds_tolerance", !validate(fc, n - 2).within_bound},
             {"residual_degree", deg},
             {"analytic", deg < 2 ? "rejected: vertex of degree < 2" : "inconclusive"}};
    ok = ok && deg < 2;
    if (n <= kMaxSearchDim) {
      const auto r = exhaustive_cycle_search(n, fc, budget);
      cyc["search"] = status_name(r.status);
      ok = ok && r.status == SearchStatus::kProvenAbsent;
    }

    const PathWitness pw = tightness_witness_path(n);
    const int pdeg = residual_degree(pw.faults, id);
    const bool forced = pdeg == 2 && adjacent(id, pw.source) && adjacent(id, pw.target);
    json path{{"faults", faults_json(pw.faults)},
              {"source", vertex_json(pw.source)},
              {"target", vertex_json(pw.target)},
              {"size", pw.faults.size()},
              {"valid_at_bound", validate(pw.faults, n - 2).ok},
              {"exceeds_tolerance", !validate(pw.faults, n - 3).within_bound},
              {"residual_degree", pdeg},
              {"analytic", forced ? "rejected: identity forced between both endpoints"
                                  : "inconclusive"}};
    ok = ok && forced;
    if (n <= kMaxSearchDim) {
      const auto r = exhaustive_path_search(n, pw.faults, pw.source, pw.target, budget);
      path["search"] = status_name(r.status);
      ok = ok && r.status == SearchStatus::kProvenAbsent;
    }
    const json doc{{"n", n}, {"cycle_witness", cyc}, {"path_witness", path}, {"confirmed", ok}};
    emit(config.out, doc.dump(2) + "\n");
    return static_cast<int>(ok ? kOk : kFailed);
  });
}

int run(int argc, char** argv) {
  CLI::App app{"Hamiltonian cycles and paths in burnt pancake graphs with hybrid faults"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "dimension")->required();
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto construction = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--faults", cfg.faults_path, "fault file (JSON)");
    sub->add_option("--mode", cfg.mode, "strict or fallback")
        ->check(CLI::IsMember({"strict", "fallback"}));
  };

  auto* cycle = app.add_subcommand("cycle", "construct a Hamiltonian cycle");
  construction(cycle);

  auto* path = app.add_subcommand("path", "construct a Hamiltonian path");
  construction(path);
  path->add_option("--source", cfg.source, "first endpoint, e.g. 1,-2,3")->required();
  path->add_option("--target", cfg.target, "last endpoint")->required();

  auto* verify = app.add_subcommand("verify", "verify a cycle or path artifact");
  verify->add_option("artifact", cfg.artifact, "artifact file")->required();
  verify->add_option("--faults", cfg.faults_path, "override the artifact's fault set");

  auto* fuzz = app.add_subcommand("fuzz", "random fault sets, construct and verify");
  construction(fuzz);
  fuzz->add_option("--seed", cfg.seed, "64-bit seed");
  fuzz->add_option("--trials", cfg.trials, "number of trials")->required();
  fuzz->add_option("--max-faults", cfg.max_faults, "fault elements per trial");
  fuzz->add_option("--kind", cfg.kind, "cycle, path or both")
      ->check(CLI::IsMember({"cycle", "path", "both"}));

  auto* stats = app.add_subcommand("stats", "vertex, edge and cross-edge counts");
  common(stats);
  stats->get_option("--format")->default_str("json");

  auto* tight = app.add_subcommand("tightness", "fault sets one beyond the tolerance");
  common(tight);
  tight->add_option("--time-budget", cfg.time_budget, "search budget in seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? static_cast<int>(kOk) : static_cast<int>(kInvalidInput);
  }

  if (cycle->parsed()) return cmd_cycle(cfg);
  if (path->parsed()) return cmd_path(cfg);
  if (verify->parsed()) return cmd_verify(cfg);
  if (fuzz->parsed()) return cmd_fuzz(cfg);
  if (stats->parsed()) return cmd_stats(cfg);
  return cmd_tightness(cfg);
}

}  // namespace bpham::cli

#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ovdiam/certify.hpp"
#include "ovdiam/digraph.hpp"
#include "ovdiam/dimacs.hpp"
#include "ovdiam/ov_generate.hpp"
#include "ovdiam/ov_instance.hpp"
#include "ovdiam/reduction.hpp"

namespace ovdiam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitOutsideDomain = 2;  // reduce: input has an orthogonal triple

inline constexpr std::uint64_t kDefaultMaxBytes = std::uint64_t{2} << 30;

enum class Command { Gen, Solve, Reduce, Diameter, Verify, Bench };

// Everything a command needs; filled from flags only.
struct RunConfig {
  Command command = Command::Verify;
  std::string input;          // instance (solve, reduce, verify) or graph (diameter)
  std::string output;         // gen: instance path, empty = standard output
  std::string witness_output; // gen: witness path, empty = "<output>.witness"
  std::string graph_output;   // reduce
  std::string labels_output;  // reduce

  std::size_t n = 4;
  std::size_t ell = 4;
  GenMode mode = GenMode::NoQuadruple;
  double density = 0.85;
  std::uint64_t seed = 1;
  std::size_t max_attempts = 10000;
  std::size_t k = 4;

  bool approx2 = false;                // diameter: folklore estimate instead of exact
  std::optional<std::size_t> pivot;    // diameter --approx2, 1-based
  std::uint64_t max_bytes = kDefaultMaxBytes;

  std::vector<std::size_t> bench_n{2, 3, 4};
  std::vector<std::size_t> bench_ell{4, 6};
  std::size_t repetitions = 1;
};

namespace detail {

inline OvInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file " + path);
  return parse_instance(in);
}

inline std::string fmt_distance(Distance d) {
  return d == kInfinity ? std::string("inf") : std::to_string(d);
}

// 64-bit FNV-1a of the canonical instance text.
inline std::uint64_t instance_hash(const OvInstance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : write_instance(inst)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline void check_memory_cap(const OvInstance& inst, std::uint64_t max_bytes) {
  const auto predicted = SizeFormulas{inst.size(), inst.dimension()}.predicted_bytes();
  if (predicted > max_bytes) {
    throw std::runtime_error("predicted build size " + std::to_string(predicted) +
                             " bytes exceeds the cap of " + std::to_string(max_bytes) +
                             " (raise it with --max-bytes)");
  }
}

inline double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline void print_line(std::ostream& out, const CheckLine& c) {
  out << (c.pass ? "PASS " : "FAIL ") << c.name;
  if (!c.detail.empty()) out << ' ' << c.detail;
  out << '\n';
}

}  // namespace detail

inline int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  GenParams params{cfg.n, cfg.ell, cfg.mode, cfg.density, cfg.seed, cfg.max_attempts};
  const GenResult result = gen_instance(params);

  std::ostringstream meta;
  meta << "seed=" << cfg.seed << " n=" << cfg.n << " len=" << cfg.ell
       << " mode=" << to_string(cfg.mode) << " density=" << cfg.density
       << " attempts=" << result.attempts << " hash=" << std::hex << std::setw(16)
       << std::setfill('0') << detail::instance_hash(result.instance) << std::dec;
  if (result.witness) meta << " witness=" << to_string(*result.witness);

  if (cfg.output.empty()) {
    write_instance(out, result.instance);
    err << meta.str() << '\n';
  } else {
    std::ofstream file(cfg.output);
    if (!file) throw std::runtime_error("cannot write " + cfg.output);
    write_instance(file, result.instance);
    out << meta.str() << '\n';
  }
  if (result.witness) {
    const std::string path =
        !cfg.witness_output.empty()
            ? cfg.witness_output
            : (cfg.output.empty() ? std::string() : cfg.output + ".witness");
    if (!path.empty()) {
      std::ofstream file(path);
      if (!file) throw std::runtime_error("cannot write " + path);
      file << to_string(*result.witness) << '\n';
    }
  }
  return kExitOk;
}

inline int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto inst = detail::load_instance(cfg.input);
  if (auto w = find_orthogonal_tuple(inst, cfg.k)) {
    out << to_string(*w) << '\n';
  } else {
    out << "none\n";
  }
  return kExitOk;
}

inline void print_size_report(std::ostream& out, const SizeReport& r) {
  out << "vertices " << r.vertices << '\n';
  out << "arcs " << r.arcs << '\n';
  for (auto f : kAllFamilies) out << "family " << family_name(f) << ' ' << r.family(f) << '\n';
  for (auto k : {ArcKind::Hub, ArcKind::Regular, ArcKind::IndexSwitching, ArcKind::Skew}) {
    out << "arc-kind " << kind_name(k) << ' ' << r.arcs_of(k) << '\n';
  }
  for (const auto& c : r.checks) {
    out << (c.enforced ? "bound " : "info ") << c.name << ' ' << c.actual
        << (c.equality ? " == " : " <= ") << c.limit << (c.holds() ? " ok" : " VIOLATED") << '\n';
  }
}

inline int cmd_reduce(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto inst = detail::load_instance(cfg.input);
  detail::check_memory_cap(inst, cfg.max_bytes);
  std::optional<ReductionGraph> rg;
  try {
    rg.emplace(build_reduction(inst));
  } catch (const OrthogonalTripleError& e) {
    out << "orthogonal-triple " << to_string(e.witness()) << '\n';
    err << e.what() << '\n';
    return kExitOutsideDomain;
  }
  if (!cfg.graph_output.empty()) {
    std::ofstream file(cfg.graph_output);
    if (!file) throw std::runtime_error("cannot write " + cfg.graph_output);
    write_dimacs(file, rg->graph(),
                 {"4-OV diameter gadget for N=" + std::to_string(inst.size()) +
                  " ell=" + std::to_string(inst.dimension())});
  }
  if (!cfg.labels_output.empty()) {
    std::ofstream file(cfg.labels_output);
    if (!file) throw std::runtime_error("cannot write " + cfg.labels_output);
    write_label_map(file, *rg);
  }
  print_size_report(out, rg->sizes());
  return kExitOk;
}

inline int cmd_diameter(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  std::ifstream in(cfg.input);
  if (!in) throw std::runtime_error("cannot open graph file " + cfg.input);
  const auto g = parse_dimacs(in);
  if (cfg.approx2) {
    const std::size_t pivot = cfg.pivot.value_or(1);
    if (pivot < 1 || pivot > g.vertex_count()) {
      throw std::out_of_range("pivot " + std::to_string(pivot) + " out of range [1, " +
                              std::to_string(g.vertex_count()) + "]");
    }
    const auto e = two_approx_estimate(g, static_cast<VertexId>(pivot - 1));
    out << detail::fmt_distance(e) << '\n';
    if (e == kInfinity) {
      out << "bound none: pivot " << pivot << " does not reach or is not reached by every vertex\n";
    } else {
      out << "bound " << e << " <= diam <= " << 2 * e << " when strongly connected\n";
    }
    return kExitOk;
  }
  const auto d = exact_diameter(g);
  out << detail::fmt_distance(d.value) << '\n';
  out << "argpair " << d.source + 1 << ' ' << d.target + 1 << '\n';
  return kExitOk;
}

// Full constructive verification of one instance. Emits one PASS/FAIL line
// per assertion (plus INFO lines); returns nonzero iff some line is FAIL.
inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto inst = detail::load_instance(cfg.input);
  bool failed = false;
  auto emit = [&](CheckLine line) {
    failed = failed || !line.pass;
    detail::print_line(out, line);
  };

  if (auto triple = find_orthogonal_tuple(inst, 3)) {
    emit({"precondition", false, "orthogonal triple (" + to_string(*triple) + ")"});
    return kExitFailure;
  }
  emit({"precondition", true, "no orthogonal triple"});
  detail::check_memory_cap(inst, cfg.max_bytes);

  const auto rg = build_reduction(inst);
  const auto& g = rg.graph();
  emit({"build", true,
        "vertices=" + std::to_string(g.vertex_count()) + " arcs=" + std::to_string(g.arc_count())});

  for (const auto& c : rg.sizes().checks) {
    const std::string detail = "actual=" + std::to_string(c.actual) +
                               (c.equality ? " expected=" : " limit=") + std::to_string(c.limit);
    if (c.enforced) {
      emit({"size-" + c.name, c.holds(), detail});
    } else {
      out << "INFO size-" << c.name << ' ' << detail << (c.holds() ? " holds" : " exceeded")
          << '\n';
    }
  }

  const auto problems = arc_audit(rg);
  emit({"arc-audit", problems.empty(),
        problems.empty() ? "arcs=" + std::to_string(g.arc_count()) : problems.front()});

  for (auto line : hub_distance_audit(rg).checks) {
    line.name = "hub-audit-" + line.name;
    emit(std::move(line));
  }

  std::optional<GapVerdict> verdict;
  try {
    verdict = gap_verdict(rg);
    emit({"gap-verdict", true,
          std::string(verdict_name(verdict->verdict)) +
              " diameter=" + detail::fmt_distance(verdict->diameter.value) +
              " argpair=" + to_string(verdict->from) + "->" + to_string(verdict->to)});
    emit({"oracle-agreement", true,
          verdict->quadruple ? "quadruple=" + to_string(*verdict->quadruple) : "quadruple=none"});
  } catch (const GapViolation& e) {
    emit({"gap-verdict", false, e.what()});
  }

  if (verdict) {
    const Distance diam = verdict->diameter.value;
    const Distance est = two_approx_estimate(g, ReductionGraph::kU);
    emit({"two-approx", est <= diam && 2 * est >= diam,
          "estimate=" + detail::fmt_distance(est) + " diameter=" + detail::fmt_distance(diam) +
              " pivot=U"});
  }

  const auto suite = certificate_suite(rg, cfg.seed);
  for (const auto& c : suite.classes) {
    emit({"certificates-" + std::string(class_name(c.cls)), c.passed(suite.quadruple_instance),
          std::string(suite.full_enumeration ? "full" : "sampled") +
              " pairs=" + std::to_string(c.pairs) + " certified=" + std::to_string(c.certified) +
              " collapsed=" + std::to_string(c.collapsed) +
              " short=" + std::to_string(c.short_weight) +
              " blocked=" + std::to_string(c.blocked) +
              " max-weight=" + std::to_string(c.max_weight)});
  }
  emit({"near-pairs", suite.near_violations == 0,
        "pairs=" + std::to_string(suite.near_pairs) +
            " max=" + detail::fmt_distance(suite.max_near_distance) + " bound=4"});

  const auto quads = all_orthogonal_tuples(inst, 4);
  for (const auto& q : quads) {
    const auto s = soundness_witness_check(rg, q);
    emit({"soundness-(" + to_string(q) + ")", s.pass && s.within_cap,
          to_string(s.from) + "->" + to_string(s.to) +
              " distance=" + detail::fmt_distance(s.distance) + " want=[7,8]"});
  }
  if (quads.empty()) out << "INFO soundness no orthogonal quadruple\n";
  if (verdict) out << "VERDICT " << verdict_name(verdict->verdict) << '\n';
  return failed ? kExitFailure : kExitOk;
}

// Wall-clock table over an (N, ell) grid; the instance for each cell is
// generated from cfg.seed so reruns see identical instances.
inline int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const std::size_t reps = std::max<std::size_t>(1, cfg.repetitions);
  out << "N\tell\tmode\thash\tvertices\tarcs\tbuild_ms\texact_ms\tapprox2_ms\tdiameter\testimate\n";
  for (auto n : cfg.bench_n) {
    for (auto ell : cfg.bench_ell) {
      const auto gen = gen_instance({n, ell, cfg.mode, cfg.density, cfg.seed, cfg.max_attempts});
      detail::check_memory_cap(gen.instance, cfg.max_bytes);
      double build_ms = 0;
      double exact_ms = 0;
      double approx_ms = 0;
      std::optional<ReductionGraph> rg;
      DiameterResult diam;
      Distance est = 0;
      for (std::size_t r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        rg.emplace(build_reduction(gen.instance));
        build_ms += detail::millis_since(t0);
        t0 = std::chrono::steady_clock::now();
        diam = exact_diameter(rg->graph());
        exact_ms += detail::millis_since(t0);
        t0 = std::chrono::steady_clock::now();
        est = two_approx_estimate(rg->graph());
        approx_ms += detail::millis_since(t0);
      }
      out << n << '\t' << ell << '\t' << to_string(cfg.mode) << '\t' << std::hex << std::setw(16)
          << std::setfill('0') << detail::instance_hash(gen.instance) << std::dec
          << std::setfill(' ') << '\t' << rg->vertex_count() << '\t' << rg->graph().arc_count()
          << std::fixed << std::setprecision(3) << '\t' << build_ms / reps << '\t'
          << exact_ms / reps << '\t' << approx_ms / reps << std::defaultfloat << '\t'
          << detail::fmt_distance(diam.value) << '\t' << detail::fmt_distance(est) << '\n';
    }
  }
  return kExitOk;
}

// Dispatches one command. Library exceptions become a message on `err` and
// exit status 1.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Gen: return cmd_gen(cfg, out, err);
      case Command::Solve: return cmd_solve(cfg, out, err);
      case Command::Reduce: return cmd_reduce(cfg, out, err);
      case Command::Diameter: return cmd_diameter(cfg, out, err);
      case Command::Verify: return cmd_verify(cfg, out, err);
      case Command::Bench: return cmd_bench(cfg, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitFailure;
}

}  // namespace ovdiam::cli

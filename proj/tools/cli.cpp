#include "cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"

#include "commgraph/commuting_graph.hpp"
#include "commgraph/error.hpp"
#include "commgraph/ingest.hpp"
#include "commgraph/report.hpp"
#include "commgraph/theorem_checker.hpp"

namespace commgraph::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupSource {
  std::string metacyclic;
  std::size_t dihedral = 0;
  std::string example2;
  std::string cayley;
  std::string perms;
};

std::vector<std::size_t> parse_list(const std::string& flag, const std::string& text, std::size_t count) {
  std::vector<std::size_t> values;
  std::string_view rest(text);
  while (true) {
    const auto comma = rest.find(',');
    const auto part = rest.substr(0, comma);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw UsageError(flag + ": '" + text + "' is not a comma-separated list of base-10 integers");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (values.size() != count) {
    throw UsageError(flag + ": expected " + std::to_string(count) + " values, got " + std::to_string(values.size()));
  }
  return values;
}

// Rethrows library errors with the flag or file they came from.
template <typename F>
FiniteGroup with_context(const std::string& where, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    throw UsageError(where + ": " + e.what());
  }
}

FiniteGroup load_group(const GroupSource& src) {
  const int chosen = !src.metacyclic.empty() + (src.dihedral != 0) + !src.example2.empty() + !src.cayley.empty() +
                     !src.perms.empty();
  if (chosen != 1) {
    throw UsageError("exactly one of --metacyclic, --dihedral, --example2, --cayley, --perms is required");
  }
  if (!src.metacyclic.empty()) {
    const auto v = parse_list("--metacyclic", src.metacyclic, 4);
    return with_context("--metacyclic", [&] { return build_metacyclic({v[0], v[1], v[2], v[3]}); });
  }
  if (src.dihedral != 0) return with_context("--dihedral", [&] { return build_dihedral(src.dihedral); });
  if (!src.example2.empty()) {
    const auto v = parse_list("--example2", src.example2, 2);
    return with_context("--example2", [&] { return build_example2(v[0], v[1]); });
  }
  if (!src.cayley.empty()) return with_context(src.cayley, [&] { return read_cayley_file(src.cayley); });
  return with_context(src.perms, [&] { return close_permutations(read_perms_file(src.perms)).group; });
}

void add_source_options(CLI::App* cmd, GroupSource& src) {
  cmd->add_option("--metacyclic", src.metacyclic, "m,n,s,t for <a, x | a^m = x^s, x^n = 1, x^a = x^t>");
  cmd->add_option("--dihedral", src.dihedral, "k for the dihedral group of order 4k");
  cmd->add_option("--example2", src.example2, "n,m for <a, x | a^m = x^n = 1, x^a = x^2>");
  cmd->add_option("--cayley", src.cayley, "commgraph-cayley table file");
  cmd->add_option("--perms", src.perms, "commgraph-perms generator file");
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("--output: cannot open '" + path + "' for writing");
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int verdict_exit(const AnalysisReport& report) { return report.all_hold_or_skipped() ? kExitOk : kExitClaimFailed; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commuting graphs of cyclic-by-abelian groups", "commgraph"};
  app.require_subcommand(1);

  GroupSource src;
  CheckOptions options;
  std::string format = "text";
  std::string output;
  std::size_t max_order = 0;
  bool s_zero_only = false;
  std::size_t threads = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--output", output, "write to this file instead of stdout");
  };
  auto add_checks = [&](CLI::App* cmd) {
    cmd->add_option("--max-a-gens", options.max_a_gens, "generator bound for the abelian factor search")
        ->check(CLI::PositiveNumber);
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "full report: invariants, graph, verdicts");
  auto* verify_cmd = app.add_subcommand("verify", "verdicts only");
  auto* sweep_cmd = app.add_subcommand("sweep", "check every metacyclic presentation up to an order");
  auto* dot_cmd = app.add_subcommand("export-dot", "write the commuting graph as DOT");
  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "write the Cayley table and read it back");
  for (auto* cmd : {analyze_cmd, verify_cmd, dot_cmd, roundtrip_cmd}) add_source_options(cmd, src);
  for (auto* cmd : {analyze_cmd, verify_cmd, sweep_cmd}) {
    add_common(cmd);
    add_checks(cmd);
  }
  dot_cmd->add_option("--output", output, "write to this file instead of stdout");
  roundtrip_cmd->add_option("--output", output, "where to write the table (default: a temporary file)");
  sweep_cmd->add_option("--max-order", max_order, "largest m*n to enumerate")->required();
  sweep_cmd->add_flag("--s-zero-only", s_zero_only, "only split presentations (s = 0)");
  sweep_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*sweep_cmd) {
      if (max_order < 6) throw UsageError("--max-order: must be at least 6");
      const auto summary = sweep_metacyclic(max_order, s_zero_only, options, threads);
      Output o(output, out);
      if (format == "json") {
        *o << to_json(summary).dump(2) << '\n';
      } else {
        *o << to_text(summary);
      }
      return summary.failures.empty() ? kExitOk : kExitClaimFailed;
    }

    const FiniteGroup G = load_group(src);

    if (*roundtrip_cmd) {
      std::filesystem::path path = output;
      if (output.empty()) {
        path = std::filesystem::temp_directory_path() / ("commgraph-roundtrip-" + std::to_string(::getpid()) + ".txt");
      }
      write_cayley_file(G, path);
      const FiniteGroup back = with_context(path.string(), [&] { return read_cayley_file(path); });
      if (output.empty()) std::filesystem::remove(path);
      const bool same = std::ranges::equal(G.table(), back.table());
      out << "roundtrip " << (same ? "ok" : "MISMATCH") << ": order " << G.order() << '\n';
      return same ? kExitOk : kExitClaimFailed;
    }

    if (*dot_cmd) {
      std::optional<CommutingGraph> gamma;
      try {
        gamma = CommutingGraph::build(G);
      } catch (const Error& e) {
        throw UsageError(std::string("export-dot: ") + e.what());
      }
      Output o(output, out);
      *o << export_dot(*gamma, &G);
      return kExitOk;
    }

    AnalysisReport report;
    try {
      report = analyze(G, options);
    } catch (const Error& e) {
      throw UsageError(std::string("analyze: ") + e.what());
    }
    Output o(output, out);
    if (*verify_cmd) {
      if (format == "json") {
        *o << verdicts_json(report).dump(2) << '\n';
      } else {
        *o << verdicts_text(report);
      }
    } else if (format == "json") {
      *o << to_json(report).dump(2) << '\n';
    } else {
      *o << to_text(report);
    }
    return verdict_exit(report);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace commgraph::cli

// coauthor-net: command-line front end for the coauthorship analytics pipeline.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coauthor/centrality.hpp"
#include "coauthor/error.hpp"
#include "coauthor/io.hpp"
#include "coauthor/pipeline.hpp"

namespace {

using coauthor::RunConfig;

constexpr const char* kConfigEnv = "COAUTHOR_NET_CONFIG";

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kNotConverged = 3 };

struct CliState {
  RunConfig config;
  std::string delimiter = "tab";
  std::string closeness_mode = "component_scaled";
  std::string normalization = "none";
  std::string field;
  std::string edge_list;
  std::string config_file;
};

void add_run_options(CLI::App& cmd, CliState& s) {
  auto& c = s.config;
  cmd.add_option("--config", s.config_file,
                 std::string("key = value config file (default: $") + kConfigEnv + ")");
  cmd.add_option("-i,--input", c.inputs, "bibliographic record file(s)");
  cmd.add_option("--edge-list", s.edge_list, "pre-projected graph (id<TAB>id[<TAB>weight])");
  cmd.add_option("-o,--out", c.out_dir, "stage output directory")->capture_default_str();
  cmd.add_option("--delimiter", s.delimiter, "record delimiter: tab, comma, or one character")
      ->capture_default_str();
  cmd.add_option("--col-paper-id", c.schema.paper_id)->capture_default_str();
  cmd.add_option("--col-author-id", c.schema.author_id)->capture_default_str();
  cmd.add_option("--col-author-name", c.schema.author_name)->capture_default_str();
  cmd.add_option("--col-affiliation-id", c.schema.affiliation_id)->capture_default_str();
  cmd.add_option("--col-affiliation-name", c.schema.affiliation_name)->capture_default_str();
  cmd.add_option("--col-year", c.schema.year)->capture_default_str();
  cmd.add_option("--col-field-id", c.schema.field_id)->capture_default_str();
  cmd.add_option("--year-min", c.year_min)->capture_default_str();
  cmd.add_option("--year-max", c.year_max)->capture_default_str();
  cmd.add_option("--field", s.field, "keep only records of this field id");
  cmd.add_option("--author-cap", c.author_cap,
                 "papers with more distinct authors are not clique-expanded (0: no cap)")
      ->capture_default_str();
  cmd.add_option("--closeness-mode", s.closeness_mode)
      ->check(CLI::IsMember({"component_scaled", "harmonic"}))
      ->capture_default_str();
  cmd.add_option("--betweenness-normalization", s.normalization)
      ->check(CLI::IsMember({"none", "graph", "component"}))
      ->capture_default_str();
  cmd.add_option("--damping", c.damping, "PageRank damping factor")->capture_default_str();
  cmd.add_option("--tol", c.tolerance, "PageRank L1 convergence tolerance")->capture_default_str();
  cmd.add_option("--max-iter", c.max_iterations, "PageRank iteration limit")->capture_default_str();
  cmd.add_option("--seed", c.seed, "community detection and sampling seed")->capture_default_str();
  cmd.add_option("--resolution", c.resolution, "modularity resolution")->capture_default_str();
  cmd.add_option("-k,--top-k", c.top_k, "rows per rank table and ego-network seeds")
      ->capture_default_str();
  cmd.add_option("--exact-threshold", c.exact_threshold,
                 "largest graph for exact diameter / path length")
      ->capture_default_str();
  cmd.add_option("--sample-sources", c.sample_sources, "BFS sources above the threshold")
      ->capture_default_str();
  cmd.add_flag("--clustering-exclude-deg1", c.clustering_exclude_deg1,
               "leave degree < 2 nodes out of the average clustering coefficient");
  cmd.add_option("-t,--threads", c.threads, "worker threads (0: all cores)")->capture_default_str();
}

// Finds the config path from argv or the environment before CLI11 runs.
std::string find_config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].starts_with("--config=")) return args[i].substr(9);
  }
  if (const char* env = std::getenv(kConfigEnv)) return env;
  return {};
}

bool given_on_command_line(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  for (const auto& a : args) {
    if (a == flag || a.starts_with(flag + "=")) return true;
  }
  return false;
}

// Config lines become `--key=value` arguments placed before the user's, and
// keys the user passed explicitly are dropped, so flags always win.
std::vector<std::string> config_arguments(const std::string& path,
                                          const std::vector<std::string>& user_args) {
  std::ifstream in(path);
  if (!in) throw coauthor::ConfigError("cannot read config file '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto trimmed = CLI::detail::trim_copy(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw coauthor::ConfigError(path + ":" + std::to_string(line_no) + ": expected key = value");
    }
    const auto key = CLI::detail::trim_copy(trimmed.substr(0, eq));
    const auto value = CLI::detail::trim_copy(trimmed.substr(eq + 1));
    if (key == "config" || given_on_command_line(user_args, key)) continue;
    out.push_back("--" + key + "=" + value);
  }
  return out;
}

char parse_delimiter(const std::string& text) {
  if (text == "tab" || text == "\\t") return '\t';
  if (text == "comma") return ',';
  if (text.size() == 1) return text[0];
  throw coauthor::ConfigError("delimiter must be 'tab', 'comma' or a single character");
}

int run(int argc, char** argv) {
  CLI::App app{"Coauthorship network analytics: ingest, centrality, communities, statistics, "
               "rank tables and ego networks.", "coauthor-net"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(coauthor::kToolVersion));

  CliState state;
  struct Command {
    const char* name;
    const char* help;
    void (*fn)(const RunConfig&);
  };
  const Command commands[] = {
      {"ingest", "parse records, filter, project to graph.tsv + affiliation index",
       coauthor::cmd_ingest},
      {"stats", "network summary (summary.json, summary.csv)", coauthor::cmd_stats},
      {"centrality", "degree, betweenness, closeness and PageRank score files",
       coauthor::cmd_centrality},
      {"communities", "Louvain community detection (communities.csv/json)",
       coauthor::cmd_communities},
      {"rank", "top-k rank tables for every measure", coauthor::cmd_rank},
      {"ego", "top-k ego networks, their summaries and affiliation reports", coauthor::cmd_ego},
      {"pipeline", "all stages in order", coauthor::cmd_pipeline},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_run_options(*sub, state);
    subs.emplace_back(sub, &c);
  }

  std::vector<std::string> user_args(argv + 1, argv + argc);
  std::vector<std::string> args = user_args;
  try {
    if (const auto path = find_config_path(user_args); !path.empty() && !user_args.empty()) {
      // user_args[0] is the subcommand; config arguments go right after it.
      auto extra = config_arguments(path, user_args);
      args.insert(args.begin() + 1, extra.begin(), extra.end());
    }
  } catch (const coauthor::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    auto& c = state.config;
    c.schema.delimiter = parse_delimiter(state.delimiter);
    c.closeness_mode = coauthor::parse_closeness_mode(state.closeness_mode);
    c.betweenness_normalization = coauthor::parse_betweenness_normalization(state.normalization);
    if (!state.field.empty()) c.field_id = state.field;
    if (!state.edge_list.empty()) c.edge_list = state.edge_list;
    for (const auto& [sub, command] : subs) {
      if (sub->parsed()) command->fn(c);
    }
  } catch (const coauthor::PageRankNotConverged& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotConverged;
  } catch (const coauthor::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const coauthor::ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const coauthor::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }

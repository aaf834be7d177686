#include "coauthor/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>

#include "coauthor/community.hpp"
#include "coauthor/error.hpp"
#include "coauthor/io.hpp"
#include "coauthor/report.hpp"
#include "coauthor/serialize.hpp"
#include "coauthor/stats.hpp"

namespace coauthor {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kGraphFile = "graph.tsv";
constexpr const char* kAuthorsFile = "authors.tsv";
constexpr const char* kAffiliationsFile = "affiliations.tsv";
constexpr const char* kCommunitiesFile = "communities.csv";
constexpr const char* kManifestFile = "manifest.json";

void log(std::string_view stage, const std::string& message) {
  std::clog << "[" << stage << "] " << message << '\n';
}

/// Bookkeeping for one stage: input digests, atomic outputs, timing, and the
/// manifest entry written on finish().
class Stage {
 public:
  Stage(const RunConfig& config, std::string name)
      : config_(config), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {
    validate(config_);
    std::error_code ec;
    fs::create_directories(config_.out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + config_.out_dir.string() + "'");
  }

  fs::path path(std::string_view file) const { return config_.out_dir / file; }

  // Checks existence and records the digest; throws IoError naming a missing file.
  // An empty producer marks a file supplied by the user.
  const fs::path& require(const fs::path& input, std::string_view producer = {}) {
    if (!fs::exists(input)) {
      if (producer.empty()) throw IoError("input file '" + input.string() + "' does not exist");
      throw IoError("missing input '" + input.string() + "' (produced by the " +
                    std::string(producer) + " stage)");
    }
    inputs_.push_back({{"path", input.string()}, {"sha256", io::sha256_file(input)}});
    return input;
  }

  template <typename Writer>
  void write(std::string_view file, Writer&& writer) {
    io::write_file_atomic(path(file), writer);
    outputs_.emplace_back(file);
  }

  void write_json(std::string_view file, const json& doc) {
    write(file, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
  }

  void finish() {
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
    const fs::path manifest_path = path(kManifestFile);
    json manifest;
    if (fs::exists(manifest_path)) {
      manifest = json::parse(io::read_file(manifest_path), nullptr, false);
      if (manifest.is_discarded() || !manifest.is_object()) manifest = json::object();
    }
    manifest["tool"] = "coauthor-net";
    manifest["version"] = std::string(kToolVersion);
    manifest["stages"][name_] = {{"config", config_json(config_)},
                                 {"inputs", inputs_},
                                 {"outputs", outputs_},
                                 {"wall_time_seconds", elapsed.count()}};
    io::write_file_atomic(manifest_path,
                          [&](std::ostream& out) { out << manifest.dump(2) << '\n'; });
    log(name_, "done in " + std::to_string(elapsed.count()) + " s");
  }

  const RunConfig& config() const { return config_; }

 private:
  const RunConfig& config_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
  json inputs_ = json::array();
  std::vector<std::string> outputs_;
};

CoauthorGraph load_graph(Stage& stage) {
  const auto& config = stage.config();
  const fs::path source = config.edge_list ? *config.edge_list : stage.path(kGraphFile);
  return load_edge_list(config.edge_list ? stage.require(source) : stage.require(source, "ingest"));
}

template <typename Reader>
auto read_with(const fs::path& path, Reader&& reader) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return reader(in);
}

std::optional<AuthorNames> load_names(Stage& stage) {
  const auto file = stage.path(kAuthorsFile);
  if (!fs::exists(file)) return std::nullopt;
  return read_with(stage.require(file, "ingest"), [](std::istream& in) { return read_author_names(in); });
}

CentralitySuite load_suite(Stage& stage, const CoauthorGraph& g) {
  CentralitySuite suite;
  for (Measure m : kAllMeasures) {
    const auto file = stage.require(stage.path(std::string(to_string(m)) + ".csv"), "centrality");
    auto v = read_with(file, [&](std::istream& in) { return read_scores_csv(in, g, m); });
    switch (m) {
      case Measure::degree: suite.degree = std::move(v); break;
      case Measure::betweenness: suite.betweenness = std::move(v); break;
      case Measure::closeness: suite.closeness = std::move(v); break;
      case Measure::pagerank: suite.pagerank = std::move(v); break;
    }
  }
  return suite;
}

SummaryOptions summary_options(const RunConfig& c) {
  SummaryOptions o;
  o.exact_threshold = c.exact_threshold;
  o.sample_sources = c.sample_sources;
  o.seed = c.seed;
  o.clustering_exclude_low_degree = c.clustering_exclude_deg1;
  o.threads = c.threads;
  return o;
}

json summary_document(const NetworkSummary& s, const RunConfig& c) {
  json doc = summary_json(s);
  doc["settings"] = {{"exact_threshold", c.exact_threshold},
                     {"sample_sources", c.sample_sources},
                     {"seed", c.seed},
                     {"clustering_exclude_deg1", c.clustering_exclude_deg1}};
  return doc;
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.year_min > c.year_max) throw ConfigError("--year-min must not exceed --year-max");
  if (!(c.damping > 0.0 && c.damping < 1.0)) throw ConfigError("--damping must lie in (0, 1)");
  if (!(c.tolerance > 0.0)) throw ConfigError("--tol must be > 0");
  if (c.max_iterations == 0) throw ConfigError("--max-iter must be >= 1");
  if (!(c.resolution > 0.0)) throw ConfigError("--resolution must be > 0");
  if (c.top_k == 0) throw ConfigError("--top-k must be >= 1");
  if (c.sample_sources == 0) throw ConfigError("--sample-sources must be >= 1");
  if (c.out_dir.empty()) throw ConfigError("--out must not be empty");
}

json config_json(const RunConfig& c) {
  json inputs = json::array();
  for (const auto& p : c.inputs) inputs.push_back(p.string());
  return {{"inputs", inputs},
          {"edge_list", c.edge_list ? json(c.edge_list->string()) : json(nullptr)},
          {"out_dir", c.out_dir.string()},
          {"schema",
           {{"paper_id", c.schema.paper_id},
            {"author_id", c.schema.author_id},
            {"author_name", c.schema.author_name},
            {"affiliation_id", c.schema.affiliation_id},
            {"affiliation_name", c.schema.affiliation_name},
            {"year", c.schema.year},
            {"field_id", c.schema.field_id},
            {"delimiter", std::string(1, c.schema.delimiter)}}},
          {"year_min", c.year_min},
          {"year_max", c.year_max},
          {"field_id", c.field_id ? json(*c.field_id) : json(nullptr)},
          {"author_cap", c.author_cap},
          {"closeness_mode", std::string(to_string(c.closeness_mode))},
          {"betweenness_normalization", std::string(to_string(c.betweenness_normalization))},
          {"damping", c.damping},
          {"tolerance", c.tolerance},
          {"max_iterations", c.max_iterations},
          {"seed", c.seed},
          {"resolution", c.resolution},
          {"top_k", c.top_k},
          {"exact_threshold", c.exact_threshold},
          {"sample_sources", c.sample_sources},
          {"clustering_exclude_deg1", c.clustering_exclude_deg1},
          {"threads", c.threads}};
}

void cmd_ingest(const RunConfig& config) {
  Stage stage(config, "ingest");
  if (config.inputs.empty()) {
    if (!config.edge_list) throw ConfigError("ingest needs --input record files or --edge-list");
    const auto g = load_graph(stage);
    stage.write(kGraphFile, [&](std::ostream& out) { write_edge_list(out, g); });
    stage.write_json("ingest.json", {{"source", "edge_list"},
                                     {"node_count", g.node_count()},
                                     {"edge_count", g.edge_count()}});
    stage.finish();
    return;
  }

  std::vector<PaperRecord> records;
  json files = json::array();
  std::size_t total_rows = 0;
  for (const auto& input : config.inputs) {
    auto parsed = parse_records_file(stage.require(input), config.schema);
    total_rows += parsed.records.size();
    files.push_back({{"file", input.filename().string()},
                     {"records", parsed.records.size()},
                     {"skipped_rows", parsed.skipped_rows}});
    if (parsed.skipped_rows > 0) {
      log("ingest", input.string() + ": skipped " + std::to_string(parsed.skipped_rows) +
                        " malformed rows");
    }
    records.insert(records.end(), std::make_move_iterator(parsed.records.begin()),
                   std::make_move_iterator(parsed.records.end()));
  }
  const auto kept = filter_records(records, config.year_min, config.year_max, config.field_id);
  auto projection = project_coauthorship(kept, config.author_cap);
  const auto index = build_affiliation_index(kept);
  const auto names = author_names(kept);

  json capped = json::array();
  for (const auto& c : projection.capped_papers) {
    capped.push_back({{"paper_id", c.paper_id}, {"author_count", c.author_count}});
    log("ingest", "paper " + c.paper_id + " has " + std::to_string(c.author_count) +
                      " authors, above the cap; not expanded");
  }
  std::set<std::string> papers;
  for (const auto& r : kept) papers.insert(r.paper_id);

  const auto& g = projection.graph;
  stage.write(kGraphFile, [&](std::ostream& out) { write_edge_list(out, g); });
  stage.write(kAuthorsFile, [&](std::ostream& out) { write_author_names(out, names); });
  stage.write(kAffiliationsFile, [&](std::ostream& out) { write_affiliation_index(out, index); });
  stage.write_json("ingest.json", {{"source", "records"},
                                   {"files", files},
                                   {"records_parsed", total_rows},
                                   {"records_kept", kept.size()},
                                   {"papers", papers.size()},
                                   {"author_cap", config.author_cap},
                                   {"capped_papers", capped},
                                   {"node_count", g.node_count()},
                                   {"edge_count", g.edge_count()},
                                   {"total_edge_weight", g.total_weight()}});
  log("ingest", std::to_string(g.node_count()) + " authors, " + std::to_string(g.edge_count()) +
                    " coauthor edges");
  stage.finish();
}

void cmd_centrality(const RunConfig& config) {
  Stage stage(config, "centrality");
  const auto g = load_graph(stage);
  CentralityOptions options;
  options.betweenness_normalization = config.betweenness_normalization;
  options.closeness_mode = config.closeness_mode;
  options.pagerank.damping = config.damping;
  options.pagerank.tolerance = config.tolerance;
  options.pagerank.max_iterations = config.max_iterations;
  options.threads = config.threads;
  const auto suite = compute_all(g, options);
  for (Measure m : kAllMeasures) {
    const auto& v = suite.get(m);
    const std::string base(to_string(m));
    stage.write(base + ".csv", [&](std::ostream& out) { write_scores_csv(out, g, v); });
    stage.write_json(base + ".json", scores_json(g, v));
  }
  stage.finish();
}

void cmd_communities(const RunConfig& config) {
  Stage stage(config, "communities");
  const auto g = load_graph(stage);
  const auto p = detect_communities(g, {config.resolution, config.seed});
  stage.write(kCommunitiesFile, [&](std::ostream& out) { write_partition_csv(out, g, p); });
  stage.write_json("communities.json", partition_json(p));
  log("communities", std::to_string(p.community_count) + " communities, Q = " +
                         io::format_double(p.modularity));
  stage.finish();
}

void cmd_stats(const RunConfig& config) {
  Stage stage(config, "stats");
  const auto g = load_graph(stage);
  std::optional<Partition> partition;
  if (const auto file = stage.path(kCommunitiesFile); fs::exists(file)) {
    partition = read_with(stage.require(file, "communities"),
                          [&](std::istream& in) { return read_partition_csv(in, g); });
  }
  const auto s = summarize(g, partition ? &*partition : nullptr, summary_options(config));
  stage.write_json("summary.json", summary_document(s, config));
  stage.write("summary.csv", [&](std::ostream& out) { write_summary_csv(out, s); });
  stage.finish();
}

void cmd_rank(const RunConfig& config) {
  Stage stage(config, "rank");
  const auto g = load_graph(stage);
  const auto suite = load_suite(stage, g);
  const auto names = load_names(stage);
  for (Measure m : kAllMeasures) {
    const auto table = rank_table(g, suite, m, config.top_k, names ? &*names : nullptr);
    const std::string base = "rank_" + std::string(to_string(m));
    stage.write(base + ".csv", [&](std::ostream& out) { write_rank_table_csv(out, table); });
    stage.write_json(base + ".json", rank_table_json(table));
  }
  stage.finish();
}

void cmd_ego(const RunConfig& config) {
  Stage stage(config, "ego");
  const auto g = load_graph(stage);
  const auto suite = load_suite(stage, g);
  const auto names = load_names(stage);
  std::optional<AffiliationIndex> index;
  if (const auto file = stage.path(kAffiliationsFile); fs::exists(file)) {
    index = read_with(stage.require(file, "ingest"),
                      [](std::istream& in) { return read_affiliation_index(in); });
  }

  for (Measure m : kAllMeasures) {
    const auto ego = ego_network(g, suite.get(m), config.top_k);
    const auto partition = detect_communities(ego.graph, {config.resolution, config.seed});
    const auto summary = summarize(ego.graph, &partition, summary_options(config));

    GraphAnnotations notes;
    for (Measure col : kAllMeasures) {
      std::vector<double> values;
      values.reserve(ego.members.size());
      for (NodeId v : ego.members) values.push_back(suite.get(col).scores[v]);
      notes.scores.emplace_back(std::string(to_string(col)), std::move(values));
    }
    notes.community = partition.community_of;
    notes.seed = ego.is_seed;
    notes.names = names ? &*names : nullptr;

    const std::string base = "ego_" + std::string(to_string(m));
    for (auto format : {GraphFormat::graphml, GraphFormat::dot, GraphFormat::edge_csv}) {
      const std::string ext = format == GraphFormat::graphml ? ".graphml"
                              : format == GraphFormat::dot   ? ".dot"
                                                             : ".csv";
      stage.write(base + ext,
                  [&](std::ostream& out) { export_graph(out, ego.graph, format, notes); });
    }
    json seeds = json::array();
    for (NodeId s : ego.seeds) seeds.push_back(g.label(s));
    json doc = summary_document(summary, config);
    doc["measure"] = std::string(to_string(m));
    doc["top_k"] = config.top_k;
    doc["seeds"] = seeds;
    doc["community_detection"] = partition_json(partition);
    stage.write_json(base + "_summary.json", doc);

    if (index) {
      std::vector<std::string> authors;
      for (NodeId s : ego.seeds) authors.push_back(g.label(s));
      const auto report = affiliation_report(*index, authors);
      stage.write(base + "_affiliations.csv",
                  [&](std::ostream& out) { write_affiliation_report_csv(out, report); });
    }
  }
  stage.finish();
}

void cmd_pipeline(const RunConfig& config) {
  if (!config.inputs.empty() || config.edge_list) cmd_ingest(config);
  // Later stages read the normalized graph written by ingest.
  RunConfig downstream = config;
  if (!config.inputs.empty() || config.edge_list) downstream.edge_list.reset();
  cmd_centrality(downstream);
  cmd_communities(downstream);
  cmd_stats(downstream);
  cmd_rank(downstream);
  cmd_ego(downstream);
}

}  // namespace coauthor

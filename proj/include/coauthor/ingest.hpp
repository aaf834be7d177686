#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coauthor/graph.hpp"

namespace coauthor {

// One (paper, author, affiliation) row of a bibliographic dump.
struct PaperRecord {
  std::string paper_id;
  std::string author_id;
  std::string author_name;
  std::string affiliation_id;  // may be empty
  std::string affiliation_name;
  int year = 0;
  std::string field_id;

  friend bool operator==(const PaperRecord&, const PaperRecord&) = default;
};

// Header names for the seven logical columns.
struct RecordSchema {
  std::string paper_id = "paper_id";
  std::string author_id = "author_id";
  std::string author_name = "author_name";
  std::string affiliation_id = "affiliation_id";
  std::string affiliation_name = "affiliation_name";
  std::string year = "year";
  std::string field_id = "field_id";
  char delimiter = '\t';
};

struct ParseResult {
  std::vector<PaperRecord> records;
  std::size_t skipped_rows = 0;
  // 1-based line numbers of the skipped rows.
  std::vector<std::size_t> skipped_lines;
};

inline constexpr int kMinYear = 1000;
inline constexpr int kMaxYear = 3000;

/// Reads delimiter-separated records with a header row.
///
/// A data row is skipped (and counted) when it has too few columns, an empty
/// paper or author id, or a year that is not an integer in [1000, 3000].
/// Throws ConfigError when a mapped column is missing from the header and
/// ParseError when there is no header at all.
ParseResult parse_records(std::istream& in, const RecordSchema& schema);
// Throws IoError if the file cannot be opened.
ParseResult parse_records_file(const std::filesystem::path& path, const RecordSchema& schema);

// Keeps year_min <= year <= year_max and, when given, field_id matches. Order preserved.
std::vector<PaperRecord> filter_records(std::span<const PaperRecord> records, int year_min,
                                        int year_max,
                                        const std::optional<std::string>& field_id = std::nullopt);

inline constexpr std::size_t kDefaultAuthorCap = 200;

struct CappedPaper {
  std::string paper_id;
  std::size_t author_count;
};

struct Projection {
  CoauthorGraph graph;
  // Papers whose author list exceeded the cap and were not clique-expanded.
  std::vector<CappedPaper> capped_papers;
};

/// Clique-expands every paper's distinct author set into the coauthorship graph.
///
/// Nodes are numbered by ascending author id and papers are expanded in
/// ascending paper id order, so the result does not depend on record order.
/// Papers with more than `author_cap` distinct authors contribute their
/// authors as nodes but no edges; `author_cap == 0` disables the cap.
Projection project_coauthorship(std::span<const PaperRecord> records,
                                std::size_t author_cap = kDefaultAuthorCap);

struct AffiliationIndex {
  // (author_id, affiliation_id) -> number of distinct papers.
  std::map<std::pair<std::string, std::string>, std::uint32_t> entries;
  std::map<std::string, std::string> names;

  friend bool operator==(const AffiliationIndex&, const AffiliationIndex&) = default;
};

AffiliationIndex build_affiliation_index(std::span<const PaperRecord> records);

// author_id -> first non-empty display name seen.
std::map<std::string, std::string> author_names(std::span<const PaperRecord> records);

// Edge-list text: `id` declares a node, `id<TAB>id[<TAB>weight]` adds an
// edge, `#` starts a comment line. Nodes get ids in first-seen order.
CoauthorGraph read_edge_list(std::istream& in);
CoauthorGraph load_edge_list(const std::filesystem::path& path);
// Writes every node declaration in id order followed by the weighted edges,
// so read_edge_list reproduces the graph exactly.
void write_edge_list(std::ostream& out, const CoauthorGraph& g);

void write_affiliation_index(std::ostream& out, const AffiliationIndex& index);
AffiliationIndex read_affiliation_index(std::istream& in);

void write_author_names(std::ostream& out, const std::map<std::string, std::string>& names);
std::map<std::string, std::string> read_author_names(std::istream& in);

}  // namespace coauthor

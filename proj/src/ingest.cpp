#include "coauthor/ingest.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_map>

#include "coauthor/error.hpp"
#include "coauthor/io.hpp"

namespace coauthor {

namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";

bool is_comment_or_blank(std::string_view line) {
  return line.empty() || line.front() == '#';
}

}  // namespace

ParseResult parse_records(std::istream& in, const RecordSchema& schema) {
  std::string line;
  if (!std::getline(in, line)) {
    if (in.bad()) throw IoError("failed to read record stream");
    throw ParseError("record input has no header row");
  }
  std::string_view header = io::chomp(line);
  if (header.starts_with(kBom)) header.remove_prefix(kBom.size());
  const auto names = io::split(header, schema.delimiter);

  const std::array<const std::string*, 7> wanted = {
      &schema.paper_id,       &schema.author_id, &schema.author_name, &schema.affiliation_id,
      &schema.affiliation_name, &schema.year,      &schema.field_id};
  std::array<std::size_t, 7> column{};
  std::size_t needed = 0;
  for (std::size_t i = 0; i < wanted.size(); ++i) {
    auto it = std::find(names.begin(), names.end(), *wanted[i]);
    if (it == names.end()) {
      throw ConfigError("column '" + *wanted[i] + "' not found in header");
    }
    column[i] = static_cast<std::size_t>(it - names.begin());
    needed = std::max(needed, column[i] + 1);
  }

  ParseResult result;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view row = io::chomp(line);
    if (row.empty()) continue;
    const auto fields = io::split(row, schema.delimiter);
    auto skip = [&] {
      ++result.skipped_rows;
      result.skipped_lines.push_back(line_no);
    };
    if (fields.size() < needed) {
      skip();
      continue;
    }
    PaperRecord rec;
    rec.paper_id = fields[column[0]];
    rec.author_id = fields[column[1]];
    rec.author_name = fields[column[2]];
    rec.affiliation_id = fields[column[3]];
    rec.affiliation_name = fields[column[4]];
    rec.field_id = fields[column[6]];
    const auto year = io::parse_integer(fields[column[5]]);
    if (rec.paper_id.empty() || rec.author_id.empty() || !year || *year < kMinYear ||
        *year > kMaxYear) {
      skip();
      continue;
    }
    rec.year = static_cast<int>(*year);
    result.records.push_back(std::move(rec));
  }
  if (in.bad()) throw IoError("failed to read record stream");
  return result;
}

ParseResult parse_records_file(const std::filesystem::path& path, const RecordSchema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open record file '" + path.string() + "'");
  return parse_records(in, schema);
}

std::vector<PaperRecord> filter_records(std::span<const PaperRecord> records, int year_min,
                                        int year_max,
                                        const std::optional<std::string>& field_id) {
  if (year_min > year_max) {
    throw ArgumentError("year range is inverted: " + std::to_string(year_min) + " > " +
                        std::to_string(year_max));
  }
  std::vector<PaperRecord> out;
  for (const auto& r : records) {
    if (r.year < year_min || r.year > year_max) continue;
    if (field_id && r.field_id != *field_id) continue;
    out.push_back(r);
  }
  return out;
}

Projection project_coauthorship(std::span<const PaperRecord> records, std::size_t author_cap) {
  std::set<std::string> authors;
  std::map<std::string, std::set<std::string>> papers;
  for (const auto& r : records) {
    authors.insert(r.author_id);
    papers[r.paper_id].insert(r.author_id);
  }

  GraphBuilder builder;
  for (const auto& a : authors) builder.add_node(a);

  Projection out;
  std::vector<NodeId> ids;
  for (const auto& [paper, members] : papers) {
    if (author_cap != 0 && members.size() > author_cap) {
      out.capped_papers.push_back({paper, members.size()});
      continue;
    }
    ids.clear();
    for (const auto& a : members) ids.push_back(builder.add_node(a));
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) builder.add_edge(ids[i], ids[j]);
    }
  }
  out.graph = std::move(builder).build();
  return out;
}

AffiliationIndex build_affiliation_index(std::span<const PaperRecord> records) {
  std::map<std::pair<std::string, std::string>, std::set<std::string>> papers;
  AffiliationIndex index;
  for (const auto& r : records) {
    if (r.affiliation_id.empty()) continue;
    papers[{r.author_id, r.affiliation_id}].insert(r.paper_id);
    auto& name = index.names[r.affiliation_id];
    if (name.empty()) name = r.affiliation_name;
  }
  for (const auto& [key, ps] : papers) {
    index.entries.emplace(key, static_cast<std::uint32_t>(ps.size()));
  }
  return index;
}

std::map<std::string, std::string> author_names(std::span<const PaperRecord> records) {
  std::map<std::string, std::string> names;
  for (const auto& r : records) {
    auto& name = names[r.author_id];
    if (name.empty()) name = r.author_name;
  }
  return names;
}

CoauthorGraph read_edge_list(std::istream& in) {
  GraphBuilder builder;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view row = io::chomp(line);
    if (is_comment_or_blank(row)) continue;
    const auto f = io::split(row, '\t');
    auto fail = [&](const std::string& why) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": " + why);
    };
    if (f.size() > 3) fail("expected at most three tab-separated columns");
    for (auto field : f) {
      if (field.empty()) fail("empty author id");
    }
    if (f.size() == 1) {
      builder.add_node(f[0]);
      continue;
    }
    Weight w = 1;
    if (f.size() == 3) {
      const auto parsed = io::parse_integer(f[2]);
      if (!parsed || *parsed < 1 || *parsed > 0xFFFFFFFFLL) fail("weight must be a positive integer");
      w = static_cast<Weight>(*parsed);
    }
    builder.add_edge(f[0], f[1], w);
  }
  if (in.bad()) throw IoError("failed to read edge list");
  return std::move(builder).build();
}

CoauthorGraph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open edge list '" + path.string() + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const CoauthorGraph& g) {
  out << "# nodes: " << g.node_count() << " edges: " << g.edge_count() << '\n';
  for (const auto& label : g.labels()) out << label << '\n';
  for (const auto& e : g.edges()) {
    out << g.label(e.u) << '\t' << g.label(e.v) << '\t' << e.weight << '\n';
  }
}

void write_affiliation_index(std::ostream& out, const AffiliationIndex& index) {
  out << "author_id\taffiliation_id\taffiliation_name\tpublications\n";
  for (const auto& [key, count] : index.entries) {
    auto name = index.names.find(key.second);
    out << key.first << '\t' << key.second << '\t'
        << (name == index.names.end() ? std::string() : name->second) << '\t' << count << '\n';
  }
}

AffiliationIndex read_affiliation_index(std::istream& in) {
  AffiliationIndex index;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("affiliation index has no header row");
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view row = io::chomp(line);
    if (row.empty()) continue;
    const auto f = io::split(row, '\t');
    const auto count = f.size() == 4 ? io::parse_integer(f[3]) : std::nullopt;
    if (!count || *count < 1 || f[0].empty() || f[1].empty()) {
      throw ParseError("affiliation index line " + std::to_string(line_no) + " is malformed");
    }
    index.entries[{std::string(f[0]), std::string(f[1])}] = static_cast<std::uint32_t>(*count);
    index.names[std::string(f[1])] = std::string(f[2]);
  }
  return index;
}

void write_author_names(std::ostream& out, const std::map<std::string, std::string>& names) {
  out << "author_id\tauthor_name\n";
  for (const auto& [id, name] : names) out << id << '\t' << name << '\n';
}

std::map<std::string, std::string> read_author_names(std::istream& in) {
  std::map<std::string, std::string> names;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("author name table has no header row");
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view row = io::chomp(line);
    if (row.empty()) continue;
    const auto f = io::split(row, '\t');
    if (f.size() != 2 || f[0].empty()) {
      throw ParseError("author name table line " + std::to_string(line_no) + " is malformed");
    }
    names[std::string(f[0])] = std::string(f[1]);
  }
  return names;
}

}  // namespace coauthor

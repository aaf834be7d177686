#include "coauthor/ingest.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "coauthor/error.hpp"
#include "support/oracles.hpp"

namespace coauthor {
namespace {

const char* kHeader = "paper_id\tauthor_id\tauthor_name\taffiliation_id\taffiliation_name\tyear\tfield_id\n";

PaperRecord rec(std::string paper, std::string author, int year = 2010,
                std::string affiliation = "", std::string field = "F1") {
  PaperRecord r;
  r.paper_id = std::move(paper);
  r.author_id = std::move(author);
  r.author_name = "Name " + r.author_id;
  r.affiliation_id = std::move(affiliation);
  r.affiliation_name = r.affiliation_id.empty() ? "" : "Inst " + r.affiliation_id;
  r.year = year;
  r.field_id = std::move(field);
  return r;
}

// Random papers with 1..max_authors authors drawn from `pool` ids.
std::vector<PaperRecord> random_records(std::size_t papers, std::size_t pool,
                                        std::size_t max_authors, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PaperRecord> out;
  for (std::size_t p = 0; p < papers; ++p) {
    const std::size_t k = 1 + rng() % max_authors;
    for (std::size_t i = 0; i < k; ++i) {
      out.push_back(rec("p" + std::to_string(p), "a" + std::to_string(rng() % pool),
                        1995 + static_cast<int>(rng() % 25), "i" + std::to_string(rng() % 5),
                        "F" + std::to_string(rng() % 3)));
    }
  }
  return out;
}

TEST(ParseRecords, WellFormedFixture) {
  std::istringstream in(std::string(kHeader) +
                        "p1\ta\tAlice\tX\tInst X\t2001\tF1\n"
                        "p1\tb\tBob\t\t\t2001\tF1\n"
                        "p2\tc\tCarol\tY\tInst Y\t2005\tF2\r\n");
  const auto r = parse_records(in, {});
  ASSERT_EQ(r.records.size(), 3u);
  EXPECT_EQ(r.skipped_rows, 0u);
  EXPECT_EQ(r.records[1].affiliation_id, "");
  EXPECT_EQ(r.records[2].field_id, "F2");
  EXPECT_EQ(r.records[2].year, 2005);
}

TEST(ParseRecords, EmptyPaperIdSkipped) {
  std::istringstream in(std::string(kHeader) + "\ta\tAlice\tX\tInst X\t2001\tF1\n" +
                        "p2\tb\tBob\tX\tInst X\t2001\tF1\n");
  const auto r = parse_records(in, {});
  EXPECT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.skipped_rows, 1u);
  EXPECT_EQ(r.skipped_lines, (std::vector<std::size_t>{2}));
}

TEST(ParseRecords, CustomSchemaAndDelimiter) {
  RecordSchema schema;
  schema.delimiter = ',';
  schema.paper_id = "PaperId";
  schema.author_id = "AuthorId";
  std::istringstream in(
      "year,PaperId,AuthorId,author_name,affiliation_id,affiliation_name,field_id,extra\n"
      "2003,p9,z,Zed,,,F,unused\n");
  const auto r = parse_records(in, schema);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].paper_id, "p9");
  EXPECT_EQ(r.records[0].author_id, "z");
}

TEST(ParseRecords, MissingMappedColumnIsConfigError) {
  std::istringstream in("paper_id\tauthor_id\n");
  EXPECT_THROW(parse_records(in, {}), ConfigError);
}

TEST(ParseRecords, NoHeaderIsParseError) {
  std::istringstream in("");
  EXPECT_THROW(parse_records(in, {}), ParseError);
}

TEST(ParseRecords, MissingFileIsIoError) {
  EXPECT_THROW(parse_records_file("/nonexistent/records.tsv", {}), IoError);
}

TEST(ParseRecords, GeneratedFixtureBookkeeping) {
  std::mt19937_64 rng(99);
  std::ostringstream text;
  text << kHeader;
  std::size_t generated = 0;
  std::size_t injected_bad = 0;
  for (int i = 0; i < 10000; ++i) {
    ++generated;
    switch (rng() % 40) {
      case 0: text << "\ta\tA\t\t\t2001\tF\n"; ++injected_bad; break;            // no paper id
      case 1: text << "p" << i << "\t\tA\t\t\t2001\tF\n"; ++injected_bad; break;  // no author id
      case 2: text << "p" << i << "\ta\tA\t\t\t20x1\tF\n"; ++injected_bad; break; // bad year
      case 3: text << "p" << i << "\ta\tA\t\t\t999\tF\n"; ++injected_bad; break;  // out of range
      case 4: text << "p" << i << "\ta\tA\n"; ++injected_bad; break;               // short row
      default:
        text << "p" << (i / 3) << "\ta" << rng() % 500 << "\tName\ti" << rng() % 7 << "\tInst\t"
             << 1990 + rng() % 30 << "\tF" << rng() % 2 << "\n";
    }
  }
  std::istringstream in(text.str());
  const auto r = parse_records(in, {});
  EXPECT_EQ(r.records.size(), generated - injected_bad);
  EXPECT_EQ(r.skipped_rows, injected_bad);
}

TEST(FilterRecords, YearWindowIsInclusive) {
  const std::vector<PaperRecord> records = {rec("p1", "a", 1999), rec("p2", "a", 2000),
                                            rec("p3", "a", 2016), rec("p4", "a", 2017)};
  const auto kept = filter_records(records, 2000, 2016);
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_EQ(kept[0].paper_id, "p2");
  EXPECT_EQ(kept[1].paper_id, "p3");
}

TEST(FilterRecords, AbsentFieldGivesEmpty) {
  const std::vector<PaperRecord> records = {rec("p1", "a"), rec("p2", "b")};
  EXPECT_TRUE(filter_records(records, 1000, 3000, std::string("025B78CE")).empty());
}

TEST(FilterRecords, InvertedRangeRejected) {
  EXPECT_THROW(filter_records({}, 2016, 2000), ArgumentError);
}

TEST(FilterRecords, RandomMatchesLinearScan) {
  const auto records = random_records(300, 80, 5, 12);
  const auto kept = filter_records(records, 2003, 2011, std::string("F1"));
  std::vector<PaperRecord> oracle;
  std::copy_if(records.begin(), records.end(), std::back_inserter(oracle), [](const PaperRecord& r) {
    return r.year >= 2003 && r.year <= 2011 && r.field_id == "F1";
  });
  EXPECT_EQ(kept, oracle);
}

TEST(Projection, SinglePaperTriangle) {
  const std::vector<PaperRecord> records = {rec("p", "a"), rec("p", "b"), rec("p", "c")};
  const auto g = project_coauthorship(records).graph;
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  for (const auto& e : g.edges()) EXPECT_EQ(e.weight, 1u);
}

TEST(Projection, RepeatedPairAccumulatesWeight) {
  const std::vector<PaperRecord> records = {rec("p1", "a"), rec("p1", "b"), rec("p2", "a"),
                                            rec("p2", "b")};
  const auto g = project_coauthorship(records).graph;
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.weight(g.at("a"), g.at("b")), 2u);
}

TEST(Projection, DuplicateAuthorInPaperAddsNothing) {
  const std::vector<PaperRecord> records = {rec("p", "a"), rec("p", "a"), rec("p", "b")};
  const auto g = project_coauthorship(records).graph;
  EXPECT_EQ(g.total_weight(), 1u);
}

TEST(Projection, SingleAuthorPaperGivesIsolatedNode) {
  const std::vector<PaperRecord> records = {rec("p", "solo")};
  const auto g = project_coauthorship(records).graph;
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Projection, NestedLoopPairCounter) {
  const auto records = random_records(50, 40, 6, 5);
  std::map<std::string, std::set<std::string>> papers;
  for (const auto& r : records) papers[r.paper_id].insert(r.author_id);
  std::map<std::pair<std::string, std::string>, std::uint32_t> oracle;
  for (const auto& [paper, authors] : papers) {
    for (const auto& a : authors) {
      for (const auto& b : authors) {
        if (a < b) ++oracle[{a, b}];
      }
    }
  }
  const auto g = project_coauthorship(records).graph;
  EXPECT_EQ(testing::labelled_edges(g), oracle);
}

TEST(Projection, WeightAddedPerPaperIsPairCount) {
  const auto records = random_records(200, 60, 8, 77);
  std::map<std::string, std::set<std::string>> papers;
  for (const auto& r : records) papers[r.paper_id].insert(r.author_id);
  std::uint64_t expected = 0;
  for (const auto& [paper, authors] : papers) expected += authors.size() * (authors.size() - 1) / 2;
  EXPECT_EQ(project_coauthorship(records).graph.total_weight(), expected);
}

TEST(Projection, CappedPaperIsLoggedNotExpanded) {
  std::vector<PaperRecord> records;
  for (int i = 0; i < 6; ++i) records.push_back(rec("big", "a" + std::to_string(i)));
  records.push_back(rec("small", "a0"));
  records.push_back(rec("small", "a1"));
  const auto p = project_coauthorship(records, 5);
  ASSERT_EQ(p.capped_papers.size(), 1u);
  EXPECT_EQ(p.capped_papers[0].paper_id, "big");
  EXPECT_EQ(p.capped_papers[0].author_count, 6u);
  EXPECT_EQ(p.graph.node_count(), 6u);
  EXPECT_EQ(p.graph.total_weight(), 1u);
  // cap 0 disables the cap
  EXPECT_TRUE(project_coauthorship(records, 0).capped_papers.empty());
}

TEST(Projection, ShuffledRecordsGiveIdenticalGraph) {
  auto records = random_records(120, 50, 5, 31);
  const auto reference = project_coauthorship(records).graph;
  std::mt19937_64 rng(1);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(records.begin(), records.end(), rng);
    EXPECT_EQ(project_coauthorship(records).graph, reference);
  }
}

TEST(Projection, FullRangeFilterIsIdentity) {
  const auto records = random_records(100, 40, 4, 8);
  EXPECT_EQ(project_coauthorship(filter_records(records, kMinYear, kMaxYear)).graph,
            project_coauthorship(records).graph);
}

TEST(AffiliationIndex, CountsDistinctPapers) {
  const std::vector<PaperRecord> records = {rec("p1", "a", 2000, "X"), rec("p2", "a", 2000, "X"),
                                            rec("p2", "a", 2000, "X"), rec("p3", "a", 2000, "")};
  const auto index = build_affiliation_index(records);
  ASSERT_EQ(index.entries.size(), 1u);
  EXPECT_EQ(index.entries.at({"a", "X"}), 2u);
  EXPECT_EQ(index.names.at("X"), "Inst X");
}

TEST(AffiliationIndex, RandomMatchesHashGrouping) {
  const auto records = random_records(150, 30, 5, 44);
  std::unordered_map<std::string, std::set<std::string>> groups;
  for (const auto& r : records) groups[r.author_id + "|" + r.affiliation_id].insert(r.paper_id);
  const auto index = build_affiliation_index(records);
  EXPECT_EQ(index.entries.size(), groups.size());
  for (const auto& [key, count] : index.entries) {
    EXPECT_EQ(count, groups.at(key.first + "|" + key.second).size());
  }
}

TEST(EdgeList, RoundTripIsExact) {
  const auto records = random_records(80, 60, 4, 3);
  const auto g = project_coauthorship(records).graph;
  std::stringstream buf;
  write_edge_list(buf, g);
  EXPECT_EQ(read_edge_list(buf), g);
}

TEST(EdgeList, CommentsAndWeights) {
  std::istringstream in("# header\n\na\tb\nb\ta\t3\nc\n");
  const auto g = read_edge_list(in);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.weight(g.at("a"), g.at("b")), 4u);
  EXPECT_EQ(g.degree(g.at("c")), 0u);
}

TEST(EdgeList, MalformedLinesRejected) {
  std::istringstream bad_weight("a\tb\tzero\n");
  EXPECT_THROW(read_edge_list(bad_weight), ParseError);
  std::istringstream too_many("a\tb\t1\tx\n");
  EXPECT_THROW(read_edge_list(too_many), ParseError);
  std::istringstream empty_id("a\t\n");
  EXPECT_THROW(read_edge_list(empty_id), ParseError);
}

TEST(SideTables, AffiliationAndNamesRoundTrip) {
  const auto records = random_records(40, 20, 4, 9);
  const auto index = build_affiliation_index(records);
  std::stringstream buf;
  write_affiliation_index(buf, index);
  EXPECT_EQ(read_affiliation_index(buf), index);

  const auto names = author_names(records);
  std::stringstream nbuf;
  write_author_names(nbuf, names);
  EXPECT_EQ(read_author_names(nbuf), names);
}

}  // namespace
}  // namespace coauthor

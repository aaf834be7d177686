#pragma once

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "coauthor/centrality.hpp"
#include "coauthor/community.hpp"
#include "coauthor/graph.hpp"
#include "coauthor/report.hpp"
#include "coauthor/stats.hpp"

namespace coauthor {

// Score vectors: CSV `author_id,score` at full round-trip precision, and a
// JSON document carrying the measure parameters alongside the scores.
void write_scores_csv(std::ostream& out, const CoauthorGraph& g, const CentralityVector& v);
// Throws ParseError on unknown or missing authors.
CentralityVector read_scores_csv(std::istream& in, const CoauthorGraph& g, Measure measure);
nlohmann::json params_json(const CentralityVector& v);
nlohmann::json scores_json(const CoauthorGraph& g, const CentralityVector& v);

void write_partition_csv(std::ostream& out, const CoauthorGraph& g, const Partition& p);
Partition read_partition_csv(std::istream& in, const CoauthorGraph& g);
nlohmann::json partition_json(const Partition& p);

nlohmann::json summary_json(const NetworkSummary& s);
// One header row and one value row; undefined values are left empty.
void write_summary_csv(std::ostream& out, const NetworkSummary& s);

// Display CSV: degree as an integer, other scores as %.2E.
void write_rank_table_csv(std::ostream& out, const RankTable& t);
// Full precision.
nlohmann::json rank_table_json(const RankTable& t);

void write_affiliation_report_csv(std::ostream& out, const AffiliationReport& r);

}  // namespace coauthor

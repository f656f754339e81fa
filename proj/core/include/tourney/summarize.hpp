#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace tourney {

/// Aggregate of one (experiment, n, gamma, statistic) group of sweep rows.
struct SummaryRow {
  std::string experiment;
  std::size_t n = 0;
  std::string gamma;  ///< as printed in the sweep CSV
  std::string statistic;
  std::size_t count = 0;
  double mean = 0.0;
  double sd = 0.0;            ///< sample standard deviation; 0 for a single row
  double success_rate = 0.0;  ///< fraction of values > 0 (verdict columns are 0/1)
};

inline constexpr const char* kSummaryHeader = "experiment,n,gamma,statistic,count,mean,sd,success_rate";

/// Parses a sweep CSV and aggregates it. Throws IoError on malformed input.
std::vector<SummaryRow> summarize(std::istream& in);
std::vector<SummaryRow> summarize_file(const std::string& path);

void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out);
void write_summary_file(const std::vector<SummaryRow>& rows, const std::string& path);

}  // namespace tourney

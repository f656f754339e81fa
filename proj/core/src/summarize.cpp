#include "tourney/summarize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <string_view>
#include <tuple>

#include "tourney/errors.hpp"
#include "tourney/sweep.hpp"

namespace tourney {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) return fields;
    start = comma + 1;
  }
}

template <typename T>
T parse_number(std::string_view text, std::size_t line_no, const char* what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw IoError("line " + std::to_string(line_no) + ": bad " + what + " \"" + std::string(text) + "\"");
  return value;
}

struct GroupKey {
  std::string experiment;
  std::size_t n;
  double gamma;
  std::string gamma_text;
  std::string statistic;

  auto tie() const { return std::tie(experiment, n, gamma, gamma_text, statistic); }
  friend bool operator<(const GroupKey& a, const GroupKey& b) { return a.tie() < b.tie(); }
};

}  // namespace

std::vector<SummaryRow> summarize(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) return {};
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw IoError("unexpected CSV header: \"" + line + "\"");

  std::map<GroupKey, std::vector<double>> groups;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 6)
      throw IoError("line " + std::to_string(line_no) + ": expected 6 fields, got " +
                    std::to_string(f.size()));
    GroupKey key{std::string(f[0]), parse_number<std::size_t>(f[1], line_no, "n"),
                 parse_number<double>(f[2], line_no, "gamma"), std::string(f[2]), std::string(f[4])};
    parse_number<std::size_t>(f[3], line_no, "trial");
    const double value = parse_number<double>(f[5], line_no, "value");
    if (!std::isfinite(value)) throw IoError("line " + std::to_string(line_no) + ": non-finite value");
    groups[std::move(key)].push_back(value);
  }

  std::vector<SummaryRow> out;
  out.reserve(groups.size());
  for (const auto& [key, values] : groups) {
    SummaryRow row{key.experiment, key.n, key.gamma_text, key.statistic, values.size(), 0.0, 0.0, 0.0};
    double sum = 0.0;
    std::size_t positive = 0;
    for (double v : values) {
      sum += v;
      if (v > 0.0) ++positive;
    }
    row.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
      double ss = 0.0;
      for (double v : values) ss += (v - row.mean) * (v - row.mean);
      row.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    row.success_rate = static_cast<double>(positive) / static_cast<double>(values.size());
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<SummaryRow> summarize_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return summarize(in);
}

void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
  out << kSummaryHeader << '\n';
  for (const auto& r : rows) {
    out << r.experiment << ',' << r.n << ',' << r.gamma << ',' << r.statistic << ',' << r.count << ','
        << format_real(r.mean) << ',' << format_real(r.sd) << ',' << format_real(r.success_rate) << '\n';
  }
}

void write_summary_file(const std::vector<SummaryRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  write_summary_csv(rows, out);
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace tourney

#pragma once

// Persistent store of n(a,b,g) knowledge: JSON lines with sorted keys, one
// record per parameter triple, merged as a lattice.

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "wcage/graph.hpp"
#include "wcage/moore.hpp"
#include "wcage/wgf.hpp"

namespace wcage {

enum class ResultStatus { exact, bracketed, nonexistent };
enum class Provenance { paper_table, constructed, searched };

inline std::string to_string(ResultStatus s) {
  switch (s) {
    case ResultStatus::exact: return "EXACT";
    case ResultStatus::bracketed: return "BRACKETED";
    case ResultStatus::nonexistent: return "NONEXISTENT";
  }
  return "?";
}

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::paper_table: return "PAPER_TABLE";
    case Provenance::constructed: return "CONSTRUCTED";
    case Provenance::searched: return "SEARCHED";
  }
  return "?";
}

struct ResultRecord {
  Params params;
  ResultStatus status = ResultStatus::bracketed;
  long long lower = 0;
  Extended upper = Extended::infinite();
  /// Inline WGF text.
  std::optional<std::string> witness;
  Provenance provenance = Provenance::paper_table;
  std::string timestamp;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

class ResultsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ResultSet = std::map<Params, ResultRecord>;

inline std::string utc_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Checks the record invariants; returns a description of the first problem.
inline std::optional<std::string> record_problem(const ResultRecord& r) {
  if (r.params.a < 0 || r.params.b < 0 || r.params.g < 3) return "invalid parameters";
  switch (r.status) {
    case ResultStatus::nonexistent:
      if (!r.upper.is_infinite()) return "NONEXISTENT record with finite upper bound";
      break;
    case ResultStatus::exact:
      if (!(r.upper == r.lower)) return "EXACT record with lower != upper";
      // Table values quoted from the literature carry no witness.
      if (!r.witness && r.provenance != Provenance::paper_table) return "EXACT record without witness";
      break;
    case ResultStatus::bracketed:
      if (r.upper.is_finite() && r.lower > r.upper.value()) return "lower bound above upper bound";
      break;
  }
  if (r.witness) {
    WGraph w = parse_wgf(*r.witness);
    if (!verify_witness(w, r.params)) return "witness is not an " + to_string(r.params) + "-wgraph";
    if (!(r.upper == w.order())) return "witness order differs from the upper bound";
  }
  return std::nullopt;
}

inline nlohmann::json to_json(const ResultRecord& r) {
  nlohmann::json j;
  j["a"] = r.params.a;
  j["b"] = r.params.b;
  j["g"] = r.params.g;
  j["status"] = to_string(r.status);
  j["lower"] = r.lower;
  if (r.upper.is_finite()) j["upper"] = r.upper.value();
  else j["upper"] = "inf";
  if (r.witness) j["witness"] = *r.witness;
  else j["witness"] = nullptr;
  j["provenance"] = to_string(r.provenance);
  j["timestamp"] = r.timestamp;
  return j;
}

inline ResultRecord record_from_json(const nlohmann::json& j) {
  ResultRecord r;
  r.params = {j.at("a").get<int>(), j.at("b").get<int>(), j.at("g").get<int>()};
  const auto st = j.at("status").get<std::string>();
  if (st == "EXACT") r.status = ResultStatus::exact;
  else if (st == "BRACKETED") r.status = ResultStatus::bracketed;
  else if (st == "NONEXISTENT") r.status = ResultStatus::nonexistent;
  else throw ResultsError("unknown status " + st);
  r.lower = j.at("lower").get<long long>();
  const auto& up = j.at("upper");
  if (up.is_string()) {
    if (up.get<std::string>() != "inf") throw ResultsError("upper must be an integer or \"inf\"");
    r.upper = Extended::infinite();
  } else {
    r.upper = Extended(up.get<long long>());
  }
  if (j.contains("witness") && !j.at("witness").is_null()) r.witness = j.at("witness").get<std::string>();
  const auto pv = j.at("provenance").get<std::string>();
  if (pv == "PAPER_TABLE") r.provenance = Provenance::paper_table;
  else if (pv == "CONSTRUCTED") r.provenance = Provenance::constructed;
  else if (pv == "SEARCHED") r.provenance = Provenance::searched;
  else throw ResultsError("unknown provenance " + pv);
  r.timestamp = j.at("timestamp").get<std::string>();
  return r;
}

/// Lattice join of two records for the same parameters. EXACT beats
/// BRACKETED, brackets intersect, and contradictions throw.
inline ResultRecord merge(const ResultRecord& x, const ResultRecord& y) {
  if (x.params != y.params) throw std::invalid_argument("merging records for different parameters");
  const std::string where = to_string(x.params) + ": ";
  auto fail = [&](const std::string& why) -> ResultRecord { throw ResultsError(where + why); };
  const bool x_none = x.status == ResultStatus::nonexistent, y_none = y.status == ResultStatus::nonexistent;
  if (x_none || y_none) {
    const ResultRecord& other = x_none ? y : x;
    if (other.status != ResultStatus::nonexistent && other.upper.is_finite())
      return fail("NONEXISTENT conflicts with a finite upper bound");
    return x_none ? x : y;
  }
  const bool x_exact = x.status == ResultStatus::exact, y_exact = y.status == ResultStatus::exact;
  if (x_exact && y_exact) {
    if (x.lower != y.lower)
      return fail("conflicting EXACT values " + std::to_string(x.lower) + " and " + std::to_string(y.lower));
    return (!x.witness && y.witness) ? y : x;
  }
  if (x_exact || y_exact) {
    const ResultRecord& e = x_exact ? x : y;
    const ResultRecord& br = x_exact ? y : x;
    if (e.lower < br.lower || (br.upper.is_finite() && e.lower > br.upper.value()))
      return fail("EXACT " + std::to_string(e.lower) + " outside bracket [" + std::to_string(br.lower) + ", " +
                  br.upper.str() + "]");
    return e;
  }
  ResultRecord out = y;
  out.lower = std::max(x.lower, y.lower);
  out.upper = std::min(x.upper, y.upper);
  if (out.upper.is_finite() && out.lower > out.upper.value())
    return fail("disjoint brackets [" + std::to_string(x.lower) + ", " + x.upper.str() + "] and [" +
                std::to_string(y.lower) + ", " + y.upper.str() + "]");
  // Keep the witness that realizes the upper bound.
  const ResultRecord& up_src = (x.upper < y.upper) ? x : y;
  out.witness = up_src.witness;
  out.provenance = up_src.provenance;
  out.timestamp = std::max(x.timestamp, y.timestamp);
  if (out.upper == out.lower && out.witness) out.status = ResultStatus::exact;
  return out;
}

inline void merge_into(ResultSet& set, const ResultRecord& r) {
  if (auto bad = record_problem(r)) throw ResultsError(to_string(r.params) + ": " + *bad);
  auto it = set.find(r.params);
  if (it == set.end()) set.emplace(r.params, r);
  else it->second = merge(it->second, r);
}

inline std::string serialize_results(const ResultSet& set) {
  std::string out;
  for (const auto& [p, r] : set) out += to_json(r).dump() + "\n";
  return out;
}

/// Parses JSON lines; duplicate triples are merged. Errors name the line.
inline ResultSet parse_results(std::string_view text) {
  ResultSet set;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      merge_into(set, record_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw ResultsError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return set;
}

namespace detail {

/// Holds an exclusive flock on `<path>.lock` for its lifetime.
class FileLock {
 public:
  explicit FileLock(const std::string& path) {
    const std::string lock = path + ".lock";
    fd_ = ::open(lock.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0) throw ResultsError("cannot open lock file " + lock);
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw ResultsError("cannot lock " + lock);
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

inline std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ResultsError("cannot write " + tmp);
    out << text;
    if (!out) throw ResultsError("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw ResultsError("cannot replace " + path);
}

}  // namespace detail

/// Missing files load as the empty set.
inline ResultSet results_load(const std::string& path) {
  auto text = detail::slurp(path);
  if (!text) return {};
  try {
    return parse_results(*text);
  } catch (const ResultsError& e) {
    throw ResultsError(path + ": " + e.what());
  }
}

/// Overwrites the file with exactly `set`.
inline void results_save(const std::string& path, const ResultSet& set) {
  detail::FileLock lock(path);
  detail::write_file(path, serialize_results(set));
}

/// Merges records into the file under the lock and returns the stored set.
inline ResultSet results_update(const std::string& path, const std::vector<ResultRecord>& records) {
  detail::FileLock lock(path);
  ResultSet set;
  if (auto text = detail::slurp(path)) set = parse_results(*text);
  for (const auto& r : records) merge_into(set, r);
  detail::write_file(path, serialize_results(set));
  return set;
}

// ---------------------------------------------------------------- published seed

/// The published tables for g = 5..10 plus three separately quoted values.
/// 0 marks a blank (unknown) square, -1 an infinite one.
struct PublishedTable {
  int g;
  std::vector<std::vector<int>> rows;  // rows[a-1][b-1]
};

inline const std::vector<PublishedTable>& published_tables() {
  static const std::vector<PublishedTable> t{
      {5, {{-1, 4, 6, 6, 8, 8, 10, 10}, {6, 7, 8, 9, 10, 11, 12, 13}, {12, 12, 14, 14, 16, 16, 0, 0},
           {20, 19, 20, 21, 0, 0, 0, 0}}},
      {6, {{4, 6, 8, 10, 12, 14, 16, 18}, {8, 10, 12, 14, 16, 18, 20, 0}, {16, 18, 20, 22, 24, 0, 0, 0},
           {28, 30, 32, 0, 0, 0, 0, 0}}},
      {7, {{-1, 10, 14, 18, 22}, {14, 19, 0, 0, 0}}},
      {8, {{-1, 10, 16, 20}, {16, 24, 0, 0}}},
      {9, {{6, 14, 24}, {24, 0, 0}}},
      {10, {{-1, 16, 28}, {32, 0, 0}}},
  };
  return t;
}

inline constexpr const char* kSeedTimestamp = "1970-01-01T00:00:00Z";

/// Published n(a,b,g): nullopt when none is given, infinite
/// for a NONEXISTENT square.
inline std::optional<Extended> published_value(const Params& p) {
  if (p == Params{1, 2, 11}) return Extended(24);
  if (p == Params{1, 2, 12}) return Extended(26);
  if (p == Params{5, 2, 6}) return Extended(46);
  for (const auto& t : published_tables()) {
    if (t.g != p.g || p.a < 1 || p.a > static_cast<int>(t.rows.size())) continue;
    const auto& row = t.rows[static_cast<std::size_t>(p.a - 1)];
    if (p.b < 1 || p.b > static_cast<int>(row.size())) continue;
    const int v = row[static_cast<std::size_t>(p.b - 1)];
    if (v == 0) return std::nullopt;
    return v < 0 ? Extended::infinite() : Extended(v);
  }
  return std::nullopt;
}

/// Every table square and quoted value as PAPER_TABLE records. Blank squares
/// become brackets [lower bound, upper(p)].
inline std::vector<ResultRecord> published_seed(
    const std::function<Extended(const Params&)>& upper = [](const Params&) { return Extended::infinite(); }) {
  std::vector<Params> all;
  for (const auto& t : published_tables())
    for (std::size_t a = 0; a < t.rows.size(); ++a)
      for (std::size_t b = 0; b < t.rows[a].size(); ++b)
        all.push_back({static_cast<int>(a) + 1, static_cast<int>(b) + 1, t.g});
  all.push_back({1, 2, 11});
  all.push_back({1, 2, 12});
  all.push_back({5, 2, 6});
  std::vector<ResultRecord> out;
  for (const auto& p : all) {
    ResultRecord r;
    r.params = p;
    r.provenance = Provenance::paper_table;
    r.timestamp = kSeedTimestamp;
    auto v = published_value(p);
    if (v && v->is_infinite()) {
      r.status = ResultStatus::nonexistent;
      r.lower = 0;
    } else if (v) {
      r.status = ResultStatus::exact;
      r.lower = v->value();
      r.upper = *v;
    } else {
      r.status = ResultStatus::bracketed;
      r.lower = moore_bounds(p).combined;
      r.upper = upper(p);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace wcage

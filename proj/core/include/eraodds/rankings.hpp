#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "eraodds/population.hpp"

namespace eraodds {

struct PlayerEntry {
  int rank = 0;
  std::string name;
  Year career_start_year = 0;

  friend bool operator==(const PlayerEntry&, const PlayerEntry&) = default;
};

/// An all-time list. Entries are held in rank order with ranks exactly
/// 1..size() and unique names.
class RankedList {
 public:
  /// Sorts by rank, then throws ValidationError naming the offending entry on
  /// duplicate/missing ranks, duplicate names or an empty list.
  RankedList(std::string source, std::vector<PlayerEntry> entries);

  [[nodiscard]] const std::string& source() const noexcept { return source_; }
  [[nodiscard]] const std::vector<PlayerEntry>& entries() const noexcept { return entries_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(entries_.size()); }

  friend bool operator==(const RankedList&, const RankedList&) = default;

 private:
  std::string source_;
  std::vector<PlayerEntry> entries_;
};

/// Players ranked within `depth` whose career began in or before `cutoff_year`.
/// Throws DomainError if depth is not in 1..list.size().
[[nodiscard]] int count_early(const RankedList& list, int depth, Year cutoff_year);

/// `rank,name,career_start_year`. Parse errors carry the line number.
RankedList load_ranked_list(std::istream& in, const std::string& source,
                            const std::string& source_id);
/// The list's source id is the file stem (".../bwar.csv" -> "bwar").
RankedList load_ranked_list(const std::string& path);

void write_ranked_list(std::ostream& out, const RankedList& list);

}  // namespace eraodds

#include "eraodds/rankings.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "eraodds/csv.hpp"
#include "eraodds/error.hpp"

namespace eraodds {

RankedList::RankedList(std::string source, std::vector<PlayerEntry> entries)
    : source_(std::move(source)), entries_(std::move(entries)) {
  const std::string where = "list '" + source_ + "'";
  if (entries_.empty()) throw ValidationError(where + " is empty");
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const auto& a, const auto& b) { return a.rank < b.rank; });
  std::set<std::string> names;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.rank < 1) throw ValidationError(where + ": rank " + std::to_string(e.rank) + " < 1");
    if (i > 0 && entries_[i - 1].rank == e.rank) {
      throw ValidationError(where + ": duplicate rank " + std::to_string(e.rank));
    }
    if (e.rank != static_cast<int>(i) + 1) {
      throw ValidationError(where + ": rank " + std::to_string(i + 1) + " is missing");
    }
    if (e.name.empty()) throw ValidationError(where + ": rank " + std::to_string(e.rank) +
                                              " has no name");
    if (!names.insert(e.name).second) {
      throw ValidationError(where + ": duplicate name '" + e.name + "' at rank " +
                            std::to_string(e.rank));
    }
  }
}

int count_early(const RankedList& list, int depth, Year cutoff_year) {
  if (depth < 1 || depth > list.size()) {
    throw DomainError("depth " + std::to_string(depth) + " outside 1.." +
                      std::to_string(list.size()) + " for list '" + list.source() + "'");
  }
  return static_cast<int>(std::count_if(
      list.entries().begin(), list.entries().begin() + depth,
      [cutoff_year](const PlayerEntry& e) { return e.career_start_year <= cutoff_year; }));
}

RankedList load_ranked_list(std::istream& in, const std::string& source,
                            const std::string& source_id) {
  const auto doc = csv::read(in, source);
  csv::expect_header(doc, {"rank", "name", "career_start_year"});
  if (doc.rows.empty()) throw ParseError(source, doc.header_line, "no list entries");
  std::vector<PlayerEntry> entries;
  for (const auto& row : doc.rows) {
    PlayerEntry e;
    e.rank = static_cast<int>(csv::parse_integer(doc, row, 0));
    e.name = row.fields[1];
    e.career_start_year = static_cast<Year>(csv::parse_integer(doc, row, 2));
    entries.push_back(std::move(e));
  }
  try {
    return RankedList(source_id, std::move(entries));
  } catch (const ValidationError& e) {
    throw ValidationError(source + ": " + e.what());
  }
}

RankedList load_ranked_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return load_ranked_list(in, path, std::filesystem::path(path).stem().string());
}

void write_ranked_list(std::ostream& out, const RankedList& list) {
  out << "rank,name,career_start_year\n";
  for (const auto& e : list.entries()) {
    out << e.rank << ',' << csv::escape(e.name) << ',' << e.career_start_year << '\n';
  }
}

}  // namespace eraodds

#pragma once

// OEIS b-file reading and term-by-term comparison against the recurrence.
// Format: one "index value" pair per line, '#' lines and blank lines ignored.

#include "colorcomp/core.hpp"
#include "colorcomp/counting.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace colorcomp {

class bfile_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct BFileEntry {
  std::int64_t index = 0;
  Count value;
};

struct BFile {
  std::vector<BFileEntry> entries;
};

inline BFile parse_bfile(std::istream& in) {
  BFile file;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index_text, value_text, extra;
    fields >> index_text >> value_text;
    if (value_text.empty() || (fields >> extra))
      throw bfile_error("line " + std::to_string(line_no) + ": expected \"index value\"");
    BFileEntry entry;
    try {
      std::size_t used = 0;
      entry.index = std::stoll(index_text, &used);
      if (used != index_text.size()) throw std::invalid_argument(index_text);
    } catch (const std::exception&) {
      throw bfile_error("line " + std::to_string(line_no) + ": bad index \"" + index_text + "\"");
    }
    if (entry.value.set_str(value_text, 10) != 0)
      throw bfile_error("line " + std::to_string(line_no) + ": bad value \"" + value_text + "\"");
    if (!file.entries.empty() && entry.index <= file.entries.back().index)
      throw bfile_error("line " + std::to_string(line_no) + ": indices must strictly increase");
    file.entries.push_back(std::move(entry));
  }
  return file;
}

inline BFile load_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bfile_error("cannot open b-file \"" + path + "\"");
  return parse_bfile(in);
}

struct TermCheck {
  std::int64_t index = 0;
  std::int64_t nu = 0;
  Count expected;  // b-file value
  Count actual;    // recurrence value
  bool pass() const { return expected == actual; }
};

/// Compares W_nu (recurrence) with b-file entries, nu = index + offset.
/// Entries mapping to nu < 1 are skipped; `terms` limits how many are
/// compared and must be available in full.
inline std::vector<TermCheck> verify_bfile(const BFile& file, const ColorLaw& law,
                                           std::int64_t offset,
                                           std::optional<std::int64_t> terms = std::nullopt) {
  std::vector<TermCheck> checks;
  for (const auto& e : file.entries) {
    if (terms && static_cast<std::int64_t>(checks.size()) >= *terms) break;
    const std::int64_t nu = e.index + offset;
    if (nu < 1) continue;
    checks.push_back({e.index, nu, e.value, count_total_recurrence(law, nu)});
  }
  if (terms && static_cast<std::int64_t>(checks.size()) < *terms)
    throw bfile_error("b-file provides only " + std::to_string(checks.size()) +
                      " usable terms, " + std::to_string(*terms) + " requested");
  return checks;
}

} // namespace colorcomp

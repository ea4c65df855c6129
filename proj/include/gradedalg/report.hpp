// Machine-readable report records: one JSON object per line with a fixed
// field order, so equal inputs give byte-identical output.
#pragma once

#include "gradedalg/verdict.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gradedalg {

struct ReportRecord {
  std::string command;
  /// File path or constructor description.
  std::string input;
  /// FNV-1a of the input bytes, 16 hex digits.
  std::string digest;
  std::vector<VerdictReport> verdicts;
  /// Named values such as K-groups, in insertion order.
  std::vector<std::pair<std::string, std::string>> values;
};

std::string fnv1a_hex(std::string_view bytes);

std::string to_json_line(const ReportRecord& r);

/// 0 when every verdict is true, 1 when some verdict is false, 2 when none
/// is false but some is undecided.
int exit_code(const std::vector<VerdictReport>& verdicts);

}  // namespace gradedalg

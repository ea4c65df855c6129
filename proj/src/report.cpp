#include "gradedalg/report.hpp"

#include "json.hpp"

namespace gradedalg {

namespace {

nlohmann::ordered_json verdict_json(const VerdictReport& v) {
  nlohmann::ordered_json j;
  j["predicate"] = v.predicate;
  j["truth"] = to_string(v.truth);
  j["strategy"] = to_string(v.strategy);
  j["witness"] = v.witness;
  if (!v.notes.empty()) j["notes"] = v.notes;
  if (!v.parts.empty()) {
    auto parts = nlohmann::ordered_json::array();
    for (const auto& p : v.parts) parts.push_back(verdict_json(p));
    j["parts"] = std::move(parts);
  }
  return j;
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

std::string to_json_line(const ReportRecord& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["input"] = r.input;
  j["digest"] = r.digest;
  auto verdicts = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_json(v));
  j["verdicts"] = std::move(verdicts);
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.values) values[k] = v;
  j["values"] = std::move(values);
  return j.dump();
}

int exit_code(const std::vector<VerdictReport>& verdicts) {
  bool undecided = false;
  for (const auto& v : verdicts) {
    if (v.fails()) return 1;
    if (v.is_undecided()) undecided = true;
  }
  return undecided ? 2 : 0;
}

}  // namespace gradedalg

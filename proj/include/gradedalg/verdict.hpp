// Three-valued predicate results with the strategy that produced them.
#pragma once

#include <string>
#include <vector>

namespace gradedalg {

enum class Truth { yes, no, undecided };

/// exhaustive: every case was checked.  constructive: an explicit certificate
/// settles the question.  sampled: only some cases were checked.
enum class Strategy { exhaustive, constructive, sampled };

inline std::string to_string(Truth t) {
  switch (t) {
    case Truth::yes: return "true";
    case Truth::no: return "false";
    case Truth::undecided: return "undecided";
  }
  return "?";
}

inline std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::exhaustive: return "exhaustive";
    case Strategy::constructive: return "constructive";
    case Strategy::sampled: return "sampled";
  }
  return "?";
}

inline Truth truth_of(bool b) { return b ? Truth::yes : Truth::no; }

/// Conjunction: a false part wins, then an undecided one.
inline Truth truth_and(Truth a, Truth b) {
  if (a == Truth::no || b == Truth::no) return Truth::no;
  if (a == Truth::undecided || b == Truth::undecided) return Truth::undecided;
  return Truth::yes;
}

/// The less certain of two strategies.
inline Strategy weaker(Strategy a, Strategy b) {
  if (a == Strategy::sampled || b == Strategy::sampled) return Strategy::sampled;
  if (a == Strategy::exhaustive || b == Strategy::exhaustive) return Strategy::exhaustive;
  return Strategy::constructive;
}

struct VerdictReport {
  std::string predicate;
  Truth truth = Truth::undecided;
  Strategy strategy = Strategy::constructive;
  /// Certificate for true verdicts, counterexample for false ones.
  std::string witness;
  std::vector<std::string> notes;
  std::vector<VerdictReport> parts;

  bool holds() const { return truth == Truth::yes; }
  bool fails() const { return truth == Truth::no; }
  bool is_undecided() const { return truth == Truth::undecided; }

  static VerdictReport make(std::string predicate, Truth truth, Strategy strategy, std::string witness = {}) {
    VerdictReport r;
    r.predicate = std::move(predicate);
    r.truth = truth;
    r.strategy = strategy;
    r.witness = std::move(witness);
    return r;
  }
};

/// Conjunction of sub-verdicts; the witness is taken from the first part that
/// is not true.
inline VerdictReport conjunction(std::string predicate, std::vector<VerdictReport> parts) {
  VerdictReport r;
  r.predicate = std::move(predicate);
  r.truth = Truth::yes;
  r.strategy = Strategy::constructive;
  for (const auto& p : parts) {
    r.truth = truth_and(r.truth, p.truth);
    r.strategy = weaker(r.strategy, p.strategy);
  }
  for (const auto& p : parts)
    if (p.truth == r.truth && r.truth != Truth::yes) {
      r.witness = p.predicate + ": " + p.witness;
      break;
    }
  r.parts = std::move(parts);
  return r;
}

}  // namespace gradedalg

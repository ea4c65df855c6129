#include "gradedalg/fg_abelian.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace gradedalg {

FGAbelianGroup::FGAbelianGroup(int rank, const std::vector<Integer>& cyclic_orders) {
  if (rank < 0) throw StructuralError("negative rank");
  rank_ = rank;
  const auto k = static_cast<Eigen::Index>(cyclic_orders.size());
  if (k == 0) return;
  IntMatrix d = int_zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) d(i, i) = abs(cyclic_orders[static_cast<std::size_t>(i)]);
  for (const auto& inv : smith_normal_form(d).invariants) {
    if (inv.is_zero())
      ++rank_;
    else if (!(inv == Integer(1)))
      torsion_.push_back(inv);
  }
}

FGAbelianGroup FGAbelianGroup::from_presentation(Eigen::Index generators, const IntMatrix& relations) {
  if (relations.rows() > 0 && relations.cols() != generators) throw StructuralError("relation matrix has the wrong width");
  if (relations.rows() == 0) return free(static_cast<int>(generators));
  const auto snf = smith_normal_form(relations);
  std::vector<Integer> orders(snf.invariants.begin(), snf.invariants.end());
  // Generators beyond the diagonal are free.
  const auto extra = generators - static_cast<Eigen::Index>(orders.size());
  return FGAbelianGroup(static_cast<int>(std::max<Eigen::Index>(extra, 0)), orders);
}

FGAbelianGroup FGAbelianGroup::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty() || s == "0" || s == "trivial") return trivial();
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.size();
    std::size_t len = 0;
    for (const std::string sep : {"(+)", "+", "x"}) {
      const auto f = s.find(sep, pos);
      if (f != std::string::npos && f < next) {
        next = f;
        len = sep.size();
      }
    }
    parts.push_back(s.substr(pos, next - pos));
    if (next == s.size()) break;
    pos = next + len;
  }
  int rank = 0;
  std::vector<Integer> orders;
  static const std::regex free_re(R"(Z(\^(\d+))?)");
  static const std::regex cyc_re(R"(Z/(\d+))");
  for (const auto& p : parts) {
    std::smatch m;
    if (std::regex_match(p, m, cyc_re)) {
      orders.emplace_back(m[1].str());
    } else if (std::regex_match(p, m, free_re)) {
      rank += m[2].matched ? std::stoi(m[2].str()) : 1;
    } else {
      throw StructuralError("cannot parse abelian group summand '" + p + "'");
    }
  }
  return FGAbelianGroup(rank, orders);
}

Integer FGAbelianGroup::torsion_order() const {
  Integer n(1);
  for (const auto& d : torsion_) n *= d;
  return n;
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (rank_ == 1) parts.emplace_back("Z");
  if (rank_ > 1) parts.push_back("Z^" + std::to_string(rank_));
  for (const auto& d : torsion_) parts.push_back("Z/" + d.to_string());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " (+) " : "") + parts[i];
  return out;
}

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  std::vector<Integer> orders = a.torsion();
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  return FGAbelianGroup(a.rank() + b.rank(), orders);
}

FGAbelianGroup localize(const FGAbelianGroup& g, const Integer& n) {
  if (n.is_zero()) throw NotApplicable("localization at 0 is not defined");
  const Integer m = abs(n);
  std::vector<Integer> orders;
  for (Integer d : g.torsion()) {
    for (Integer c = gcd(d, m); !(c == Integer(1)); c = gcd(d, m)) d = d / c;
    orders.push_back(d);
  }
  return FGAbelianGroup(g.rank(), orders);
}

}  // namespace gradedalg

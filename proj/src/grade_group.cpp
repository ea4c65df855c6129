#include "gradedalg/grade_group.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace gradedalg {

struct GradeGroup::Impl {
  Kind kind = Kind::abelian;
  int free_rank = 0;
  std::vector<std::int64_t> torsion;
  std::vector<std::vector<int>> table;
  std::vector<std::string> labels;
  int identity = 0;
  std::vector<int> inverse;
  bool abelian_table = true;
};

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

void require_same_owner(const GroupElement& a, const GroupElement& b) {
  if (!(a.group() == b.group())) throw StructuralError("group elements belong to different groups");
}

}  // namespace

GradeGroup GradeGroup::abelian(int free_rank, std::vector<std::int64_t> torsion) {
  if (free_rank < 0) throw StructuralError("negative free rank");
  for (auto n : torsion)
    if (n < 2) throw StructuralError("torsion orders must be at least 2");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::abelian;
  impl->free_rank = free_rank;
  impl->torsion = std::move(torsion);
  return GradeGroup(std::move(impl));
}

GradeGroup GradeGroup::from_table(std::vector<std::vector<int>> table, std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw StructuralError("empty group table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw StructuralError("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw StructuralError("group table entry out of range");
  }
  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw StructuralError("group table is not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + ")");
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) identity = e;
  }
  if (identity < 0) throw StructuralError("group table has no identity");
  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (at(a, b) == identity && at(b, a) == identity) inverse[static_cast<std::size_t>(a)] = b;
    if (inverse[static_cast<std::size_t>(a)] < 0) throw StructuralError("element " + std::to_string(a) + " has no inverse");
  }
  if (labels.empty())
    for (int a = 0; a < n; ++a) labels.push_back("g" + std::to_string(a));
  if (static_cast<int>(labels.size()) != n) throw StructuralError("label count does not match table size");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::table;
  impl->identity = identity;
  impl->inverse = std::move(inverse);
  impl->abelian_table = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (at(a, b) != at(b, a)) impl->abelian_table = false;
  impl->table = std::move(table);
  impl->labels = std::move(labels);
  return GradeGroup(std::move(impl));
}

GradeGroup GradeGroup::from_permutations(const std::vector<std::vector<int>>& elements, std::vector<std::string> labels) {
  const std::size_t n = elements.size();
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < n; ++i) index[elements[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p = elements[i];
      const auto& q = elements[j];
      std::vector<int> comp(q.size());
      for (std::size_t x = 0; x < q.size(); ++x) comp[x] = p[static_cast<std::size_t>(q[x])];
      auto it = index.find(comp);
      if (it == index.end()) throw StructuralError("permutations are not closed under composition");
      table[i][j] = it->second;
    }
  return from_table(std::move(table), std::move(labels));
}

GradeGroup GradeGroup::parse(const std::string& text) {
  const std::string t = trim(text);
  if (t == "trivial" || t == "0" || t == "1") return trivial();
  int rank = 0;
  std::vector<std::int64_t> torsion;
  std::stringstream ss(t);
  std::string part;
  static const std::regex free_re(R"(Z(\^([0-9]+))?)");
  static const std::regex tor_re(R"(Z/?([0-9]+))");
  // factors are separated by 'x'
  std::vector<std::string> parts;
  std::string cur;
  for (char c : t) {
    if (c == 'x' || c == '*') {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  for (const auto& p : parts) {
    std::smatch m;
    if (std::regex_match(p, m, free_re)) {
      rank += m[2].matched ? std::stoi(m[2].str()) : 1;
    } else if (std::regex_match(p, m, tor_re)) {
      const auto n = std::stoll(m[1].str());
      if (n == 0) {
        ++rank;
      } else if (n >= 2) {
        torsion.push_back(n);
      }
    } else {
      throw StructuralError("cannot parse group factor '" + p + "' in '" + text + "'");
    }
  }
  return abelian(rank, std::move(torsion));
}

GradeGroup::Kind GradeGroup::kind() const { return impl_->kind; }
bool GradeGroup::is_abelian() const { return impl_->kind == Kind::abelian || impl_->abelian_table; }
bool GradeGroup::is_finite() const { return impl_->kind == Kind::table || impl_->free_rank == 0; }
int GradeGroup::free_rank() const { return impl_->free_rank; }
const std::vector<std::int64_t>& GradeGroup::torsion() const { return impl_->torsion; }
std::size_t GradeGroup::coordinate_count() const {
  return impl_->kind == Kind::table ? 1 : static_cast<std::size_t>(impl_->free_rank) + impl_->torsion.size();
}
std::size_t GradeGroup::table_size() const { return impl_->table.size(); }
const std::vector<std::vector<int>>& GradeGroup::table() const { return impl_->table; }
const std::vector<std::string>& GradeGroup::labels() const { return impl_->labels; }

Cardinal GradeGroup::order() const {
  if (impl_->kind == Kind::table) return Cardinal::of(Integer(static_cast<long>(impl_->table.size())));
  if (impl_->free_rank > 0) return Cardinal::infinite();
  Integer n(1);
  for (auto t : impl_->torsion) n *= Integer(static_cast<long>(t));
  return Cardinal::of(n);
}

GroupElement GradeGroup::identity() const {
  if (impl_->kind == Kind::table) return GroupElement(impl_, {impl_->identity});
  return GroupElement(impl_, std::vector<std::int64_t>(coordinate_count(), 0));
}

GroupElement GradeGroup::element(std::vector<std::int64_t> coords) const {
  if (impl_->kind == Kind::table) {
    if (coords.size() != 1) throw StructuralError("table group elements have one coordinate");
    return element_at(static_cast<int>(coords[0]));
  }
  if (coords.size() != coordinate_count())
    throw StructuralError("element has " + std::to_string(coords.size()) + " coordinates, group " + to_string() + " needs " +
                          std::to_string(coordinate_count()));
  for (std::size_t i = 0; i < impl_->torsion.size(); ++i) {
    auto& c = coords[static_cast<std::size_t>(impl_->free_rank) + i];
    c = mod(c, impl_->torsion[i]);
  }
  return GroupElement(impl_, std::move(coords));
}

GroupElement GradeGroup::element_at(int table_index) const {
  if (impl_->kind != Kind::table) throw StructuralError("element_at needs a table group");
  if (table_index < 0 || table_index >= static_cast<int>(impl_->table.size())) throw StructuralError("table index out of range");
  return GroupElement(impl_, {table_index});
}

GroupElement GradeGroup::element_named(const std::string& label) const {
  for (std::size_t i = 0; i < impl_->labels.size(); ++i)
    if (impl_->labels[i] == label) return element_at(static_cast<int>(i));
  throw StructuralError("no group element named '" + label + "'");
}

GroupElement GradeGroup::parse_element(const std::string& text) const {
  const std::string t = trim(text);
  if (impl_->kind == Kind::table) return element_named(t);
  std::string inner = t;
  if (!inner.empty() && inner.front() == '(') {
    if (inner.back() != ')') throw StructuralError("unbalanced parentheses in '" + text + "'");
    inner = inner.substr(1, inner.size() - 2);
  }
  std::vector<std::int64_t> coords;
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      coords.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw StructuralError("bad group element coordinate '" + item + "'");
    }
  }
  // the trivial group prints its only element as "0"
  if (impl_->free_rank == 0 && impl_->torsion.empty() && coords == std::vector<std::int64_t>{0}) coords.clear();
  return element(std::move(coords));
}

std::vector<GroupElement> GradeGroup::generators() const {
  std::vector<GroupElement> out;
  if (impl_->kind == Kind::table) {
    for (std::size_t i = 0; i < impl_->table.size(); ++i)
      if (static_cast<int>(i) != impl_->identity) out.push_back(element_at(static_cast<int>(i)));
    return out;
  }
  for (std::size_t i = 0; i < coordinate_count(); ++i) {
    std::vector<std::int64_t> c(coordinate_count(), 0);
    c[i] = 1;
    out.push_back(element(std::move(c)));
  }
  return out;
}

std::vector<GroupElement> GradeGroup::elements() const {
  if (!is_finite()) throw NotApplicable("cannot list the elements of an infinite group");
  std::vector<GroupElement> out;
  if (impl_->kind == Kind::table) {
    for (std::size_t i = 0; i < impl_->table.size(); ++i) out.push_back(element_at(static_cast<int>(i)));
    return out;
  }
  const auto& tor = impl_->torsion;
  std::vector<std::int64_t> c(tor.size(), 0);
  for (;;) {
    out.push_back(element(c));
    std::size_t k = 0;
    while (k < c.size() && ++c[k] == tor[k]) c[k++] = 0;
    if (k == c.size()) break;
  }
  return out;
}

std::string GradeGroup::to_string() const {
  if (impl_->kind == Kind::table) return "table(" + std::to_string(impl_->table.size()) + ")";
  std::vector<std::string> parts;
  if (impl_->free_rank == 1) parts.emplace_back("Z");
  if (impl_->free_rank > 1) parts.push_back("Z^" + std::to_string(impl_->free_rank));
  for (auto t : impl_->torsion) parts.push_back("Z/" + std::to_string(t));
  if (parts.empty()) return "trivial";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
  return s;
}

bool operator==(const GradeGroup& a, const GradeGroup& b) {
  if (a.impl_ == b.impl_) return true;
  const auto& x = *a.impl_;
  const auto& y = *b.impl_;
  return x.kind == y.kind && x.free_rank == y.free_rank && x.torsion == y.torsion && x.table == y.table;
}

bool GroupElement::is_identity() const { return *this == group().identity(); }

std::string GroupElement::to_string() const {
  if (!owner_) return "<none>";
  if (owner_->kind == GradeGroup::Kind::table) return owner_->labels[static_cast<std::size_t>(coords_[0])];
  if (coords_.empty()) return "0";
  if (coords_.size() == 1) return std::to_string(coords_[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? "," : "") + std::to_string(coords_[i]);
  return s + ")";
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  if (a.coords_ != b.coords_) return false;
  if (a.owner_ == b.owner_) return true;
  return a.group() == b.group();
}

bool operator<(const GroupElement& a, const GroupElement& b) { return a.coords_ < b.coords_; }

GroupElement group_combine(const GroupElement& g, const GroupElement& h) {
  require_same_owner(g, h);
  const auto& impl = *g.owner_;
  if (impl.kind == GradeGroup::Kind::table)
    return GroupElement(g.owner_, {impl.table[static_cast<std::size_t>(g.coords_[0])][static_cast<std::size_t>(h.coords_[0])]});
  std::vector<std::int64_t> c(g.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = g.coords_[i] + h.coords_[i];
  return g.group().element(std::move(c));
}

GroupElement group_inverse(const GroupElement& g) {
  const auto& impl = *g.owner_;
  if (impl.kind == GradeGroup::Kind::table) return GroupElement(g.owner_, {impl.inverse[static_cast<std::size_t>(g.coords_[0])]});
  std::vector<std::int64_t> c(g.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -g.coords_[i];
  return g.group().element(std::move(c));
}

GroupElement group_difference(const GroupElement& g, const GroupElement& h) { return group_combine(g, group_inverse(h)); }

GroupElement group_power(const GroupElement& g, std::int64_t k) {
  GroupElement base = k < 0 ? group_inverse(g) : g;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  GroupElement result = g.group().identity();
  while (e > 0) {
    if (e & 1U) result = group_combine(result, base);
    base = group_combine(base, base);
    e >>= 1U;
  }
  return result;
}

std::vector<GroupElement> subgroup_elements(const GradeGroup& g, const SubgroupSpec& h) {
  if (!g.is_finite()) throw NotApplicable("subgroup enumeration needs a finite group");
  for (const auto& x : h.generators)
    if (!(x.group() == g)) throw StructuralError("subgroup generator from a different group");
  std::set<GroupElement> seen{g.identity()};
  std::vector<GroupElement> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& a : frontier)
      for (const auto& s : h.generators) {
        auto b = group_combine(a, s);
        if (seen.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

namespace {

IntMatrix relation_matrix(const GradeGroup& g, const SubgroupSpec& h) {
  const std::size_t n = g.coordinate_count();
  const auto& tor = g.torsion();
  IntMatrix m = int_zero(static_cast<Eigen::Index>(tor.size() + h.generators.size()), static_cast<Eigen::Index>(n));
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < tor.size(); ++i, ++row)
    m(row, static_cast<Eigen::Index>(static_cast<std::size_t>(g.free_rank()) + i)) = Integer(static_cast<long>(tor[i]));
  for (const auto& x : h.generators) {
    if (!(x.group() == g)) throw StructuralError("subgroup generator from a different group");
    for (std::size_t j = 0; j < n; ++j) m(row, static_cast<Eigen::Index>(j)) = Integer(static_cast<long>(x.coords()[j]));
    ++row;
  }
  return m;
}

/// (rank, product of nonzero invariants) of the lattice spanned by rows.
std::pair<std::size_t, Integer> lattice_invariants(const IntMatrix& rows) {
  const auto snf = smith_normal_form(rows);
  std::size_t r = 0;
  Integer prod(1);
  for (const auto& d : snf.invariants)
    if (!d.is_zero()) {
      ++r;
      prod *= d;
    }
  return {r, prod};
}

}  // namespace

Cardinal coset_index(const GradeGroup& g, const SubgroupSpec& h) {
  if (g.kind() == GradeGroup::Kind::table) {
    const auto sub = subgroup_elements(g, h);
    return Cardinal::of(Integer(static_cast<long>(g.table_size() / sub.size())));
  }
  return AbelianQuotient(g, h).order();
}

Cardinal relative_index(const GradeGroup& g, const SubgroupSpec& big, const SubgroupSpec& small) {
  if (g.kind() == GradeGroup::Kind::table) {
    const auto b = subgroup_elements(g, big).size();
    const auto s = subgroup_elements(g, small).size();
    return Cardinal::of(Integer(static_cast<long>(b / s)));
  }
  const auto [rb, pb] = lattice_invariants(relation_matrix(g, big));
  const auto [rs, ps] = lattice_invariants(relation_matrix(g, small));
  if (rs < rb) return Cardinal::infinite();
  return Cardinal::of(ps / pb);
}

std::pair<SubgroupSpec, std::size_t> derived_subgroup(const GradeGroup& g) {
  if (g.kind() != GradeGroup::Kind::table) {
    return {SubgroupSpec{}, 1};  // abelian
  }
  std::set<GroupElement> comms;
  const auto all = g.elements();
  for (const auto& a : all)
    for (const auto& b : all)
      comms.insert(group_combine(group_combine(a, b), group_combine(group_inverse(a), group_inverse(b))));
  SubgroupSpec spec{std::vector<GroupElement>(comms.begin(), comms.end())};
  const auto closure = subgroup_elements(g, spec);
  return {spec, closure.size()};
}

AbelianQuotient::AbelianQuotient(GradeGroup g, const SubgroupSpec& h) : group_(std::move(g)) {
  if (group_.kind() != GradeGroup::Kind::abelian) throw NotApplicable("AbelianQuotient needs an fg-abelian group");
  snf_ = smith_normal_form(relation_matrix(group_, h));
  const std::size_t n = group_.coordinate_count();
  diag_.assign(n, Integer(0));
  for (std::size_t i = 0; i < snf_.invariants.size(); ++i) diag_[i] = snf_.invariants[i];
  for (std::size_t i = 0; i < n; ++i) {
    if (diag_[i] == Integer(1)) continue;
    kept_index_.push_back(i);
    kept_.push_back(diag_[i]);
  }
}

std::vector<Integer> AbelianQuotient::coset_coords(const GroupElement& x) const {
  if (!(x.group() == group_)) throw StructuralError("element from a different group");
  std::vector<Integer> out;
  for (std::size_t idx : kept_index_) {
    Integer y(0);
    for (std::size_t j = 0; j < x.coords().size(); ++j)
      y += Integer(static_cast<long>(x.coords()[j])) * snf_.v(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(idx));
    if (!diag_[idx].is_zero()) y = y % diag_[idx];
    out.push_back(y);
  }
  return out;
}

bool AbelianQuotient::same_coset(const GroupElement& a, const GroupElement& b) const {
  return coset_coords(a) == coset_coords(b);
}

bool AbelianQuotient::contains(const GroupElement& x) const {
  for (const auto& c : coset_coords(x))
    if (!c.is_zero()) return false;
  return true;
}

Cardinal AbelianQuotient::order() const {
  Integer n(1);
  for (const auto& d : kept_) {
    if (d.is_zero()) return Cardinal::infinite();
    n *= d;
  }
  return Cardinal::of(n);
}

std::vector<GroupElement> AbelianQuotient::representatives() const {
  if (!order().is_finite()) throw NotApplicable("quotient is infinite");
  const std::size_t n = group_.coordinate_count();
  std::vector<std::int64_t> digits(kept_.size(), 0);
  std::vector<GroupElement> out;
  for (;;) {
    std::vector<std::int64_t> coords(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      Integer x(0);
      for (std::size_t k = 0; k < kept_index_.size(); ++k)
        x += Integer(static_cast<long>(digits[k])) *
             snf_.v_inverse(static_cast<Eigen::Index>(kept_index_[k]), static_cast<Eigen::Index>(j));
      coords[j] = x.to_int64();
    }
    out.push_back(group_.element(std::move(coords)));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == kept_[k].to_int64()) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

}  // namespace gradedalg

// The .alg algebra-definition format.
//
//   # comment
//   [algebra]
//   field = Q                      (or GF(p))
//   group = Z/2 x Z/2              (Z^r x Z/n..., trivial, or table)
//   basis = 1, i, j, k
//
//   [degrees]
//   i = (1,0)
//
//   [products]
//   i * j = k
//   j * i = -k
//
//   [group-table]                  (when group = table)
//   elements = e, a
//   e = e a
//   a = a e
//
//   [constructor]                  (instead of basis/degrees/products)
//   name = quaternion
//   a = -1
//
//   [witness]
//   inverse i = -1*i
//   matrix-unit 1 2 = E12
//
// Products not listed are zero.  Scalars are integers or p/q.
#pragma once

#include "gradedalg/constructors.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gradedalg {

/// Malformed input, with the offending line (0 when not tied to a line).
class ParseError : public StructuralError {
 public:
  ParseError(int line, const std::string& what, const std::string& path = {})
      : StructuralError(location(path, line) + what), line_(line), message_(what) {}
  int line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  static std::string location(const std::string& path, int line) {
    if (path.empty()) return line > 0 ? "line " + std::to_string(line) + ": " : "";
    return path + (line > 0 ? ":" + std::to_string(line) : "") + ": ";
  }
  int line_;
  std::string message_;
};

struct ProductLine {
  std::string left, right, value;
  int line = 0;
};

struct AlgebraDefinition {
  std::string field = "Q";
  std::string group = "trivial";
  std::vector<std::string> basis;
  std::vector<std::pair<std::string, std::string>> degrees;
  std::vector<ProductLine> products;
  std::vector<std::string> table_elements;
  std::vector<std::vector<std::string>> table_rows;
  std::string constructor;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, std::string>> witnesses;

  std::optional<std::string> parameter(const std::string& key) const;
};

AlgebraDefinition parse_algebra_definition(const std::string& text);
AlgebraDefinition load_algebra_definition(const std::string& path);

/// The grade group named by a definition (table groups from [group-table],
/// S3 / D4 by name).
GradeGroup definition_group(const AlgebraDefinition& def);

std::vector<std::string> split_list(const std::string& text, char sep);
std::string trim_copy(const std::string& s);

/// Parses "2*i - 1/2*k", "-x*y", "3" (a multiple of `unit`) against the
/// labels.
template <class S>
Vector<S> parse_element(const Field<S>& f, const std::vector<std::string>& labels, const Vector<S>& unit, const std::string& text, int line = 0) {
  const auto n = static_cast<Index>(labels.size());
  Vector<S> out = zero_vector(f, n);
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw ParseError(line, "empty element");
  if (s == "0") return out;
  std::vector<std::pair<bool, std::string>> terms;
  std::size_t start = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    start = 1;
  }
  for (std::size_t i = start; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '+' || s[i] == '-') {
      if (i == start) throw ParseError(line, "malformed element '" + text + "'");
      terms.emplace_back(negative, s.substr(start, i - start));
      if (i < s.size()) negative = s[i] == '-';
      start = i + 1;
    }
  }
  auto index_of = [&](const std::string& l) -> Index {
    for (Index i = 0; i < n; ++i)
      if (labels[static_cast<std::size_t>(i)] == l) return i;
    return -1;
  };
  for (const auto& [neg, t] : terms) {
    S coeff = f.one();
    Vector<S> base;
    if (const Index k = index_of(t); k >= 0) {
      base = unit_vector(f, n, k);
    } else if (const auto star = t.find('*'); star != std::string::npos && index_of(t.substr(star + 1)) >= 0) {
      try {
        coeff = f.parse(t.substr(0, star));
      } catch (const std::exception&) {
        throw ParseError(line, "bad coefficient '" + t.substr(0, star) + "'");
      }
      base = unit_vector(f, n, index_of(t.substr(star + 1)));
    } else {
      try {
        coeff = f.parse(t);
      } catch (const std::exception&) {
        throw ParseError(line, "unknown basis label in '" + t + "'");
      }
      if (is_zero_vector<S>(unit)) throw ParseError(line, "bare scalar '" + t + "' needs a basis element named 1");
      base = unit;
    }
    out += base * (neg ? -coeff : coeff);
  }
  return out;
}

/// A definition turned into a graded ring.  `finite` is set when the ring
/// is a finite-dimensional graded algebra.
template <class S>
struct LoadedAlgebra {
  GradedRingPtr<S> ring;
  std::shared_ptr<const GradedAlgebra<S>> finite;
  /// Set for group rings, which the group-ring Azumaya route needs.
  std::optional<GradeGroup> group_ring_group;
  /// A separability idempotent known in closed form.
  std::optional<Vector<S>> separability;
  /// Shifted matrix ring view, when the definition builds one.
  std::shared_ptr<const ShiftedMatrixAlgebra<S>> shifted;
};

namespace detail {

template <class S>
S parameter_scalar(const Field<S>& f, const AlgebraDefinition& d, const std::string& key, std::optional<long long> fallback = std::nullopt) {
  const auto v = d.parameter(key);
  if (!v) {
    if (fallback) return f.from_int(*fallback);
    throw ParseError(0, "constructor '" + d.constructor + "' needs parameter '" + key + "'");
  }
  try {
    return f.parse(*v);
  } catch (const std::exception&) {
    throw ParseError(0, "bad scalar '" + *v + "' for parameter '" + key + "'");
  }
}

inline long long parameter_int(const AlgebraDefinition& d, const std::string& key, std::optional<long long> fallback = std::nullopt) {
  const auto v = d.parameter(key);
  if (!v) {
    if (fallback) return *fallback;
    throw ParseError(0, "constructor '" + d.constructor + "' needs parameter '" + key + "'");
  }
  try {
    return std::stoll(*v);
  } catch (const std::exception&) {
    throw ParseError(0, "bad integer '" + *v + "' for parameter '" + key + "'");
  }
}

inline std::vector<std::int64_t> parameter_tuple(const AlgebraDefinition& d, const std::string& key) {
  const auto v = d.parameter(key);
  if (!v) throw ParseError(0, "constructor '" + d.constructor + "' needs parameter '" + key + "'");
  std::string s = trim_copy(*v);
  if (!s.empty() && s.front() == '(') s = s.substr(1);
  if (!s.empty() && s.back() == ')') s.pop_back();
  std::vector<std::int64_t> out;
  for (const auto& p : split_list(s, ',')) out.push_back(std::stoll(p));
  return out;
}

template <class S>
GradedAlgebra<S> attach_witnesses(const GradedAlgebra<S>& a, const AlgebraDefinition& def) {
  if (def.witnesses.empty()) return a;
  Witnesses<S> w = a.witnesses();
  const auto& alg = a.algebra();
  for (const auto& [key, value] : def.witnesses) {
    const auto words = split_list(key, ' ');
    if (words.size() == 2 && words[0] == "inverse") {
      Index idx = -1;
      for (Index i = 0; i < alg.dim(); ++i)
        if (alg.label(i) == words[1]) idx = i;
      if (idx < 0) throw ParseError(0, "inverse witness for unknown label '" + words[1] + "'");
      w.basis_inverses[idx] = parse_element(alg.field(), alg.labels(), alg.unit(), value);
    } else if (words.size() == 3 && words[0] == "matrix-unit") {
      const auto i = std::stoul(words[1]), j = std::stoul(words[2]);
      if (i < 1 || j < 1) throw ParseError(0, "matrix-unit indices start at 1");
      const auto n = std::max(i, j);
      if (w.matrix_units.size() < n) w.matrix_units.resize(n);
      for (auto& row : w.matrix_units) row.resize(std::max(row.size(), n));
      w.matrix_units[i - 1][j - 1] = parse_element(alg.field(), alg.labels(), alg.unit(), value);
    } else {
      throw ParseError(0, "unknown witness '" + key + "'");
    }
  }
  for (const auto& row : w.matrix_units)
    for (const auto& e : row)
      if (e.size() == 0) throw ParseError(0, "matrix-unit family is incomplete");
  for (const auto& [i, inv] : w.basis_inverses)
    if (!(alg.multiply(alg.basis(i), inv) == alg.unit()) || !(alg.multiply(inv, alg.basis(i)) == alg.unit()))
      throw ParseError(0, "inverse witness for " + alg.label(i) + " is not a two-sided inverse");
  // e_ij e_kl = delta_jk e_il and sum e_ii = 1
  const std::size_t n = w.matrix_units.size();
  Vector<S> diag = alg.zero();
  for (std::size_t i = 0; i < n; ++i) {
    diag += w.matrix_units[i][i];
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Vector<S> want = j == k ? w.matrix_units[i][l] : alg.zero();
          if (!(alg.multiply(w.matrix_units[i][j], w.matrix_units[k][l]) == want))
            throw ParseError(0, "matrix-unit witnesses fail e_" + std::to_string(i + 1) + std::to_string(j + 1) + " e_" + std::to_string(k + 1) +
                                    std::to_string(l + 1));
        }
  }
  if (n > 0 && !(diag == alg.unit())) throw ParseError(0, "matrix-unit witnesses do not sum to 1 on the diagonal");
  return a.with_witnesses(std::move(w));
}

template <class S>
LoadedAlgebra<S> from_constructor(const Field<S>& f, const AlgebraDefinition& def) {
  LoadedAlgebra<S> out;
  const std::string& name = def.constructor;
  auto finish = [&](GradedAlgebra<S> a) {
    auto p = std::make_shared<const GradedAlgebra<S>>(attach_witnesses(a, def));
    out.finite = p;
    out.ring = p;
  };
  if (name == "quaternion") {
    const S a = parameter_scalar(f, def, "a"), b = parameter_scalar(f, def, "b");
    finish(quaternion_algebra(f, a, b, parse_quaternion_grading(def.parameter("grading").value_or("Z2xZ2"))));
    out.separability = quaternion_separability_idempotent(f, a, b);
  } else if (name == "symbol") {
    finish(symbol_algebra(f, static_cast<Index>(parameter_int(def, "n")), parameter_scalar(f, def, "a"), parameter_scalar(f, def, "b"),
                          parameter_scalar(f, def, "xi")));
  } else if (name == "group-ring") {
    const GradeGroup g = definition_group(def);
    finish(group_ring(f, g));
    out.group_ring_group = g;
  } else if (name == "matrix") {
    const auto n = static_cast<Index>(parameter_int(def, "n"));
    if (def.parameter("shift")) {
      const GradeGroup g = definition_group(def);
      std::vector<GroupElement> gamma;
      for (const auto& t : split_list(*def.parameter("shift"), ';')) gamma.push_back(g.parse_element(t));
      finish(matrix_algebra(f, n, gamma));
    } else {
      finish(matrix_algebra(f, n));
    }
  } else if (name == "m2-r") {
    finish(m2_grading_r(f));
  } else if (name == "m2-s") {
    finish(m2_grading_s(f));
  } else if (name == "split-product") {
    finish(split_product(f, definition_group(def)));
  } else if (name == "field") {
    finish(trivially_graded(field_algebra(f), definition_group(def)));
  } else if (name == "laurent") {
    out.ring = laurent(field_algebra(f), parameter_int(def, "step", 1));
  } else if (name == "laurent-matrix") {
    auto m = std::make_shared<const ShiftedMatrixAlgebra<S>>(laurent_matrix_ring(f, parameter_int(def, "step", 2), parameter_tuple(def, "shift")));
    out.shifted = m;
    out.ring = m;
  } else {
    throw ParseError(0, "unknown constructor '" + name + "'");
  }
  return out;
}

}  // namespace detail

template <class S>
LoadedAlgebra<S> build_algebra(const Field<S>& f, const AlgebraDefinition& def) {
  if (!def.constructor.empty()) return detail::from_constructor(f, def);
  if (def.basis.empty()) throw ParseError(0, "no basis given");
  const GradeGroup g = definition_group(def);
  const auto n = static_cast<Index>(def.basis.size());
  std::map<std::string, Index> index;
  for (Index i = 0; i < n; ++i)
    if (!index.emplace(def.basis[static_cast<std::size_t>(i)], i).second)
      throw ParseError(0, "duplicate basis label '" + def.basis[static_cast<std::size_t>(i)] + "'");
  // A bare scalar in a product is a multiple of the basis element named 1.
  Vector<S> one_label = zero_vector(f, n);
  if (const auto it = index.find("1"); it != index.end()) one_label = unit_vector(f, n, it->second);
  std::vector<Vector<S>> dense(static_cast<std::size_t>(n * n), zero_vector(f, n));
  std::vector<bool> seen(static_cast<std::size_t>(n * n), false);
  for (const auto& p : def.products) {
    const auto li = index.find(p.left), ri = index.find(p.right);
    if (li == index.end() || ri == index.end()) throw ParseError(p.line, "unknown basis label in product");
    const auto k = static_cast<std::size_t>(li->second * n + ri->second);
    if (seen[k]) throw ParseError(p.line, "product " + p.left + " * " + p.right + " given twice");
    seen[k] = true;
    dense[k] = parse_element(f, def.basis, one_label, p.value, p.line);
  }
  std::vector<SparseVector<S>> products;
  for (const auto& d : dense) products.push_back(sparsify(d));
  std::optional<Vector<S>> unit;
  Algebra<S> alg(f, def.basis, std::move(products), unit, Validation::full);
  std::vector<GroupElement> degrees(static_cast<std::size_t>(n), g.identity());
  for (const auto& [label, text] : def.degrees) {
    const auto it = index.find(label);
    if (it == index.end()) throw ParseError(0, "degree for unknown label '" + label + "'");
    degrees[static_cast<std::size_t>(it->second)] = g.parse_element(text);
  }
  LoadedAlgebra<S> out;
  auto p = std::make_shared<const GradedAlgebra<S>>(detail::attach_witnesses(GradedAlgebra<S>(std::move(alg), g, degrees), def));
  out.finite = p;
  out.ring = p;
  return out;
}

/// Canonical text.  Constructor definitions keep their parameters (sorted by
/// key); explicit ones are re-rendered from the built algebra, so parse and
/// serialize agree on a fixed point.
template <class S>
std::string serialize_definition(const Field<S>& f, const AlgebraDefinition& def) {
  std::string out = "[algebra]\nfield = " + f.spec().to_string() + "\n";
  const bool table = def.group == "table";
  if (!def.constructor.empty()) {
    out += "group = " + trim_copy(def.group) + "\n";
    out += "\n[constructor]\nname = " + def.constructor + "\n";
    auto params = def.parameters;
    std::sort(params.begin(), params.end());
    for (const auto& [k, v] : params) out += k + " = " + trim_copy(v) + "\n";
  } else {
    const auto loaded = build_algebra(f, def);
    const auto& a = *loaded.finite;
    const auto& alg = a.algebra();
    out += "group = " + trim_copy(def.group) + "\nbasis = ";
    for (Index i = 0; i < alg.dim(); ++i) out += (i ? ", " : "") + alg.label(i);
    out += "\n\n[degrees]\n";
    for (Index i = 0; i < alg.dim(); ++i) out += alg.label(i) + " = " + a.degree(i).to_string() + "\n";
    out += "\n[products]\n";
    for (Index i = 0; i < alg.dim(); ++i)
      for (Index j = 0; j < alg.dim(); ++j) {
        const Vector<S> p = alg.multiply(alg.basis(i), alg.basis(j));
        if (is_zero_vector<S>(p)) continue;
        out += alg.label(i) + " * " + alg.label(j) + " = " + format_element(alg, p) + "\n";
      }
  }
  if (table) {
    out += "\n[group-table]\nelements = ";
    for (std::size_t i = 0; i < def.table_elements.size(); ++i) out += (i ? ", " : "") + def.table_elements[i];
    out += "\n";
    for (std::size_t i = 0; i < def.table_rows.size(); ++i) {
      out += def.table_elements[i] + " =";
      for (const auto& e : def.table_rows[i]) out += " " + e;
      out += "\n";
    }
  }
  if (!def.witnesses.empty()) {
    out += "\n[witness]\n";
    auto w = def.witnesses;
    std::sort(w.begin(), w.end());
    for (const auto& [k, v] : w) out += k + " = " + trim_copy(v) + "\n";
  }
  return out;
}

}  // namespace gradedalg

#include "gradedalg/algebra_file.hpp"

#include <fstream>
#include <sstream>

namespace gradedalg {

std::string trim_copy(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      if (sep != ' ' || !trim_copy(cur).empty()) out.push_back(trim_copy(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim_copy(cur).empty() || (sep != ' ' && !out.empty())) out.push_back(trim_copy(cur));
  return out;
}

std::optional<std::string> AlgebraDefinition::parameter(const std::string& key) const {
  for (const auto& [k, v] : parameters)
    if (k == key) return v;
  return std::nullopt;
}

AlgebraDefinition parse_algebra_definition(const std::string& text) {
  AlgebraDefinition def;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line = 0;
  bool have_basis = false;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string l = trim_copy(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (l.empty()) continue;
    if (l.front() == '[') {
      if (l.back() != ']') throw ParseError(line, "unterminated section header");
      section = trim_copy(l.substr(1, l.size() - 2));
      if (section != "algebra" && section != "degrees" && section != "products" && section != "group-table" && section != "constructor" &&
          section != "witness")
        throw ParseError(line, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = l.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected 'key = value'");
    const std::string key = trim_copy(l.substr(0, eq));
    const std::string value = trim_copy(l.substr(eq + 1));
    if (key.empty()) throw ParseError(line, "missing key");
    if (section.empty()) throw ParseError(line, "entry outside any section");
    if (section == "algebra") {
      if (key == "field") {
        try {
          def.field = FieldSpec::parse(value).to_string();
        } catch (const std::exception& e) {
          throw ParseError(line, e.what());
        }
      } else if (key == "group") {
        def.group = value;
      } else if (key == "basis") {
        def.basis = split_list(value, ',');
        for (const auto& b : def.basis)
          if (b.empty() || b.find_first_of("+-=, ") != std::string::npos) throw ParseError(line, "bad basis label '" + b + "'");
        have_basis = true;
      } else {
        throw ParseError(line, "unknown key '" + key + "' in [algebra]");
      }
    } else if (section == "degrees") {
      def.degrees.emplace_back(key, value);
    } else if (section == "products") {
      const auto star = key.find('*');
      if (star == std::string::npos) throw ParseError(line, "expected 'a * b = value'");
      // Labels may contain '*', so split at " * " when present.
      auto sp = key.find(" * ");
      ProductLine p;
      if (sp != std::string::npos) {
        p.left = trim_copy(key.substr(0, sp));
        p.right = trim_copy(key.substr(sp + 3));
      } else {
        p.left = trim_copy(key.substr(0, star));
        p.right = trim_copy(key.substr(star + 1));
      }
      p.value = value;
      p.line = line;
      def.products.push_back(std::move(p));
    } else if (section == "group-table") {
      if (key == "elements")
        def.table_elements = split_list(value, ',');
      else {
        def.table_rows.push_back(split_list(value, ' '));
        if (def.table_rows.size() > def.table_elements.size() || def.table_elements[def.table_rows.size() - 1] != key)
          throw ParseError(line, "group table rows must follow the element order");
      }
    } else if (section == "constructor") {
      if (key == "name")
        def.constructor = value;
      else
        def.parameters.emplace_back(key, value);
    } else if (section == "witness") {
      def.witnesses.emplace_back(key, value);
    }
  }
  if (def.constructor.empty() && !have_basis) throw ParseError(0, "definition has neither a basis nor a constructor");
  if (def.group == "table" && def.table_rows.size() != def.table_elements.size()) throw ParseError(0, "group table is incomplete");
  return def;
}

AlgebraDefinition load_algebra_definition(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(0, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return parse_algebra_definition(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message(), path);
  }
}

GradeGroup definition_group(const AlgebraDefinition& def) {
  const std::string g = trim_copy(def.group);
  if (g == "S3") return symmetric_group_s3();
  if (g == "D4") return dihedral_group_d4();
  if (g != "table") {
    try {
      return GradeGroup::parse(g);
    } catch (const std::exception& e) {
      throw ParseError(0, std::string("bad group: ") + e.what());
    }
  }
  const auto n = def.table_elements.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  auto index_of = [&](const std::string& x) {
    for (std::size_t i = 0; i < n; ++i)
      if (def.table_elements[i] == x) return static_cast<int>(i);
    throw ParseError(0, "unknown group element '" + x + "' in table");
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (def.table_rows[i].size() != n) throw ParseError(0, "group table row " + def.table_elements[i] + " has the wrong length");
    for (std::size_t j = 0; j < n; ++j) table[i][j] = index_of(def.table_rows[i][j]);
  }
  return GradeGroup::from_table(std::move(table), def.table_elements);
}

}  // namespace gradedalg

// gradedalg: batch front end.  Every command prints one JSON report per
// line; `construct` prints a definition file instead.
//
// Exit codes: 0 all verdicts true, 1 a verdict is false, 2 undecided,
// 3 input error.

#include "gradedalg/algebra_file.hpp"
#include "gradedalg/azumaya.hpp"
#include "gradedalg/ktheory.hpp"
#include "gradedalg/reduced_trace.hpp"
#include "gradedalg/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace gradedalg;

namespace {

constexpr int exit_input_error = 3;

struct Common {
  std::uint64_t seed = 20240601;
  unsigned threads = 1;
  std::string field;
};

struct Input {
  std::string path;
  std::string text;
  AlgebraDefinition def;
};

Input read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  Input out{path, ss.str(), {}};
  try {
    out.def = parse_algebra_definition(out.text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message(), path);
  }
  return out;
}

/// build_algebra with diagnostics prefixed by the input path.
template <class S>
LoadedAlgebra<S> build(const Field<S>& f, const Input& in) {
  try {
    return build_algebra(f, in.def);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message(), in.path);
  } catch (const NotApplicable&) {
    throw;
  } catch (const StructuralError& e) {
    throw ParseError(0, e.what(), in.path);
  }
}

SearchOptions search_options(const Common& c) {
  SearchOptions o;
  o.seed = c.seed;
  o.threads = std::max(1u, c.threads);
  return o;
}

FieldSpec field_of(const Common& c, const std::string& fallback) { return FieldSpec::parse(c.field.empty() ? fallback : c.field); }

/// Runs `body` with the field named by `spec`.
template <class Body>
int with_field(const FieldSpec& spec, Body&& body) {
  if (spec.kind == FieldKind::rationals) return body(Field<Rational>());
  return body(Field<Fp>(spec.characteristic));
}

int emit(ReportRecord r) {
  std::cout << to_json_line(r) << "\n";
  return exit_code(r.verdicts);
}

VerdictReport not_applicable(const std::string& predicate, const std::string& why) {
  return VerdictReport::make(predicate, Truth::undecided, Strategy::constructive, "not applicable: " + why);
}

template <class S>
const GradedAlgebra<S>& require_finite(const LoadedAlgebra<S>& l) {
  if (!l.finite) throw NotApplicable("needs a finite-dimensional algebra");
  return *l.finite;
}

// ---- check ----------------------------------------------------------------

template <class S>
VerdictReport azumaya_verdict(const LoadedAlgebra<S>& l, const std::string& via, const SearchOptions& opts) {
  if (via == "graded-csa") return is_graded_azumaya_csa(*l.ring, opts);
  if (via == "group-ring") {
    if (!l.group_ring_group) throw NotApplicable("--via group-ring needs a group-ring constructor");
    return group_ring_azumaya(l.ring->field(), *l.group_ring_group);
  }
  const auto& a = require_finite(l).algebra();
  if (via == "psi") return psi_bijective(a);
  EnvelopingAlgebra<S> env(a);
  std::optional<Vector<S>> e = l.separability;
  std::string source = "closed form";
  if (!e) {
    e = find_separability_idempotent(env);
    source = "linear solve";
  }
  if (!e) return VerdictReport::make("braun", Truth::no, Strategy::exhaustive, "no e in A^e with e*1 = 1 and (a(x)1)e = (1(x)a)e");
  auto sep = verify_separability_idempotent(env, *e);
  sep.notes.push_back("separability element from " + source);
  return conjunction("azumaya_braun", {std::move(sep), braun_check(env, *e)});
}

template <class S>
VerdictReport check_verdict(const LoadedAlgebra<S>& l, const std::string& predicate, const std::string& via, const SearchOptions& opts) {
  const auto& r = *l.ring;
  if (predicate == "grading") return validate_grading(require_finite(l));
  if (predicate == "strongly-graded") return is_strongly_graded(r);
  if (predicate == "crossed-product") return is_crossed_product(r, opts);
  if (predicate == "graded-division") return is_graded_division(r, opts);
  if (predicate == "graded-simple") return is_graded_simple(r, opts);
  if (predicate == "graded-central") return graded_center_is_scalars(r);
  if (predicate == "centre-graded") {
    const auto& a = require_finite(l);
    const auto gc = graded_center(a);
    if (gc.is_graded)
      return VerdictReport::make("centre_graded", Truth::yes, Strategy::exhaustive,
                                 "Z(A) of dimension " + std::to_string(gc.center.dim()) + " is spanned by homogeneous elements");
    return VerdictReport::make("centre_graded", Truth::no, Strategy::exhaustive,
                               format_element(a.algebra(), *gc.witness) + " is central but its component of degree " +
                                   gc.witness_degree->to_string() + " is not");
  }
  if (predicate == "azumaya") return azumaya_verdict(l, via, opts);
  if (predicate == "central-simple") return is_central_simple(require_finite(l).algebra(), opts);
  if (predicate == "semisimple") return semisimplicity(require_finite(l).algebra());
  if (predicate == "good-grading") {
    const auto gamma = is_good_grading(require_finite(l));
    if (!gamma) return VerdictReport::make("good_grading", Truth::no, Strategy::exhaustive, "some matrix unit is not homogeneous");
    std::string w = "gamma = (";
    for (std::size_t i = 0; i < gamma->size(); ++i) w += (i ? "," : "") + (*gamma)[i].to_string();
    return VerdictReport::make("good_grading", Truth::yes, Strategy::exhaustive, w + ")");
  }
  throw StructuralError("unknown predicate '" + predicate + "'");
}

int run_check(const Common& c, const std::string& predicate, const std::string& via, const std::string& path) {
  const auto in = read_input(path);
  return with_field(field_of(c, in.def.field), [&](const auto& f) {
    const auto loaded = build(f, in);
    ReportRecord rec{"check " + predicate, path, fnv1a_hex(in.text), {}, {}};
    try {
      rec.verdicts.push_back(check_verdict(loaded, predicate, via, search_options(c)));
    } catch (const NotApplicable& e) {
      rec.verdicts.push_back(not_applicable(predicate, e.what()));
    }
    rec.values.emplace_back("ring", loaded.ring->description());
    return emit(std::move(rec));
  });
}

// ---- k0 -------------------------------------------------------------------

template <class S>
K0Value graded_k0(const GradedRing<S>& r, const SearchOptions& opts, std::string& route) {
  if (r.group().is_abelian() && is_graded_division(r, opts).holds()) {
    route = "graded division ring: free on Gamma / Gamma_D";
    return k0gr_graded_division(r.group(), support_subgroup(r));
  }
  route = "strongly graded: K_0 of the identity component";
  return k0gr_strongly_graded(r, opts);
}

/// Support of the graded centre of a finite graded algebra, as a subgroup.
template <class S>
SubgroupSpec centre_support(const GradedAlgebra<S>& a) {
  const auto sup = a.support_elements();
  SubgroupSpec out;
  for (const auto& g : sup)
    if (graded_center_component(a, sup, g).dim() > 0) out.generators.push_back(g);
  return out;
}

int run_k0(const Common& c, bool graded, bool exact_sequence, std::optional<long long> matrix_size, std::optional<long long> index,
           std::optional<long long> compare_n, const std::string& path) {
  ReportRecord rec;
  rec.command = "k0";
  if (exact_sequence && path.empty()) {
    if (!matrix_size) throw StructuralError("--exact-sequence needs a file or --matrix-size");
    CsaShape shape{Integer(*matrix_size), Integer(index.value_or(1))};
    const auto v = ck0_zk0(shape);
    rec.command = "k0 --exact-sequence";
    rec.input = "M_" + std::to_string(*matrix_size) + "(D), index " + std::to_string(index.value_or(1));
    rec.digest = fnv1a_hex(rec.input);
    rec.values.emplace_back("ZK0", v.zk0.to_string());
    rec.values.emplace_back("CK0", v.ck0.to_string());
    rec.verdicts.push_back(exact_sequence_bookkeeping(shape));
    rec.verdicts.push_back(torsion_bound_check(v.ck0, shape.matrix_size * shape.index));
    return emit(std::move(rec));
  }
  if (path.empty()) throw StructuralError("k0 needs an input file");
  const auto in = read_input(path);
  rec.input = path;
  rec.digest = fnv1a_hex(in.text);
  return with_field(field_of(c, in.def.field), [&](const auto& f) {
    using S = typename std::decay_t<decltype(f)>::Scalar;
    const auto loaded = build(f, in);
    const auto opts = search_options(c);
    try {
      if (exact_sequence) {
        rec.command = "k0 --exact-sequence";
        const auto& a = require_finite(loaded).algebra();
        const auto dec = split_identity_component(a, opts);
        if (dec.blocks.size() != 1 || !dec.blocks.front().resolved) throw NotApplicable("not a resolved simple algebra: " + dec.to_string());
        const auto& b = dec.blocks.front();
        Index idx = 1;
        while (idx * idx < b.division_dim) ++idx;
        if (idx * idx != b.division_dim) throw NotApplicable("division part of dimension " + std::to_string(b.division_dim) + " is not central");
        CsaShape shape{Integer(static_cast<long long>(b.matrix_size)), Integer(static_cast<long long>(idx))};
        const auto v = ck0_zk0(shape);
        rec.values.emplace_back("decomposition", dec.to_string());
        rec.values.emplace_back("ZK0", v.zk0.to_string());
        rec.values.emplace_back("CK0", v.ck0.to_string());
        rec.verdicts.push_back(exact_sequence_bookkeeping(shape));
        rec.verdicts.push_back(torsion_bound_check(v.ck0, shape.matrix_size * shape.index));
        return emit(std::move(rec));
      }
      if (!graded && !compare_n) {
        const auto dec = split_identity_component(require_finite(loaded).algebra(), opts);
        K0Value v;
        int resolved = 0;
        for (const auto& b : dec.blocks) {
          if (b.resolved)
            ++resolved;
          else
            v.unresolved.push_back("block of dimension " + std::to_string(b.division_dim));
        }
        v.group = FGAbelianGroup::free(resolved);
        rec.values.emplace_back("decomposition", dec.to_string());
        rec.values.emplace_back("K0", v.to_string());
        if (!v.exact()) rec.verdicts.push_back(VerdictReport::make("k0", Truth::undecided, Strategy::sampled, "unresolved blocks"));
        return emit(std::move(rec));
      }
      std::string route;
      const K0Value k = graded_k0(*loaded.ring, opts, route);
      rec.command = compare_n ? "k0 --compare-localized" : "k0 --graded";
      rec.values.emplace_back("K0gr", k.to_string());
      rec.values.emplace_back("route", route);
      if (!compare_n) {
        if (!k.exact()) rec.verdicts.push_back(VerdictReport::make("k0gr", Truth::undecided, Strategy::sampled, "value not finitely generated or unresolved"));
        return emit(std::move(rec));
      }
      // The graded centre, viewed as a graded field.
      K0Value kf;
      if (loaded.ring->is_commutative()) {
        kf = k;
      } else {
        const auto& a = require_finite(loaded);
        const auto central = graded_center_is_scalars(a);
        if (!central.holds()) throw NotApplicable("graded centre is not the scalar field: " + central.witness);
        kf = k0gr_graded_division(a.group(), centre_support<S>(a));
      }
      rec.values.emplace_back("K0gr(centre)", kf.to_string());
      if (!k.exact() || !kf.exact()) throw NotApplicable("K-groups are not finitely generated");
      rec.verdicts.push_back(compare_localized(k.group, kf.group, Integer(*compare_n)));
    } catch (const NotApplicable& e) {
      rec.verdicts.push_back(not_applicable("k0", e.what()));
    }
    return emit(std::move(rec));
  });
}

// ---- classify-shift -------------------------------------------------------

std::vector<GroupElement> parse_shift(const GradeGroup& g, const std::string& text) {
  std::string s = trim_copy(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw StructuralError("shift vector '" + text + "' must be parenthesised");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> items;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  items.push_back(cur);
  std::vector<GroupElement> out;
  for (const auto& it : items) out.push_back(g.parse_element(trim_copy(it)));
  return out;
}

template <class S>
VerdictReport verify_shift_witness(const GradedRingPtr<S>& base, const std::vector<GroupElement>& lambda, const std::vector<GroupElement>& gamma,
                                   const ShiftWitness& w, const SearchOptions& opts) {
  const ShiftedMatrixAlgebra<S> from(base, lambda), to(base, gamma);
  const auto fa = from.materialize(), ta = to.materialize();
  if (!fa || !ta) return not_applicable("witness_verified", "infinite support, the rings cannot be materialised");
  const Matrix<S> images = induced_isomorphism(from, *fa, to, *ta, w, opts);
  auto v = verify_graded_isomorphism(*fa, *ta, images);
  v.predicate = "witness_verified";
  return v;
}

int run_classify_shift(const Common& c, const std::string& base_spec, const std::string& group_spec, const std::string& lambda_text,
                       const std::string& gamma_text) {
  const GradeGroup g = GradeGroup::parse(group_spec);
  const auto lambda = parse_shift(g, lambda_text), gamma = parse_shift(g, gamma_text);
  return with_field(field_of(c, "Q"), [&](const auto& f) {
    using S = typename std::decay_t<decltype(f)>::Scalar;
    GradedRingPtr<S> base;
    if (base_spec == "trivial-K") {
      base = std::make_shared<const GradedAlgebra<S>>(trivially_graded(field_algebra(f), g));
    } else if (base_spec.rfind("laurent:", 0) == 0) {
      if (!(g == GradeGroup::parse("Z"))) throw StructuralError("laurent bases are graded by Z");
      base = laurent(field_algebra(f), std::stoll(base_spec.substr(8)));
    } else {
      throw StructuralError("unknown base '" + base_spec + "' (expected trivial-K or laurent:k)");
    }
    ReportRecord rec;
    rec.command = "classify-shift";
    rec.input = base_spec + " over " + f.spec().to_string() + ", " + group_spec + ": " + lambda_text + " vs " + gamma_text;
    rec.digest = fnv1a_hex(rec.input);
    rec.values.emplace_back("canonical(lambda)", canonical_shift(*base, lambda).to_string());
    rec.values.emplace_back("canonical(gamma)", canonical_shift(*base, gamma).to_string());
    const auto decision = shifted_iso_decision(*base, lambda, gamma);
    rec.verdicts.push_back(decision.report);
    if (decision.witness) {
      // a witness that cannot be checked is noted, not reported as undecided
      try {
        auto v = verify_shift_witness(base, lambda, gamma, *decision.witness, search_options(c));
        if (v.truth == Truth::undecided)
          rec.values.emplace_back("witness check", "skipped: " + v.witness);
        else
          rec.verdicts.push_back(std::move(v));
      } catch (const NotApplicable& e) {
        rec.values.emplace_back("witness check", std::string("skipped: ") + e.what());
      }
    }
    return emit(std::move(rec));
  });
}

// ---- commutators ----------------------------------------------------------

int run_commutators(const Common& c, const std::string& path) {
  const auto in = read_input(path);
  return with_field(field_of(c, in.def.field), [&](const auto& f) {
    const auto loaded = build(f, in);
    ReportRecord rec{"commutators", path, fnv1a_hex(in.text), {}, {}};
    try {
      const auto& d = require_finite(loaded);
      const auto& a = d.algebra();
      const auto comm = commutator_subspace(a);
      rec.values.emplace_back("dim [A,A]", std::to_string(comm.dim()));
      std::string supp = "{";
      const auto cs = commutator_support(d);
      for (std::size_t i = 0; i < cs.size(); ++i) supp += (i ? ", " : "") + cs[i].to_string();
      rec.values.emplace_back("Supp [A,A]", supp + "}");
      rec.verdicts.push_back(central_commutators_imply_commutative_check(a));
      if (is_graded_division(d, search_options(c)).holds()) rec.verdicts.push_back(supp_commutator_lemma_check(d));
      try {
        rec.verdicts.push_back(trd_kernel_check(a));
      } catch (const NotApplicable& e) {
        rec.values.emplace_back("trd", std::string("not applicable: ") + e.what());
      }
    } catch (const NotApplicable& e) {
      rec.verdicts.push_back(not_applicable("commutators", e.what()));
    }
    return emit(std::move(rec));
  });
}

// ---- construct ------------------------------------------------------------

int run_construct(const Common& c, const std::string& name, const std::string& group, const std::vector<std::string>& params) {
  AlgebraDefinition def;
  def.field = field_of(c, "Q").to_string();
  def.group = group.empty() ? "trivial" : group;
  def.constructor = name;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw StructuralError("parameter '" + p + "' is not key=value");
    def.parameters.emplace_back(trim_copy(p.substr(0, eq)), trim_copy(p.substr(eq + 1)));
  }
  return with_field(FieldSpec::parse(def.field), [&](const auto& f) {
    build_algebra(f, def);
    std::cout << serialize_definition(f, def);
    return 0;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded algebras over exact fields: structural predicates and K_0-level invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--seed", common.seed, "Seed for sampled searches");
  app.add_option("--threads", common.threads, "Worker threads (results do not depend on it)");
  app.add_option("--field", common.field, "Override the field: Q or GF(p)");

  std::string predicate, via = "psi", path;
  auto* check = app.add_subcommand("check", "Decide a predicate for an algebra file");
  check->add_option("predicate", predicate, "grading, strongly-graded, crossed-product, graded-division, graded-simple, "
                                            "graded-central, centre-graded, azumaya, central-simple, semisimple, good-grading")
      ->required();
  check->add_option("--via", via, "Azumaya route")->check(CLI::IsMember({"psi", "braun", "graded-csa", "group-ring"}));
  check->add_option("file", path)->required();

  bool graded = false, exact = false;
  std::optional<long long> matrix_size, index, compare_n;
  std::string k0_path;
  auto* k0 = app.add_subcommand("k0", "K_0, K_0^gr and the ZK_0 / CK_0 sequence");
  k0->add_flag("--graded", graded, "Graded K_0");
  k0->add_flag("--exact-sequence", exact, "ZK_0 and CK_0 of a central simple algebra");
  k0->add_option("--matrix-size", matrix_size, "n for M_n(D) when no file is given");
  k0->add_option("--index", index, "Index of D when no file is given");
  k0->add_option("--compare-localized", compare_n, "Compare K_0^gr of the algebra and of its graded centre after inverting n");
  k0->add_option("file", k0_path);

  std::string base = "trivial-K", group = "Z", lambda, gamma;
  auto* cls = app.add_subcommand("classify-shift", "Decide M_n(R)(lambda) = M_n(R)(gamma)");
  cls->add_option("--base", base, "trivial-K or laurent:k");
  cls->add_option("--group", group, "Grade group");
  cls->add_option("lambda", lambda)->required();
  cls->add_option("gamma", gamma)->required();

  std::string comm_path;
  auto* comm = app.add_subcommand("commutators", "Commutator subspace, its support and the reduced trace");
  comm->add_option("file", comm_path)->required();

  std::string cname, cgroup;
  std::vector<std::string> cparams;
  auto* cons = app.add_subcommand("construct", "Print a definition file for a named constructor");
  cons->add_option("name", cname)->required();
  cons->add_option("params", cparams, "key=value parameters");
  cons->add_option("--group", cgroup, "Grade group");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_input_error;
  }

  try {
    if (*check) return run_check(common, predicate, via, path);
    if (*k0) return run_k0(common, graded, exact, matrix_size, index, compare_n, k0_path);
    if (*cls) return run_classify_shift(common, base, group, lambda, gamma);
    if (*comm) return run_commutators(common, comm_path);
    if (*cons) return run_construct(common, cname, cgroup, cparams);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_input_error;
}

#include "cli_app.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "skewbrace.hpp"

namespace bracerep {
namespace {

using namespace skewbrace;
using json = nlohmann::json;

enum class Status { pass, fail, info, budget };

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::info: return "info";
    case Status::budget: return "budget_exceeded";
  }
  return "?";
}

struct Verdict {
  std::string check;
  Status status;
  json value;
  json witness;
};

// Bad flags, bad files, inconsistent inputs: exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string command;
  json inputs = json::object();
  std::vector<Verdict> verdicts;
  std::vector<std::pair<std::string, double>> timing;

  void add(std::string check, Status s, json value = nullptr, json witness = nullptr) {
    verdicts.push_back({std::move(check), s, std::move(value), std::move(witness)});
  }

  int exit_code() const {
    bool budget = false;
    for (const auto& v : verdicts) {
      if (v.status == Status::fail) return 1;
      budget |= v.status == Status::budget;
    }
    return budget ? 3 : 0;
  }
};

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

json element(const SkewBrace& A, std::size_t a) { return {{"index", a}, {"label", A.label(a)}}; }

json subspace(const SubspaceBasis& s) {
  json rows = json::array();
  for (const auto& v : s.vectors()) rows.push_back(v);
  return {{"dim", s.dim()}, {"basis", rows}};
}

json members(const SkewBrace& A, const std::vector<std::size_t>& m) {
  json labels = json::array();
  for (auto x : m) labels.push_back(A.label(x));
  return {{"members", m}, {"labels", labels}};
}

struct Options {
  std::string area, action;
  std::string catalog, file, rep, rep2;
  std::string ideal = "derived";
  std::string format = "text";
  std::optional<std::uint64_t> modulus;
  std::optional<std::size_t> budget;
};

class Runner {
 public:
  Runner(Options o, Report& r) : opt_(std::move(o)), report_(r) {}

  void run() {
    if (const char* env = std::getenv("BRACEREP_BUDGET")) budget_ = parse_budget(env, "BRACEREP_BUDGET");
    if (opt_.budget) budget_ = {*opt_.budget, *opt_.budget};
    report_.inputs["budget"] = {{"max_seed_subspaces", budget_.max_seed_subspaces},
                                {"max_enumeration", budget_.max_enumeration}};
    auto t0 = clock::now();
    auto A = load_brace();
    lap("load", t0);
    if (!A) return;
    auto t1 = clock::now();
    dispatch(*A);
    lap("run", t1);
  }

 private:
  using clock = std::chrono::steady_clock;

  static AnalysisBudget parse_budget(const std::string& s, const std::string& where) {
    if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string::npos || std::stoull(s) == 0)
      throw UsageError(where + ": expected a positive integer, got '" + s + "'");
    const std::size_t n = std::stoull(s);
    return {n, n};
  }

  void lap(const char* phase, clock::time_point start) {
    report_.timing.emplace_back(phase, std::chrono::duration<double, std::milli>(clock::now() - start).count());
  }

  std::optional<SkewBrace> load_brace() {
    if (opt_.catalog.empty() == opt_.file.empty()) throw UsageError("give exactly one of --catalog or --file");
    io::BraceTables tables;
    if (!opt_.catalog.empty()) {
      SkewBrace A = [&] {
        try {
          return catalog::from_spec(opt_.catalog);
        } catch (const BadParams& e) {
          throw UsageError(std::string("--catalog: ") + e.what());
        }
      }();
      report_.inputs["brace"] = {{"source", "catalog:" + opt_.catalog}, {"digest", fnv1a(opt_.catalog)},
                                 {"order", A.order()}};
      tables = {A.dot_table(), A.circ_table(), A.labels()};
    } else {
      const std::string text = io::read_file(opt_.file);
      report_.inputs["brace"] = {{"source", opt_.file}, {"digest", fnv1a(text)}};
      json j = io::parse_json_text(text, opt_.file);
      tables = io::parse_brace_tables(j);
      report_.inputs["brace"]["order"] = tables.dot.size();
    }
    try {
      SkewBrace A = verify_brace(tables.dot, tables.circ, tables.labels);
      report_.add("dot_group", Status::pass, A.order());
      report_.add("circ_group", Status::pass, A.order());
      report_.add("shared_identity", Status::pass, element(A, A.identity()));
      report_.add("brace_relation", Status::pass, A.order() * A.order() * A.order());
      return A;
    } catch (const NotAGroup& e) {
      if (e.which == Operation::circ) report_.add("dot_group", Status::pass);
      report_.add(e.which == Operation::dot ? "dot_group" : "circ_group", Status::fail, nullptr,
                  {{"reason", e.reason}});
    } catch (const IdentityMismatch& e) {
      report_.add("dot_group", Status::pass);
      report_.add("circ_group", Status::pass);
      report_.add("shared_identity", Status::fail, nullptr,
                  {{"dot_identity", e.dot_identity}, {"circ_identity", e.circ_identity}});
    } catch (const BraceRelationViolation& e) {
      report_.add("dot_group", Status::pass);
      report_.add("circ_group", Status::pass);
      report_.add("shared_identity", Status::pass);
      report_.add("brace_relation", Status::fail, nullptr, {{"a", e.a}, {"b", e.b}, {"c", e.c}});
    }
    return std::nullopt;
  }

  BraceRepresentation load_rep(const SkewBrace& A, const std::string& path, const char* key, bool require_rho = true) {
    if (path.empty()) throw UsageError(std::string("--") + key + " is required for rep " + opt_.action);
    const std::string text = io::read_file(path);
    json j = io::parse_json_text(text, path);
    BraceRepresentation r = io::parse_representation(j, A, require_rho);
    report_.inputs[key] = {{"source", path}, {"digest", fnv1a(text)}, {"modulus", r.field.modulus()}, {"dim", r.dim}};
    if (opt_.modulus && *opt_.modulus != r.field.modulus())
      throw UsageError(path + ": /modulus is " + std::to_string(r.field.modulus()) + " but --modulus is " +
                       std::to_string(*opt_.modulus));
    return r;
  }

  PrimeField modulus_flag() {
    if (!opt_.modulus) throw UsageError("--modulus is required for rep " + opt_.action);
    try {
      return PrimeField(*opt_.modulus);
    } catch (const NotPrime& e) {
      throw UsageError(std::string("--modulus: ") + e.what());
    }
  }

  // derived | whole | trivial | every | comma-separated element indices
  std::vector<IdealSubset> ideals(const SkewBrace& A, bool allow_every) {
    const std::string& s = opt_.ideal;
    if (s == "derived") return {derived_ideal(A)};
    if (s == "whole") return {whole_ideal(A)};
    if (s == "trivial") return {trivial_ideal(A)};
    if (s == "every") {
      if (!allow_every) throw UsageError("--ideal every is only accepted by rep clifford");
      return enumerate_ideals(A);
    }
    std::vector<std::size_t> m;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
      if (item.empty() || item.size() > 9 || item.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("--ideal: '" + item + "' is not an element index");
      std::size_t x = std::stoul(item);
      if (x >= A.order()) throw UsageError("--ideal: element " + item + " out of range [0," + std::to_string(A.order()) + ")");
      m.push_back(x);
    }
    if (m.empty()) throw UsageError("--ideal: empty element list");
    auto I = as_ideal(A, m);
    if (!I) {
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
      report_.add("ideal", Status::fail, nullptr, members(A, m));
      return {};
    }
    return {*I};
  }

  // Runs an analysis step, turning an exhausted budget into a verdict.
  template <class F>
  void guarded(const std::string& check, F&& f) {
    try {
      f();
    } catch (const BudgetExceeded& e) {
      report_.add(check, Status::budget, nullptr, {{"needed", e.needed}, {"allowed", e.allowed}});
    }
  }

  void dispatch(const SkewBrace& A) {
    const std::string& a = opt_.action;
    if (opt_.area == "brace") {
      if (a == "verify") return;
      if (a == "ideals") return brace_ideals(A);
      if (a == "star") return brace_star(A);
      if (a == "quotient") return brace_quotient(A);
      if (a == "lambda-group") return brace_lambda(A);
    } else {
      if (a == "check") return rep_check(A);
      if (a == "analyze") return rep_analyze(A);
      if (a == "regular") return rep_regular(A);
      if (a == "clifford") return rep_clifford(A);
      if (a == "equiv") return rep_equiv(A);
      if (a == "simples") return rep_simples(A);
      if (a == "right-regular") return rep_right_regular(A);
      if (a == "char-invariance") return rep_char_invariance(A);
    }
    throw UsageError("unknown command '" + opt_.area + " " + a + "'");
  }

  // ---- brace ----

  void brace_ideals(const SkewBrace& A) {
    guarded("ideals", [&] {
      json list = json::array();
      for (const auto& I : enumerate_ideals(A)) list.push_back(members(A, I.members()));
      report_.add("ideals", Status::info, list);
      report_.add("derived_ideal", Status::info, members(A, derived_ideal(A).members()));
    });
  }

  void brace_star(const SkewBrace& A) {
    auto st = star_and_derived_ideal(A);
    report_.add("star_table", Status::info, io::table_json(st.table));
    report_.add("derived_ideal", Status::info, members(A, st.derived.members()));
    report_.add("quotient_trivial", quotient_brace(A, st.derived).brace.is_trivial() ? Status::pass : Status::fail,
                quotient_brace(A, st.derived).brace.order());
  }

  void brace_quotient(const SkewBrace& A) {
    for (const auto& I : ideals(A, false)) {
      auto Q = quotient_brace(A, I);
      json v = io::brace_json(Q.brace);
      v["projection"] = Q.projection;
      v["representatives"] = Q.representatives;
      v["ideal"] = members(A, I.members());
      v["trivial"] = Q.brace.is_trivial();
      report_.add("quotient", Status::info, v);
    }
  }

  void brace_lambda(const SkewBrace& A) {
    auto L = lambda_group(A);
    json gens = json::array();
    for (auto g : L->generators()) gens.push_back({element(A, L->first(g)), element(A, L->second(g))});
    report_.add("lambda_group", Status::info,
                {{"order", L->order()}, {"materialized", L->materialized()}, {"abelian", L->is_abelian()},
                 {"generators", gens}});
    guarded("ideal_normality", [&] {
      json bad = nullptr;
      for (const auto& I : enumerate_ideals(A))
        if (auto w = check_lambda_subgroup_normal(*L, I.members())) {
          bad = {{"ideal", members(A, I.members())}, {"g", w->g}, {"h", w->h}, {"conjugate", w->conjugate}};
          break;
        }
      report_.add("ideal_normality", bad.is_null() ? Status::pass : Status::fail, nullptr, bad);
    });
  }

  // ---- rep ----

  // Homomorphism and relation checks; true when all pass.
  bool relation_verdicts(const BraceRepresentation& r, const std::string& prefix = "") {
    const SkewBrace& A = r.brace;
    bool ok = true;
    auto hom = [&](const char* check, const FiniteGroup& g, const std::vector<Matrix>& img,
                   const std::vector<Matrix>& fam) {
      if (auto v = homomorphism_violation(g, img)) {
        ok = false;
        report_.add(prefix + check, Status::fail, nullptr,
                    {{"a", element(A, v->first)},
                     {"b", element(A, v->second)},
                     {"image_of_product", io::matrix_json(fam[g.multiply(v->first, v->second)])},
                     {"product_of_images", io::matrix_json(fam[v->first] * fam[v->second])}});
      } else {
        report_.add(prefix + check, Status::pass);
      }
    };
    hom("beta_homomorphism", *A.additive_group(), r.beta, r.beta);
    hom("rho_homomorphism", *A.multiplicative_group(), r.rho, r.rho);
    if (!ok) return false;
    if (auto v = check_relation(r)) {
      const std::size_t a = v->first, b = v->second;
      report_.add(prefix + "relation", Status::fail, nullptr,
                  {{"a", element(A, a)},
                   {"b", element(A, b)},
                   {"lambda_op", element(A, A.lambda_op(a, b))},
                   {"rho_a_beta_b", io::matrix_json(r.rho[a] * r.beta[b])},
                   {"beta_lambda_op_rho_a", io::matrix_json(r.beta[A.lambda_op(a, b)] * r.rho[a])}});
      return false;
    }
    report_.add(prefix + "relation", Status::pass, A.order() * A.order());
    return true;
  }

  void rep_check(const SkewBrace& A) { relation_verdicts(load_rep(A, opt_.rep, "rep")); }

  void module_properties(const GroupModule& M, const std::string& prefix) {
    guarded(prefix + "irreducible", [&] {
      auto sub = find_proper_submodule(M, budget_);
      report_.add(prefix + "irreducible", Status::info, !sub.has_value(), sub ? subspace(*sub) : json(nullptr));
    });
    guarded(prefix + "indecomposable", [&] {
      bool ind = is_indecomposable(M, budget_);
      json w = nullptr;
      if (!ind) {
        try {
          if (auto e = find_nontrivial_idempotent(M, budget_)) w = {{"idempotent", io::matrix_json(*e)}};
        } catch (const BudgetExceeded&) {
        }
      }
      report_.add(prefix + "indecomposable", Status::info, ind, w);
    });
    guarded(prefix + "semisimple", [&] {
      auto s = socle_and_semisimplicity(M, budget_);
      report_.add(prefix + "semisimple", Status::info, s.semisimple, {{"socle", subspace(s.socle)}});
    });
  }

  void rep_analyze(const SkewBrace& A) {
    BraceRepresentation r = load_rep(A, opt_.rep, "rep");
    if (!relation_verdicts(r)) return;
    auto L = lambda_group(A);
    GroupModule M = to_group_module(r, L);
    module_properties(M, "");
    guarded("composition_factors", [&] {
      report_.add("composition_factors", Status::info, composition_series(M, budget_).dims());
    });
    report_.add("endomorphism_dim", Status::info, endomorphism_algebra(M).size());
    module_properties(M.restrict_to(additive_part(L)), "dot_side_");
    module_properties(M.restrict_to(multiplicative_part(L)), "circ_side_");
  }

  void rep_regular(const SkewBrace& A) {
    const PrimeField f = modulus_flag();
    BraceRepresentation r = regular_representation(A, f);
    report_.inputs["rep"] = {{"source", "regular"}, {"modulus", f.modulus()}, {"dim", r.dim}};
    if (!relation_verdicts(r)) return;
    GroupModule M = to_group_module(r);
    const bool coprime = A.order() % f.modulus() != 0;
    guarded("semisimple", [&] {
      bool ss = socle_and_semisimplicity(M, budget_).semisimple;
      report_.add("semisimple", Status::info, ss);
      report_.add("maschke", ss == coprime ? Status::pass : Status::fail, coprime ? "coprime" : "modular",
                  ss == coprime ? json(nullptr) : json{{"semisimple", ss}});
    });
    auto comp = invariant_complement_of_line(M, Vector(A.order(), 1));
    report_.add("delta_complement", Status::info, comp.has_value(), comp ? subspace(*comp) : json(nullptr));
    report_.add("maschke_converse", comp.has_value() == coprime ? Status::pass : Status::fail);
  }

  void rep_clifford(const SkewBrace& A) {
    BraceRepresentation r = load_rep(A, opt_.rep, "rep");
    if (!relation_verdicts(r)) return;
    auto list = ideals(A, true);
    if (list.empty()) return;
    auto L = lambda_group(A);
    GroupModule M = to_group_module(r, L);
    bool simple = false;
    guarded("simple", [&] {
      auto sub = find_proper_submodule(M, budget_);
      simple = !sub;
      report_.add("simple", sub ? Status::fail : Status::pass, nullptr, sub ? subspace(*sub) : json(nullptr));
    });
    if (!simple) return;
    for (const auto& I : list) {
      const std::string tag = "clifford[" + std::accumulate(I.members().begin(), I.members().end(), std::string(),
                                                            [](std::string s, std::size_t x) {
                                                              return s.empty() ? std::to_string(x)
                                                                               : s + "," + std::to_string(x);
                                                            }) +
                              "]";
      guarded(tag, [&] {
        auto normal = check_lambda_subgroup_normal(*L, I.members());
        report_.add(tag + ".lambda_normal", normal ? Status::fail : Status::pass);
        if (normal) return;
        CliffordDecomposition d = clifford_decompose(r, I, budget_);
        json comps = json::array();
        for (const auto& c : d.components)
          comps.push_back({{"dim", c.basis.dim()},
                           {"simple_dim", c.simple_type.dim()},
                           {"multiplicity", c.multiplicity},
                           {"simple_type", subspace(c.simple_type)},
                           {"basis", subspace(c.basis)}});
        json perm = json::array();
        for (auto g : L->generators())
          perm.push_back({{"element", {element(A, L->first(g)), element(A, L->second(g))}},
                          {"permutation", d.permutation[g]}});
        report_.add(tag + ".ideal", Status::info, members(A, I.members()));
        report_.add(tag + ".components", Status::info, comps);
        report_.add(tag + ".permutation", Status::info, perm);
        auto check = [&](const char* name, bool v) { report_.add(tag + "." + name, v ? Status::pass : Status::fail); };
        check("restriction_semisimple", d.restriction_semisimple);
        check("transitive", d.transitive);
        check("equal_multiplicities", d.equal_multiplicities);
        check("equal_dims", d.equal_dims);
        report_.add(tag + ".dot_transitive", Status::info, d.dot_transitive);
        report_.add(tag + ".circ_transitive", Status::info, d.circ_transitive);
      });
    }
  }

  void rep_equiv(const SkewBrace& A) {
    BraceRepresentation r1 = load_rep(A, opt_.rep, "rep");
    BraceRepresentation r2 = load_rep(A, opt_.rep2, "rep2");
    if (r1.field != r2.field)
      throw UsageError(opt_.rep2 + ": /modulus is " + std::to_string(r2.field.modulus()) + " but " + opt_.rep +
                       " has " + std::to_string(r1.field.modulus()));
    if (!relation_verdicts(r1) || !relation_verdicts(r2, "rep2.")) return;
    auto L = lambda_group(A);
    GroupModule M1 = to_group_module(r1, L), M2 = to_group_module(r2, L);
    auto iso = [&](const std::string& check, const GroupModule& a, const GroupModule& b) {
      guarded(check, [&] {
        auto t = find_isomorphism(a, b, budget_);
        report_.add(check, Status::info, t.has_value(),
                    t ? json{{"intertwiner", io::matrix_json(*t)}} : json(nullptr));
      });
    };
    iso("isomorphic", M1, M2);
    iso("dot_side_isomorphic", M1.restrict_to(additive_part(L)), M2.restrict_to(additive_part(L)));
    iso("circ_side_isomorphic", M1.restrict_to(multiplicative_part(L)), M2.restrict_to(multiplicative_part(L)));
  }

  void rep_simples(const SkewBrace& A) {
    const PrimeField f = modulus_flag();
    guarded("simples", [&] {
      auto simples = enumerate_simples(A, f, budget_);
      json dims = json::array(), trivial = json::array();
      bool bounded = true;
      for (const auto& s : simples) {
        dims.push_back(s.dim());
        trivial.push_back(s.is_trivial());
        bounded &= s.dim() <= A.order() * A.order();
      }
      report_.add("simples", Status::info, {{"count", simples.size()}, {"dims", dims}, {"trivial", trivial}});
      report_.add("degree_bound", bounded ? Status::pass : Status::fail, A.order() * A.order());
    });
  }

  void rep_right_regular(const SkewBrace& A) {
    auto all = right_regular_witnesses(A);
    if (all.empty()) {
      report_.add("right_regular", Status::pass, 0);
      return;
    }
    const Triple& t = all.front();
    report_.add("right_regular", Status::fail, all.size(),
                {{"a", element(A, t.a)}, {"b", element(A, t.b)}, {"c", element(A, t.c)}});
  }

  void rep_char_invariance(const SkewBrace& A) {
    BraceRepresentation r = load_rep(A, opt_.rep, "rep", false);
    if (auto v = homomorphism_violation(*A.additive_group(), r.beta)) {
      report_.add("beta_homomorphism", Status::fail, nullptr,
                  {{"a", element(A, v->first)}, {"b", element(A, v->second)}});
      return;
    }
    report_.add("beta_homomorphism", Status::pass);
    if (auto w = character_invariance(A, r.beta)) {
      report_.add("character_invariance", Status::fail, nullptr,
                  {{"a", element(A, w->a)},
                   {"b", element(A, w->b)},
                   {"lambda_op", element(A, A.lambda_op(w->a, w->b))},
                   {"chi_moved", w->moved},
                   {"chi_original", w->original}});
    } else {
      report_.add("character_invariance", Status::pass);
    }
    try {
      trivial_side_extension(A, Side::dot, r.beta);
      report_.add("dot_extension", Status::pass);
    } catch (const ObstructionFailed& e) {
      report_.add("dot_extension", Status::fail, nullptr, {{"a", element(A, e.a)}, {"b", element(A, e.b)}});
    }
  }

  Options opt_;
  Report& report_;
  AnalysisBudget budget_;
};

json report_json(const Report& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    json o = {{"check", v.check}, {"status", status_name(v.status)}};
    if (!v.value.is_null()) o["value"] = v.value;
    if (!v.witness.is_null()) o["witness"] = v.witness;
    verdicts.push_back(o);
  }
  return {{"schema", 1}, {"command", r.command}, {"inputs", r.inputs}, {"verdicts", verdicts},
          {"exit_code", r.exit_code()}};
}

void print_text(const Report& r, std::ostream& out) {
  out << r.command << "\n";
  for (const auto& [key, v] : r.inputs.items()) out << "  " << key << ": " << v.dump() << "\n";
  for (const auto& v : r.verdicts) {
    std::string tag = status_name(v.status);
    for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out << tag << "  " << v.check;
    if (!v.value.is_null()) out << " = " << v.value.dump();
    if (!v.witness.is_null()) out << "\n    witness " << v.witness.dump();
    out << "\n";
  }
  out << std::fixed << std::setprecision(3);
  for (const auto& [phase, ms] : r.timing) out << "time  " << phase << " " << ms << " ms\n";
  out << "exit " << r.exit_code() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Skew brace and representation checks over prime fields", "bracerep"};
  app.add_option("area", opt.area, "brace | rep")->required()->check(CLI::IsMember({"brace", "rep"}));
  app.add_option("action", opt.action, "subcommand, e.g. verify, check, analyze")->required();
  app.add_option("--catalog", opt.catalog, "catalog spec family:param:..., e.g. semidirect_p2:3");
  app.add_option("--file", opt.file, "brace JSON file");
  app.add_option("--rep", opt.rep, "representation JSON file");
  app.add_option("--rep2", opt.rep2, "second representation JSON file (rep equiv)");
  app.add_option("--modulus", opt.modulus, "prime modulus q");
  app.add_option("--ideal", opt.ideal, "derived | whole | trivial | every | i,j,...");
  app.add_option("--budget", opt.budget, "analysis budget (seed lines and enumeration size)");
  app.add_option("--format", opt.format, "json | text")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "bracerep: " << e.what() << "\n";
    return 2;
  }
  if (opt.budget && *opt.budget == 0) {
    err << "bracerep: --budget must be positive\n";
    return 2;
  }

  Report report;
  report.command = opt.area + " " + opt.action;
  try {
    Runner(opt, report).run();
  } catch (const UsageError& e) {
    err << "bracerep: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "bracerep: parse error at " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "bracerep: " << e.what() << "\n";
    return 2;
  }
  if (opt.format == "json")
    out << report_json(report).dump(2) << "\n";
  else
    print_text(report, out);
  return report.exit_code();
}

}  // namespace bracerep

#pragma once

// Submodule structure of finite group modules over F_q.
//
// Small modules are handled by seeding every line of the ambient space.
// Larger ones go through a splitting search: for a random algebra element y
// and an irreducible factor p of its characteristic polynomial with
// dim ker p(y) = deg p, one vector of ker p(y) and one of ker p(y)^T decide
// irreducibility (Norton's criterion). The random stream is seeded with a
// constant, so every answer is reproducible, and every "irreducible" answer
// is certified, never guessed.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "skewbrace/errors.hpp"
#include "skewbrace/matrix.hpp"
#include "skewbrace/module.hpp"
#include "skewbrace/polynomial.hpp"

namespace skewbrace {

struct AnalysisBudget {
  std::size_t max_seed_subspaces = 100000;
  std::size_t max_enumeration = 1000000;
};

// Smallest subspace containing the seeds and closed under gens.
inline SubspaceBasis spin(const std::vector<Matrix>& gens, PrimeField f, std::size_t dim,
                          const std::vector<Vector>& seeds) {
  EchelonBuilder eb(f, dim);
  std::vector<Vector> queue;
  for (const auto& s : seeds)
    if (eb.insert(s)) queue.push_back(s);
  for (std::size_t i = 0; i < queue.size() && eb.dim() < dim; ++i)
    for (const auto& g : gens) {
      Vector w = g.apply(queue[i]);
      if (eb.insert(w)) queue.push_back(std::move(w));
    }
  return eb.basis();
}

inline SubspaceBasis spin(const GroupModule& M, const Vector& seed) {
  if (seed.size() != M.dim()) throw DimensionMismatch("seed has wrong length");
  return spin(M.generator_matrices(), M.field(), M.dim(), {seed});
}

// {v : u.v = 0 for all u in W}
inline SubspaceBasis annihilator(const SubspaceBasis& w) {
  if (w.is_zero()) return SubspaceBasis::full(w.field(), w.ambient_dim());
  return nullspace(w.as_matrix());
}

namespace detail {

// Generator matrices on an invariant subspace, in its RREF coordinates.
inline std::vector<Matrix> sub_generators(const std::vector<Matrix>& gens, const SubspaceBasis& w) {
  std::vector<Matrix> out;
  const std::size_t k = w.dim();
  for (const auto& g : gens) {
    Matrix s(w.field(), k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto c = w.coordinates(g.apply(w.vectors()[j]));
      for (std::size_t i = 0; i < k; ++i) s.set(i, j, c[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<Matrix> transposes(const std::vector<Matrix>& gens) {
  std::vector<Matrix> out;
  for (const auto& g : gens) out.push_back(g.transpose());
  return out;
}

inline SubspaceBasis lift_subspace(const SubspaceBasis& inner, const SubspaceBasis& outer) {
  std::vector<Vector> v;
  for (const auto& c : inner.vectors()) v.push_back(outer.combine(c));
  return SubspaceBasis::span(outer.field(), outer.ambient_dim(), v);
}

// Spins each line of `space` under gens; returns the first proper result.
inline std::optional<SubspaceBasis> spin_all_lines(const std::vector<Matrix>& gens, PrimeField f,
                                                   std::size_t dim, const SubspaceBasis& space) {
  std::optional<SubspaceBasis> found;
  for_each_line(space, [&](const Vector& v) {
    auto s = spin(gens, f, dim, {v});
    if (!s.is_full()) found = std::move(s);
    return !found;
  });
  return found;
}

constexpr std::size_t kSplitAttempts = 48;
constexpr std::uint64_t kSplitSeed = 0x6d6561746178ULL;

}  // namespace detail

// A proper nonzero invariant subspace, or nullopt when the module is
// irreducible. Throws BudgetExceeded only if no attempt met Norton's
// one-vector condition and the fallback would exceed the seed budget.
inline std::optional<SubspaceBasis> find_proper_submodule(const std::vector<Matrix>& gens, PrimeField f,
                                                          std::size_t d, const AnalysisBudget& budget = {}) {
  if (d <= 1) return std::nullopt;
  Vector e0(d, 0);
  e0[0] = 1;
  if (auto s = spin(gens, f, d, {e0}); !s.is_full()) return s;
  const auto tgens = detail::transposes(gens);

  std::mt19937_64 rng(detail::kSplitSeed);
  std::uniform_int_distribution<std::uint64_t> coin(0, f.modulus() - 1);
  std::vector<Matrix> pool = gens;
  std::optional<Matrix> best_theta;
  std::size_t best_nullity = d + 1;

  for (std::size_t attempt = 0; attempt < detail::kSplitAttempts; ++attempt) {
    pool.push_back(pool[rng() % pool.size()] * pool[rng() % pool.size()]);
    Matrix y(f, d, d);
    for (const auto& p : pool) y = y + p.scaled(static_cast<FieldElement>(coin(rng)));
    for (const auto& factor : irreducible_factors(characteristic_polynomial(y))) {
      Matrix theta = factor.evaluate(y);
      SubspaceBasis ker = nullspace(theta);
      if (ker.dim() == static_cast<std::size_t>(factor.degree())) {
        if (auto s = spin(gens, f, d, {ker.vectors()[0]}); !s.is_full()) return s;
        SubspaceBasis kt = nullspace(theta.transpose());
        if (auto s = spin(tgens, f, d, {kt.vectors()[0]}); !s.is_full()) return annihilator(s);
        return std::nullopt;
      }
      if (ker.dim() < best_nullity) {
        best_nullity = ker.dim();
        best_theta = std::move(theta);
      }
    }
  }

  // Norton's criterion with every line of the smallest kernel seen.
  const std::uint64_t lines = line_count(f.modulus(), best_nullity, budget.max_seed_subspaces + 1);
  if (lines > budget.max_seed_subspaces)
    throw BudgetExceeded("irreducibility fallback (kernel lines)", lines, budget.max_seed_subspaces);
  if (auto s = detail::spin_all_lines(gens, f, d, nullspace(*best_theta))) return s;
  if (auto s = detail::spin_all_lines(tgens, f, d, nullspace(best_theta->transpose()))) return annihilator(*s);
  return std::nullopt;
}

inline std::optional<SubspaceBasis> find_proper_submodule(const GroupModule& M, const AnalysisBudget& budget = {}) {
  return find_proper_submodule(M.generator_matrices(), M.field(), M.dim(), budget);
}

inline bool is_irreducible(const GroupModule& M, const AnalysisBudget& budget = {}) {
  return M.dim() > 0 && !find_proper_submodule(M, budget);
}

// Descends through proper submodules until an irreducible one is reached.
inline SubspaceBasis find_simple_submodule(const std::vector<Matrix>& gens, PrimeField f, std::size_t d,
                                           const AnalysisBudget& budget = {}) {
  SubspaceBasis w = SubspaceBasis::full(f, d);
  for (;;) {
    auto g = detail::sub_generators(gens, w);
    auto p = find_proper_submodule(g, f, w.dim(), budget);
    if (!p) return w;
    w = detail::lift_subspace(*p, w);
  }
}

inline SubspaceBasis find_simple_submodule(const GroupModule& M, const AnalysisBudget& budget = {}) {
  return find_simple_submodule(M.generator_matrices(), M.field(), M.dim(), budget);
}

// All minimal submodules, by spinning one vector of every line. Lines inside
// a minimal submodule already found are skipped (they spin to it).
inline std::vector<SubspaceBasis> minimal_submodules(const GroupModule& M, const AnalysisBudget& budget = {}) {
  const std::uint64_t lines = line_count(M.field().modulus(), M.dim(), budget.max_seed_subspaces + 1);
  if (lines > budget.max_seed_subspaces)
    throw BudgetExceeded("minimal submodule seeding (lines)", lines, budget.max_seed_subspaces);
  const auto gens = M.generator_matrices();
  std::vector<SubspaceBasis> simples;
  for_each_line(SubspaceBasis::full(M.field(), M.dim()), [&](const Vector& v) {
    for (const auto& s : simples)
      if (s.contains(v)) return true;
    SubspaceBasis s = spin(gens, M.field(), M.dim(), {v});
    if (!find_proper_submodule(detail::sub_generators(gens, s), M.field(), s.dim(), budget))
      simples.push_back(std::move(s));
    return true;
  });
  std::sort(simples.begin(), simples.end());
  return simples;
}

struct CompositionSeries {
  std::vector<GroupModule> factors;  // bottom-up
  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (const auto& m : factors) out.push_back(m.dim());
    return out;
  }
};

// Repeatedly takes a simple submodule and passes to the quotient.
inline CompositionSeries composition_series(const GroupModule& M, const AnalysisBudget& budget = {}) {
  CompositionSeries out;
  GroupModule current = M;
  while (current.dim() > 0) {
    SubspaceBasis s = find_simple_submodule(current, budget);
    out.factors.push_back(current.submodule(s));
    if (s.is_full()) break;
    current = current.quotient(s);
  }
  return out;
}

// Basis of {T : T M1(g) = M2(g) T for all g}, T of size dim2 x dim1.
inline std::vector<Matrix> intertwiners(const GroupModule& M1, const GroupModule& M2) {
  if (!M1.same_group(M2)) throw BadParams("modules over different groups");
  if (M1.field() != M2.field()) throw BadParams("modules over different fields");
  const PrimeField f = M1.field();
  const std::size_t d1 = M1.dim(), d2 = M2.dim(), n = d1 * d2;
  if (n == 0) return {};
  EchelonBuilder eqs(f, n);
  for (auto g : M1.generators()) {
    const Matrix& a = M1.action(g);
    const Matrix& b = M2.action(g);
    // entry (i,k) of T a - b T, with T_ij at index i*d1 + j
    for (std::size_t i = 0; i < d2; ++i)
      for (std::size_t k = 0; k < d1; ++k) {
        Vector row(n, 0);
        for (std::size_t j = 0; j < d1; ++j) row[i * d1 + j] = f.add(row[i * d1 + j], a(j, k));
        for (std::size_t j = 0; j < d2; ++j) row[j * d1 + k] = f.sub(row[j * d1 + k], b(i, j));
        eqs.insert(std::move(row));
        if (eqs.dim() == n) return {};
      }
  }
  Matrix sys = eqs.dim() ? Matrix::from_row_vectors(f, n, eqs.rows()) : Matrix(f, 1, n);
  std::vector<Matrix> out;
  const SubspaceBasis sol = nullspace(sys);
  for (const auto& v : sol.vectors()) out.emplace_back(f, d2, d1, v);
  return out;
}

inline std::vector<Matrix> endomorphism_algebra(const GroupModule& M) { return intertwiners(M, M); }

namespace detail {

inline Matrix combination(const std::vector<Matrix>& basis, const Vector& c) {
  Matrix x(basis.front().field(), basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c[i]) x = x + basis[i].scaled(c[i]);
  return x;
}

// Calls visit on every nonzero coefficient vector of length k over F_q.
template <class Visit>
bool for_each_combination(std::size_t k, std::uint64_t q, Visit&& visit) {
  Vector c(k, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < k && ++c[i] == q) c[i++] = 0;
    if (i == k) return false;
    if (visit(c)) return true;
  }
}

inline void check_enumeration(std::size_t k, std::uint64_t q, const AnalysisBudget& budget, const char* what) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= q;
    if (total > budget.max_enumeration) throw BudgetExceeded(what, total, budget.max_enumeration);
  }
}

}  // namespace detail

// An invertible T with T M1(g) = M2(g) T, if one exists.
inline std::optional<Matrix> find_isomorphism(const GroupModule& M1, const GroupModule& M2,
                                              const AnalysisBudget& budget = {}) {
  if (M1.dim() != M2.dim()) return std::nullopt;
  auto hom = intertwiners(M1, M2);
  if (hom.empty()) return std::nullopt;
  for (const auto& t : hom)
    if (is_invertible(t)) return t;
  // A nonzero map between irreducibles is invertible, so the loop above
  // would have returned.
  if (is_irreducible(M1, budget) && is_irreducible(M2, budget)) return std::nullopt;
  detail::check_enumeration(hom.size(), M1.field().modulus(), budget, "intertwiner enumeration");
  std::optional<Matrix> found;
  detail::for_each_combination(hom.size(), M1.field().modulus(), [&](const Vector& c) {
    Matrix t = detail::combination(hom, c);
    if (is_invertible(t)) found = std::move(t);
    return found.has_value();
  });
  return found;
}

inline bool are_isomorphic(const GroupModule& M1, const GroupModule& M2, const AnalysisBudget& budget = {}) {
  return find_isomorphism(M1, M2, budget).has_value();
}

// Simple modules, one per isomorphism class, in first-seen order.
inline std::vector<GroupModule> distinct_simples(const std::vector<GroupModule>& simples) {
  std::vector<GroupModule> out;
  for (const auto& s : simples) {
    bool seen = false;
    for (const auto& t : out)
      if (t.dim() == s.dim() && !intertwiners(s, t).empty()) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(s);
  }
  return out;
}

struct Socle {
  SubspaceBasis socle;
  bool semisimple;
};

// Sum of the images of a basis of Hom(S, M): the S-isotypic part of the socle.
inline SubspaceBasis isotypic_socle(const GroupModule& S, const GroupModule& M) {
  SubspaceBasis sum(M.field(), M.dim());
  for (const auto& t : intertwiners(S, M)) sum = sum + SubspaceBasis::column_space(t);
  return sum;
}

// Socle through every simple type occurring as a composition factor.
inline Socle socle_by_homs(const GroupModule& M, const AnalysisBudget& budget = {}) {
  SubspaceBasis sum(M.field(), M.dim());
  for (const auto& s : distinct_simples(composition_series(M, budget).factors))
    sum = sum + isotypic_socle(s, M);
  return {sum, sum.is_full()};
}

// Sum of minimal submodules found by line seeding; stops once the sum is
// the whole space.
inline Socle socle_by_seeding(const GroupModule& M, const AnalysisBudget& budget = {}) {
  const std::uint64_t lines = line_count(M.field().modulus(), M.dim(), budget.max_seed_subspaces + 1);
  if (lines > budget.max_seed_subspaces)
    throw BudgetExceeded("socle seeding (lines)", lines, budget.max_seed_subspaces);
  const auto gens = M.generator_matrices();
  std::vector<SubspaceBasis> simples;
  SubspaceBasis sum(M.field(), M.dim());
  for_each_line(SubspaceBasis::full(M.field(), M.dim()), [&](const Vector& v) {
    for (const auto& s : simples)
      if (s.contains(v)) return true;
    SubspaceBasis s = spin(gens, M.field(), M.dim(), {v});
    if (!find_proper_submodule(detail::sub_generators(gens, s), M.field(), s.dim(), budget)) {
      sum = sum + s;
      simples.push_back(std::move(s));
    }
    return !sum.is_full();
  });
  return {sum, sum.is_full()};
}

inline Socle socle_and_semisimplicity(const GroupModule& M, const AnalysisBudget& budget = {}) {
  if (M.dim() == 0) return {SubspaceBasis(M.field(), 0), true};
  if (line_count(M.field().modulus(), M.dim(), budget.max_seed_subspaces + 1) <= budget.max_seed_subspaces)
    return socle_by_seeding(M, budget);
  return socle_by_homs(M, budget);
}

// A nontrivial idempotent of End(M): a witness that M is decomposable.
inline std::optional<Matrix> find_nontrivial_idempotent(const GroupModule& M, const AnalysisBudget& budget = {}) {
  auto end = endomorphism_algebra(M);
  if (end.size() <= 1) return std::nullopt;
  detail::check_enumeration(end.size(), M.field().modulus(), budget, "endomorphism enumeration");
  const Matrix id = Matrix::identity(M.field(), M.dim());
  std::optional<Matrix> found;
  detail::for_each_combination(end.size(), M.field().modulus(), [&](const Vector& c) {
    Matrix x = detail::combination(end, c);
    if (x != id && x * x == x) found = std::move(x);
    return found.has_value();
  });
  return found;
}

inline bool is_indecomposable(const GroupModule& M, const AnalysisBudget& budget = {}) {
  if (M.dim() == 0) return false;
  if (is_irreducible(M, budget)) return true;
  try {
    return !find_nontrivial_idempotent(M, budget);
  } catch (const BudgetExceeded&) {
    // A reducible semisimple module splits; otherwise the verdict stays open.
    if (socle_and_semisimplicity(M, budget).semisimple) return false;
    throw;
  }
}

// Hyperplane U with span(delta) + U = whole space and U invariant, if any.
// Invariant hyperplanes are kernels of common eigenvectors w of the
// transposed action; the eigenvalue of each generator is read off the linear
// factors of its characteristic polynomial.
inline std::optional<SubspaceBasis> invariant_complement_of_line(const GroupModule& M, const Vector& delta) {
  const PrimeField f = M.field();
  const std::size_t d = M.dim();
  if (delta.size() != d) throw DimensionMismatch("vector has wrong length");
  if (!M.is_invariant(SubspaceBasis::span(f, d, {delta}))) throw BadParams("line is not invariant");
  std::vector<Matrix> tg = detail::transposes(M.generator_matrices());
  std::vector<std::vector<FieldElement>> eig;
  for (const auto& g : tg) eig.push_back(eigenvalues_in_field(g));
  const Matrix id = Matrix::identity(f, d);
  std::optional<SubspaceBasis> result;
  std::vector<std::size_t> pick(tg.size(), 0);
  std::function<void(std::size_t, SubspaceBasis)> walk = [&](std::size_t i, SubspaceBasis w) {
    if (result || w.is_zero()) return;
    if (i == tg.size()) {
      for (const auto& u : w.vectors()) {
        FieldElement dotp = 0;
        for (std::size_t k = 0; k < d; ++k) dotp = f.mul_add(dotp, u[k], delta[k]);
        if (dotp != 0) {
          result = nullspace(Matrix::from_row_vectors(f, d, {u}));
          return;
        }
      }
      return;
    }
    for (auto lam : eig[i]) walk(i + 1, w.intersect(nullspace(tg[i] - id.scaled(lam))));
  };
  walk(0, SubspaceBasis::full(f, d));
  return result;
}

}  // namespace skewbrace

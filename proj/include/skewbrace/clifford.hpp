#pragma once

// Restriction of simple Lambda_A-modules to Lambda_I, twisted pairs over
// trivial braces, and the simple modules of kA.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "skewbrace/analysis.hpp"
#include "skewbrace/brace.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/lambda_group.hpp"
#include "skewbrace/representation.hpp"

namespace skewbrace {

struct HomogeneousComponent {
  SubspaceBasis simple_type;  // one minimal submodule of this type
  std::size_t multiplicity;
  SubspaceBasis basis;  // sum of all minimal submodules of this type
};

struct CliffordDecomposition {
  std::vector<HomogeneousComponent> components;  // sorted by basis
  // permutation[x][i] = j when Lambda_A element x maps component i onto j.
  std::vector<std::vector<std::size_t>> permutation;
  bool transitive = false;
  bool dot_transitive = false;   // {(a,e)} alone
  bool circ_transitive = false;  // {(e,b)} alone
  bool equal_multiplicities = false;
  bool equal_dims = false;
  bool restriction_semisimple = false;
};

namespace detail {

inline bool orbit_covers(const std::vector<std::vector<std::size_t>>& perm, const std::vector<std::size_t>& elements,
                         std::size_t count) {
  if (count == 0) return true;
  std::vector<char> seen(count, 0);
  std::vector<std::size_t> frontier{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < frontier.size(); ++i)
    for (auto x : elements) {
      std::size_t j = perm[x][frontier[i]];
      if (!seen[j]) {
        seen[j] = 1;
        frontier.push_back(j);
      }
    }
  return frontier.size() == count;
}

// Homogeneous components of a semisimple module R, in R's ambient coordinates.
inline std::vector<HomogeneousComponent> homogeneous_components(const GroupModule& R, const AnalysisBudget& budget) {
  std::vector<HomogeneousComponent> out;
  const bool seedable =
      line_count(R.field().modulus(), R.dim(), budget.max_seed_subspaces + 1) <= budget.max_seed_subspaces;
  std::vector<SubspaceBasis> minimal;
  if (seedable) minimal = minimal_submodules(R, budget);
  for (const auto& s : distinct_simples(composition_series(R, budget).factors)) {
    HomogeneousComponent c{SubspaceBasis(R.field(), R.dim()), 0, isotypic_socle(s, R)};
    c.multiplicity = c.basis.dim() / s.dim();
    if (seedable) {
      // minimal is sorted, so the first one inside the component is the smallest
      for (const auto& m : minimal)
        if (c.basis.contains(m)) {
          c.simple_type = m;
          break;
        }
    } else {
      c.simple_type = SubspaceBasis::column_space(intertwiners(s, R).front());
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.basis < b.basis; });
  return out;
}

}  // namespace detail

// Requires the module of r to be simple and I to be an ideal.
inline CliffordDecomposition clifford_decompose(const BraceRepresentation& r, const IdealSubset& I,
                                                const AnalysisBudget& budget = {}) {
  if (!(I.brace() == r.brace)) throw BadParams("ideal belongs to a different brace");
  auto L = lambda_group(r.brace);
  GroupModule M = to_group_module(r, L);
  if (!is_irreducible(M, budget)) throw NotSimple("clifford_decompose needs a simple module");
  if (check_lambda_subgroup_normal(*L, I.members()))
    throw InternalInvariantViolation("Lambda_I is not normal in Lambda_A");
  GroupModule R = M.restrict_to(embed_lambda_subgroup(L, I));

  CliffordDecomposition out;
  out.restriction_semisimple = socle_and_semisimplicity(R, budget).semisimple;
  if (!out.restriction_semisimple) throw InternalInvariantViolation("restriction to Lambda_I is not semisimple");
  out.components = detail::homogeneous_components(R, budget);

  const std::size_t k = out.components.size();
  out.permutation.assign(L->order(), std::vector<std::size_t>(k, k));
  for (std::size_t x = 0; x < L->order(); ++x)
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Vector> image;
      for (const auto& v : out.components[i].basis.vectors()) image.push_back(M.action(x).apply(v));
      SubspaceBasis im = SubspaceBasis::span(M.field(), M.dim(), image);
      for (std::size_t j = 0; j < k; ++j)
        if (out.components[j].basis == im) out.permutation[x][i] = j;
      if (out.permutation[x][i] == k) throw InternalInvariantViolation("element does not permute the components");
    }

  std::vector<std::size_t> all(L->order()), dot_side, circ_side;
  for (std::size_t x = 0; x < L->order(); ++x) all[x] = x;
  const SkewBrace& A = r.brace;
  for (std::size_t a = 0; a < A.order(); ++a) {
    dot_side.push_back(L->index(a, A.identity()));
    circ_side.push_back(L->index(A.identity(), a));
  }
  out.transitive = detail::orbit_covers(out.permutation, all, k);
  out.dot_transitive = detail::orbit_covers(out.permutation, dot_side, k);
  out.circ_transitive = detail::orbit_covers(out.permutation, circ_side, k);
  out.equal_multiplicities = out.equal_dims = true;
  for (const auto& c : out.components) {
    out.equal_multiplicities &= c.multiplicity == out.components.front().multiplicity;
    out.equal_dims &= c.simple_type.dim() == out.components.front().simple_type.dim();
  }
  return out;
}

struct OneSidedSemisimplicity {
  bool dot_side;   // restriction to (A,.), always true for a simple module
  bool circ_side;  // restriction to (A,o), may fail
};

inline OneSidedSemisimplicity restriction_semisimple_check(const BraceRepresentation& r,
                                                           const AnalysisBudget& budget = {}) {
  auto L = lambda_group(r.brace);
  GroupModule M = to_group_module(r, L);
  if (!is_irreducible(M, budget)) throw NotSimple("restriction check needs a simple module");
  return {socle_and_semisimplicity(M.restrict_to(additive_part(L)), budget).semisimple,
          socle_and_semisimplicity(M.restrict_to(multiplicative_part(L)), budget).semisimple};
}

struct TwistedPair {
  BraceRepresentation plain;    // (V, alpha, alpha)
  BraceRepresentation twisted;  // (V, alpha, f alpha f^-1)
  std::vector<Matrix> commutators;  // f alpha(a) f^-1 alpha(a)^-1
};

// Needs every commutator f alpha(a) f^-1 alpha(a)^-1 to commute with all of
// Im(alpha), while f itself does not. The commutator test runs first.
inline TwistedPair build_twisted_pair(const SkewBrace& A, const std::vector<Matrix>& alpha, const Matrix& f) {
  if (!A.is_trivial()) throw BadParams("twisted pairs need a trivial brace");
  if (alpha.size() != A.order()) throw DimensionMismatch("one matrix per element required");
  if (auto v = homomorphism_violation(*A.additive_group(), alpha))
    throw NotAHomomorphism(Operation::dot, v->first, v->second);
  const Matrix fi = invert(f);
  TwistedPair out{{A, f.field(), f.rows(), alpha, alpha}, {A, f.field(), f.rows(), alpha, {}}, {}};
  for (std::size_t a = 0; a < A.order(); ++a) {
    out.twisted.rho.push_back(f * alpha[a] * fi);
    out.commutators.push_back(out.twisted.rho.back() * invert(alpha[a]));
  }
  for (std::size_t a = 0; a < A.order(); ++a)
    for (std::size_t b = 0; b < A.order(); ++b)
      if (!out.commutators[a].commutes_with(alpha[b])) throw ConditionOneFailed(a, b);
  if (std::all_of(alpha.begin(), alpha.end(), [&](const Matrix& m) { return f.commutes_with(m); }))
    throw ConditionTwoFailed();
  if (check_relation(out.plain) || check_relation(out.twisted))
    throw InternalInvariantViolation("twisted pair fails the relation");
  return out;
}

// Simple kA-modules up to isomorphism, from the composition factors of the
// regular module of Lambda_A. Sorted by dimension, then first occurrence.
inline std::vector<GroupModule> enumerate_simples(const SkewBrace& A, PrimeField field,
                                                  const AnalysisBudget& budget = {}) {
  const std::size_t n2 = A.order() * A.order();
  if (n2 > LambdaGroup::kMaterializeLimit)
    throw BudgetExceeded("simple enumeration (|Lambda_A|)", n2, LambdaGroup::kMaterializeLimit);
  auto L = lambda_group(A);
  GroupModule reg = GroupModule::regular(L, field);
  auto simples = distinct_simples(composition_series(reg, budget).factors);
  std::stable_sort(simples.begin(), simples.end(), [](const auto& a, const auto& b) { return a.dim() < b.dim(); });
  return simples;
}

}  // namespace skewbrace

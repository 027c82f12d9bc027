#pragma once

// Representations (beta, rho) of a skew brace: beta a homomorphism on (A,.),
// rho a homomorphism on (A,o), with
//   beta(lambda^op_a(b)) = rho(a) beta(b) rho(a)^-1   for all a, b.
// Matrices act on column vectors.

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/group.hpp"
#include "skewbrace/lambda_group.hpp"
#include "skewbrace/matrix.hpp"
#include "skewbrace/module.hpp"

namespace skewbrace {

struct BraceRepresentation {
  SkewBrace brace;
  PrimeField field;
  std::size_t dim;
  std::vector<Matrix> beta;  // indexed by element
  std::vector<Matrix> rho;

  const Matrix& b(std::size_t a) const { return beta[a]; }
  const Matrix& r(std::size_t a) const { return rho[a]; }
};

enum class Side { dot, circ };

inline const char* to_string(Side s) { return s == Side::dot ? "dot" : "circ"; }

inline std::vector<Matrix> identity_family(const SkewBrace& A, PrimeField field, std::size_t dim) {
  return std::vector<Matrix>(A.order(), Matrix::identity(field, dim));
}

inline void check_shapes(const BraceRepresentation& r) {
  if (r.beta.size() != r.brace.order() || r.rho.size() != r.brace.order())
    throw DimensionMismatch("representation needs one beta and one rho matrix per element");
  for (const auto* fam : {&r.beta, &r.rho})
    for (const auto& m : *fam)
      if (m.rows() != r.dim || m.cols() != r.dim || m.field() != r.field)
        throw DimensionMismatch("representation matrix has wrong size or field");
}

// Builds beta and rho from images of generators of (A,.) and (A,o).
inline BraceRepresentation representation_from_generators(
    const SkewBrace& A, PrimeField field, std::size_t dim,
    const std::vector<std::pair<std::size_t, Matrix>>& beta_gens,
    const std::vector<std::pair<std::size_t, Matrix>>& rho_gens) {
  auto extend = [&](const FiniteGroup& g, const std::vector<std::pair<std::size_t, Matrix>>& gens,
                    Operation side) {
    if (gens.empty()) {
      if (g.order() != 1) throw BadParams("no generator images given");
      return std::vector<Matrix>{Matrix::identity(field, dim)};
    }
    return extend_homomorphism(g, gens, side);
  };
  BraceRepresentation r{A, field, dim, extend(*A.additive_group(), beta_gens, Operation::dot),
                        extend(*A.multiplicative_group(), rho_gens, Operation::circ)};
  check_shapes(r);
  return r;
}

// First (a,b) in lexicographic order violating the relation. Throws
// NotAHomomorphism when beta or rho on its own is not a homomorphism.
inline std::optional<std::pair<std::size_t, std::size_t>> check_relation(const BraceRepresentation& r) {
  check_shapes(r);
  const SkewBrace& A = r.brace;
  if (auto v = homomorphism_violation(*A.additive_group(), r.beta))
    throw NotAHomomorphism(Operation::dot, v->first, v->second);
  if (auto v = homomorphism_violation(*A.multiplicative_group(), r.rho))
    throw NotAHomomorphism(Operation::circ, v->first, v->second);
  for (std::size_t a = 0; a < A.order(); ++a)
    for (std::size_t b = 0; b < A.order(); ++b)
      if (r.rho[a] * r.beta[b] != r.beta[A.lambda_op(a, b)] * r.rho[a]) return std::make_pair(a, b);
  return std::nullopt;
}

// phi(a,b) = beta(a) rho(b) on Lambda_A.
inline GroupModule to_group_module(const BraceRepresentation& r, LambdaGroupPtr L = nullptr) {
  if (auto v = check_relation(r)) throw RelationViolation(v->first, v->second);
  if (!L) L = lambda_group(r.brace);
  if (!(L->brace() == r.brace)) throw BadParams("Lambda group belongs to a different brace");
  std::vector<Matrix> act;
  act.reserve(L->order());
  for (std::size_t x = 0; x < L->order(); ++x) act.push_back(r.beta[L->first(x)] * r.rho[L->second(x)]);
  return GroupModule(L, r.field, r.dim, std::move(act), true);
}

// beta(a) = action(a,e), rho(b) = action(e,b).
inline BraceRepresentation from_group_module(const GroupModule& M) {
  auto L = std::dynamic_pointer_cast<const LambdaGroup>(M.group());
  if (!L) throw BadParams("module is not over a Lambda group");
  const SkewBrace& A = L->brace();
  std::vector<Matrix> beta, rho;
  for (std::size_t a = 0; a < A.order(); ++a) {
    beta.push_back(M.action(L->index(a, A.identity())));
    rho.push_back(M.action(L->index(A.identity(), a)));
  }
  BraceRepresentation r{A, M.field(), M.dim(), std::move(beta), std::move(rho)};
  if (auto v = check_relation(r)) throw RelationViolation(v->first, v->second);
  return r;
}

// Lets the other side act trivially. With side = dot, beta must satisfy
// beta(lambda^op_a(b)) = beta(b); the first failing (a,b) is reported.
inline BraceRepresentation trivial_side_extension(const SkewBrace& A, Side side,
                                                  const std::vector<Matrix>& base) {
  if (base.size() != A.order() || base.empty()) throw DimensionMismatch("one matrix per element required");
  const PrimeField field = base.front().field();
  const std::size_t d = base.front().rows();
  if (side == Side::circ) {
    if (auto v = homomorphism_violation(*A.multiplicative_group(), base))
      throw NotAHomomorphism(Operation::circ, v->first, v->second);
    BraceRepresentation r{A, field, d, identity_family(A, field, d), base};
    check_shapes(r);
    return r;
  }
  if (auto v = homomorphism_violation(*A.additive_group(), base))
    throw NotAHomomorphism(Operation::dot, v->first, v->second);
  for (std::size_t a = 0; a < A.order(); ++a)
    for (std::size_t b = 0; b < A.order(); ++b)
      if (base[A.lambda_op(a, b)] != base[b]) throw ObstructionFailed(a, b);
  BraceRepresentation r{A, field, d, base, identity_family(A, field, d)};
  check_shapes(r);
  return r;
}

// Traces of beta(a) or rho(a).
inline std::vector<FieldElement> character(const BraceRepresentation& r, Side side) {
  std::vector<FieldElement> out;
  for (const auto& m : side == Side::dot ? r.beta : r.rho) out.push_back(m.trace());
  return out;
}

struct CharacterWitness {
  std::size_t a, b;
  FieldElement moved;     // trace of beta(lambda^op_a(b))
  FieldElement original;  // trace of beta(b)
};

// First (a,b) with tr beta(lambda^op_a(b)) != tr beta(b).
inline std::optional<CharacterWitness> character_invariance(const SkewBrace& A,
                                                            const std::vector<Matrix>& beta) {
  if (beta.size() != A.order()) throw DimensionMismatch("one matrix per element required");
  if (auto v = homomorphism_violation(*A.additive_group(), beta))
    throw NotAHomomorphism(Operation::dot, v->first, v->second);
  std::vector<FieldElement> chi;
  for (const auto& m : beta) chi.push_back(m.trace());
  for (std::size_t a = 0; a < A.order(); ++a)
    for (std::size_t b = 0; b < A.order(); ++b) {
      std::size_t moved = A.lambda_op(a, b);
      if (chi[moved] != chi[b]) return CharacterWitness{a, b, chi[moved], chi[b]};
    }
  return std::nullopt;
}

struct DerivedQuotient {
  IdealSubset ideal;  // A*A
  QuotientBrace quotient;
};

inline DerivedQuotient derived_quotient(const SkewBrace& A) {
  IdealSubset I = derived_ideal(A);
  QuotientBrace Q = quotient_brace(A, I);
  if (!Q.brace.is_trivial()) throw InternalInvariantViolation("A/A*A is not a trivial brace");
  return {std::move(I), std::move(Q)};
}

enum class LiftMode { diagonal, tensor };

// Pulls a representation of A/A*A back along the projection. Diagonal mode
// gives (alpha, alpha); tensor mode gives (alpha (x) I, I (x) alpha) on the
// d^2-dimensional space, basis e_i (x) e_j at index i*d + j.
inline BraceRepresentation lift_representation(const SkewBrace& A, const std::vector<Matrix>& alpha_bar,
                                               LiftMode mode) {
  DerivedQuotient dq = derived_quotient(A);
  const QuotientBrace& Q = dq.quotient;
  if (alpha_bar.size() != Q.brace.order())
    throw QuotientMismatch("expected " + std::to_string(Q.brace.order()) + " matrices for A/A*A, got " +
                           std::to_string(alpha_bar.size()));
  if (auto v = homomorphism_violation(*Q.brace.additive_group(), alpha_bar))
    throw NotAHomomorphism(Operation::dot, v->first, v->second);
  const PrimeField field = alpha_bar.front().field();
  const std::size_t d = alpha_bar.front().rows();
  std::vector<Matrix> alpha;
  for (std::size_t a = 0; a < A.order(); ++a) alpha.push_back(alpha_bar[Q.projection[a]]);
  if (mode == LiftMode::diagonal) {
    BraceRepresentation r{A, field, d, alpha, alpha};
    check_shapes(r);
    return r;
  }
  for (std::size_t x = 0; x < alpha_bar.size(); ++x)
    for (std::size_t y = x + 1; y < alpha_bar.size(); ++y)
      if (!alpha_bar[x].commutes_with(alpha_bar[y])) throw NotAbelianImage(x, y);
  const Matrix id = Matrix::identity(field, d);
  std::vector<Matrix> beta, rho;
  for (const auto& m : alpha) {
    beta.push_back(m.kronecker(id));
    rho.push_back(id.kronecker(m));
  }
  BraceRepresentation r{A, field, d * d, std::move(beta), std::move(rho)};
  check_shapes(r);
  return r;
}

// Left translations: beta(a) e_b = e_{a.b}, rho(a) e_b = e_{a o b}.
inline BraceRepresentation regular_representation(const SkewBrace& A, PrimeField field) {
  const std::size_t n = A.order();
  std::vector<Matrix> beta, rho;
  for (std::size_t a = 0; a < n; ++a) {
    Matrix mb(field, n, n), mr(field, n, n);
    for (std::size_t b = 0; b < n; ++b) {
      mb.set(A.dot(a, b), b, 1);
      mr.set(A.circ(a, b), b, 1);
    }
    beta.push_back(std::move(mb));
    rho.push_back(std::move(mr));
  }
  BraceRepresentation r{A, field, n, std::move(beta), std::move(rho)};
  if (check_relation(r)) throw InternalInvariantViolation("regular representation fails the relation");
  return r;
}

struct Triple {
  std::size_t a, b, c;
  friend bool operator==(const Triple&, const Triple&) = default;
};

// Triples (a,b,c) with c.(a o b^-1).a^-1 != ((c o a).b^-1) o abar, in
// lexicographic order. The right translations form a representation exactly
// when this list is empty.
inline std::vector<Triple> right_regular_witnesses(const SkewBrace& A, std::size_t limit = ~std::size_t{0}) {
  std::vector<Triple> out;
  const std::size_t n = A.order();
  for (std::size_t a = 0; a < n && out.size() < limit; ++a)
    for (std::size_t b = 0; b < n && out.size() < limit; ++b)
      for (std::size_t c = 0; c < n && out.size() < limit; ++c) {
        std::size_t lhs = A.dot(A.dot(c, A.circ(a, A.dot_inv(b))), A.dot_inv(a));
        std::size_t rhs = A.circ(A.dot(A.circ(c, a), A.dot_inv(b)), A.circ_inv(a));
        if (lhs != rhs) out.push_back({a, b, c});
      }
  return out;
}

inline std::optional<Triple> check_right_regular(const SkewBrace& A) {
  auto w = right_regular_witnesses(A, 1);
  if (w.empty()) return std::nullopt;
  return w.front();
}

}  // namespace skewbrace

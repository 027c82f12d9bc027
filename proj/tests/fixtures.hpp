#pragma once

// Concrete representations used across the test suite and the acceptance
// runner. Pair elements (a1,a2) sit at index a1*m2 + a2.

#include <string>
#include <vector>

#include "skewbrace.hpp"

namespace fixtures {

using namespace skewbrace;

// Every catalog family at small parameters.
inline const std::vector<std::string>& catalog_specs() {
  static const std::vector<std::string> specs{
      "trivial:cyclic:1", "trivial:cyclic:2",     "trivial:cyclic:4",     "trivial:sym:3",
      "almost_trivial:sym:3", "almost_trivial:cyclic:3", "semidirect_p2:3", "semidirect_p2:5",
      "unipotent_p2:2",   "unipotent_p2:3",       "qq:7:3:2",             "s3_factorization",
      "trivial:sym:4"};
  return specs;
}

// The ones with |A| in {2,4,6,9,21}.
inline const std::vector<std::string>& maschke_specs() {
  static const std::vector<std::string> specs{"trivial:cyclic:2", "trivial:cyclic:4", "unipotent_p2:2",
                                              "semidirect_p2:3", "trivial:sym:3", "almost_trivial:sym:3",
                                              "s3_factorization", "unipotent_p2:3", "qq:7:3:2"};
  return specs;
}

inline std::size_t perm(std::vector<std::vector<std::size_t>> cycles) {
  return catalog::permutation_index(3, cycles);
}

inline Matrix M(PrimeField f, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  return Matrix::from_rows(f, rows);
}

// Z/2 x Z/2 brace over F_5, i = 2.
inline BraceRepresentation ex41() {
  const PrimeField f(5);
  SkewBrace A = catalog::unipotent_p2(2);
  return representation_from_generators(A, f, 2, {{2, M(f, {{-1, 0}, {0, -1}})}, {1, M(f, {{0, 1}, {1, 0}})}},
                                        {{3, M(f, {{0, -1}, {1, 0}})}});
}

inline BraceRepresentation ex42() {
  const PrimeField f(3);
  SkewBrace A = catalog::semidirect_p2(3);
  return representation_from_generators(
      A, f, 3, {{2, M(f, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}})}, {1, Matrix::identity(f, 3)}},
      {{2, M(f, {{1, 0, 0}, {1, 1, 0}, {0, 0, 1}})}, {1, M(f, {{1, 0, 0}, {0, -1, 0}, {0, 0, 1}})}});
}

inline BraceRepresentation ex43() {
  const PrimeField f(2);
  SkewBrace A = catalog::s3_factorization();
  return representation_from_generators(
      A, f, 2, {{perm({{1, 2, 3}}), M(f, {{0, 1}, {1, 1}})}, {perm({{1, 2}}), M(f, {{1, 1}, {0, 1}})}},
      {{perm({{1, 2, 3}}), Matrix::identity(f, 2)}, {perm({{1, 2}}), M(f, {{1, 1}, {0, 1}})}});
}

// (k^2, alpha, alpha) on the Z/2 x Z/2 brace over F_2; A/A*A has the coset
// of (0,1) at index 1.
inline BraceRepresentation jordan_lift() {
  const PrimeField f(2);
  return lift_representation(catalog::unipotent_p2(2), {Matrix::identity(f, 2), M(f, {{1, 1}, {0, 1}})},
                             LiftMode::diagonal);
}

// 2-dim simple of S3 over F_7 and the twisting matrix.
inline std::vector<Matrix> s3_alpha(const SkewBrace& A, PrimeField f = PrimeField(7)) {
  return extend_homomorphism(*A.additive_group(), {{perm({{1, 2, 3}}), M(f, {{0, -1}, {1, -1}})},
                                                   {perm({{1, 2}}), M(f, {{-1, 1}, {0, 1}})}});
}

inline Matrix twist_f(PrimeField f = PrimeField(7)) { return M(f, {{-1, 2}, {-2, 1}}); }

inline TwistedPair twisted_pair() {
  SkewBrace A = catalog::from_spec("trivial:sym:3");
  return build_twisted_pair(A, s3_alpha(A), twist_f());
}

// Almost trivial S3 over F_7: the 2-dim simple on (A,.), (A,o) trivial.
inline BraceRepresentation s3_clifford() {
  SkewBrace A = catalog::from_spec("almost_trivial:sym:3");
  return trivial_side_extension(A, Side::dot, s3_alpha(A));
}

inline IdealSubset a3(const SkewBrace& A) { return make_ideal(A, {perm({}), perm({{1, 2, 3}}), perm({{1, 3, 2}})}); }

// beta(1,0) = [2], beta(0,1) = [1] over F_7 (2 is a cube root of unity).
inline std::vector<Matrix> char_obstruction_beta() {
  const PrimeField f(7);
  SkewBrace A = catalog::semidirect_p2(3);
  return extend_homomorphism(*A.additive_group(), {{2, M(f, {{2}})}, {1, M(f, {{1}})}});
}

// 1-dim tensor lift on qq'(7,3,2): the generator coset acts by 4.
inline BraceRepresentation qq_tensor_lift() {
  const PrimeField f(7);
  SkewBrace A = catalog::qq_prime(7, 3, 2);
  return lift_representation(A, {M(f, {{1}}), M(f, {{4}}), M(f, {{2}})}, LiftMode::tensor);
}

}  // namespace fixtures

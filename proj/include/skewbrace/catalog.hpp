#pragma once

// Named skew brace families.
//
// Element indexing:
//   cyclic(n)            k in Z/n                      -> k
//   sym(n), n in {3,4}   permutations of {1..n}        -> lexicographic rank
//                        of the one-line notation; (s.t)(x) = s(t(x))
//   pair families        (a1, a2) in Z/m1 x Z/m2       -> a1*m2 + a2

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/field.hpp"

namespace skewbrace::catalog {

struct BaseGroup {
  CayleyTable table;
  std::vector<std::string> labels;
};

using Permutation = std::vector<std::size_t>;  // 0-based one-line notation

inline std::vector<Permutation> permutations(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Cycle notation with 1-based points, "(1)" for the identity.
inline std::string cycle_label(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      if (j != i) out += " ";
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "(1)" : out;
}

// Index of a permutation given in 1-based cycle notation, e.g. {{1,2,3}}.
inline std::size_t permutation_index(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i] - 1] = c[(i + 1) % c.size()] - 1;
  auto all = permutations(n);
  return static_cast<std::size_t>(std::find(all.begin(), all.end(), p) - all.begin());
}

inline BaseGroup cyclic(std::size_t n) {
  if (n == 0) throw BadParams("cyclic(n) needs n >= 1");
  BaseGroup g{CayleyTable(n, std::vector<std::size_t>(n)), {}};
  for (std::size_t a = 0; a < n; ++a) {
    g.labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  }
  return g;
}

inline BaseGroup symmetric(std::size_t n) {
  if (n != 3 && n != 4) throw BadParams("sym(n) is available for n in {3,4}");
  auto perms = permutations(n);
  const std::size_t m = perms.size();
  BaseGroup g{CayleyTable(m, std::vector<std::size_t>(m)), {}};
  for (std::size_t i = 0; i < m; ++i) {
    g.labels.push_back(cycle_label(perms[i]));
    for (std::size_t j = 0; j < m; ++j) {
      Permutation c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[i][perms[j][x]];
      g.table[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return g;
}

inline BaseGroup base_group(const std::string& kind, std::size_t param) {
  if (kind == "cyclic") return cyclic(param);
  if (kind == "sym") return symmetric(param);
  throw BadParams("unknown group kind '" + kind + "' (expected cyclic or sym)");
}

// (G, ., .)
inline SkewBrace trivial(const BaseGroup& g) { return verify_brace(g.table, g.table, g.labels); }

// (G, ., .^op)
inline SkewBrace almost_trivial(const BaseGroup& g) {
  const std::size_t n = g.table.size();
  CayleyTable op(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) op[a][b] = g.table[b][a];
  return verify_brace(g.table, op, g.labels);
}

inline std::string pair_label(std::size_t a1, std::size_t a2) {
  return "(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
}

inline std::size_t pair_index(std::size_t a1, std::size_t a2, std::size_t m2) { return a1 * m2 + a2; }

namespace detail {

// Brace on Z/m1 x Z/m2 with componentwise addition and the given circ.
template <class Circ>
SkewBrace pair_brace(std::size_t m1, std::size_t m2, Circ circ) {
  const std::size_t n = m1 * m2;
  CayleyTable dot(n, std::vector<std::size_t>(n)), c(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels(n);
  for (std::size_t a1 = 0; a1 < m1; ++a1)
    for (std::size_t a2 = 0; a2 < m2; ++a2) {
      const std::size_t a = pair_index(a1, a2, m2);
      labels[a] = pair_label(a1, a2);
      for (std::size_t b1 = 0; b1 < m1; ++b1)
        for (std::size_t b2 = 0; b2 < m2; ++b2) {
          const std::size_t b = pair_index(b1, b2, m2);
          dot[a][b] = pair_index((a1 + b1) % m1, (a2 + b2) % m2, m2);
          auto [r1, r2] = circ(a1, a2, b1, b2);
          c[a][b] = pair_index(r1 % m1, r2 % m2, m2);
        }
    }
  return verify_brace(dot, c, std::move(labels));
}

}  // namespace detail

// (Z/p x Z/2, +, o) with (a1,a2) o (b1,b2) = (a1 + (-1)^a2 b1, a2 + b2), p odd prime.
inline SkewBrace semidirect_p2(std::size_t p) {
  if (p < 3 || !is_prime(p)) throw BadParams("semidirect_p2 needs an odd prime p, got " + std::to_string(p));
  return detail::pair_brace(p, 2, [p](std::size_t a1, std::size_t a2, std::size_t b1, std::size_t b2) {
    std::size_t s = a2 == 0 ? b1 : (p - b1) % p;
    return std::pair{a1 + s, a2 + b2};
  });
}

// (Z/p x Z/p, +, o) with (a1,a2) o (b1,b2) = (a1 + b1 + a2 b2, a2 + b2), p prime.
inline SkewBrace unipotent_p2(std::size_t p) {
  if (!is_prime(p)) throw BadParams("unipotent_p2 needs a prime p, got " + std::to_string(p));
  return detail::pair_brace(p, p, [](std::size_t a1, std::size_t a2, std::size_t b1, std::size_t b2) {
    return std::pair{a1 + b1 + a2 * b2, a2 + b2};
  });
}

// (Z/q x Z/q', +, o) with (a1,a2) o (b1,b2) = (a1 + l^a2 b1, a2 + b2), where
// q, q' are primes, q = 1 mod q', and l has multiplicative order q' mod q.
inline SkewBrace qq_prime(std::size_t q, std::size_t qp, std::size_t l) {
  if (!is_prime(q) || !is_prime(qp)) throw BadParams("qq' needs primes q and q'");
  if (q % qp != 1) throw BadParams("qq' needs q = 1 mod q'");
  const PrimeField f(q);
  if (l % q == 0 || f.order(static_cast<FieldElement>(l % q)) != qp)
    throw BadParams("lambda = " + std::to_string(l) + " does not have multiplicative order " +
                    std::to_string(qp) + " mod " + std::to_string(q));
  return detail::pair_brace(q, qp, [f, l](std::size_t a1, std::size_t a2, std::size_t b1, std::size_t b2) {
    std::size_t scale = f.pow(static_cast<FieldElement>(l % f.modulus()), a2);
    return std::pair{a1 + f.mul(static_cast<FieldElement>(scale), static_cast<FieldElement>(b1)), a2 + b2};
  });
}

// (S3, ., o) from the exact factorization S3 = <(1 2)> A3: writing s = s1 s2
// with s1 in <(1 2)> and s2 in A3, s o t = s1 t s2.
inline SkewBrace s3_factorization() {
  BaseGroup g = symmetric(3);
  const std::size_t transposition = permutation_index(3, {{1, 2}});
  const std::size_t e = permutation_index(3, {});
  const std::vector<std::size_t> a3{e, permutation_index(3, {{1, 2, 3}}), permutation_index(3, {{1, 3, 2}})};
  const std::size_t n = 6;
  std::vector<std::size_t> s1(n), s2(n);
  for (std::size_t first : {e, transposition})
    for (std::size_t second : a3) {
      std::size_t s = g.table[first][second];
      s1[s] = first;
      s2[s] = second;
    }
  CayleyTable circ(n, std::vector<std::size_t>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) circ[s][t] = g.table[g.table[s1[s]][t]][s2[s]];
  return verify_brace(g.table, circ, g.labels);
}

// Parses "family:param:param", e.g. "semidirect_p2:3", "trivial:sym:3",
// "qq:7:3:2", "s3_factorization".
inline SkewBrace from_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.empty()) throw BadParams("empty catalog spec");
  auto number = [&](std::size_t i) -> std::size_t {
    if (i >= parts.size()) throw BadParams("catalog spec '" + spec + "' is missing parameter " + std::to_string(i));
    const std::string& s = parts[i];
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 9)
      throw BadParams("catalog parameter '" + s + "' is not a small non-negative integer");
    return std::stoul(s);
  };
  auto expect_count = [&](std::size_t k) {
    if (parts.size() != k)
      throw BadParams("catalog spec '" + spec + "' expects " + std::to_string(k - 1) + " parameter(s)");
  };
  const std::string& family = parts[0];
  if (family == "trivial" || family == "almost_trivial") {
    expect_count(3);
    BaseGroup g = base_group(parts[1], number(2));
    return family == "trivial" ? trivial(g) : almost_trivial(g);
  }
  if (family == "semidirect_p2") {
    expect_count(2);
    return semidirect_p2(number(1));
  }
  if (family == "unipotent_p2") {
    expect_count(2);
    return unipotent_p2(number(1));
  }
  if (family == "qq" || family == "qqprime") {
    expect_count(4);
    return qq_prime(number(1), number(2), number(3));
  }
  if (family == "s3_factorization") {
    expect_count(1);
    return s3_factorization();
  }
  throw BadParams("unknown catalog family '" + family + "'");
}

}  // namespace skewbrace::catalog

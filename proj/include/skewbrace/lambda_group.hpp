#pragma once

// The semidirect product (A,.) x|_{lambda^op} (A,o) of a skew brace.
//
// Pairs (a,b) are indexed a*n + b. The product is
//   (a,b)(c,d) = (a . lambda^op_b(c), b o d).

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/group.hpp"

namespace skewbrace {

class LambdaGroup final : public FiniteGroup {
 public:
  // Tables with at most this many entries per side are materialized.
  static constexpr std::size_t kMaterializeLimit = 64;

  explicit LambdaGroup(SkewBrace brace) : brace_(std::move(brace)) {
    const std::size_t n = brace_.order();
    if (n * n <= kMaterializeLimit) {
      const std::size_t m = n * n;
      table_.resize(m * m);
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) table_[x * m + y] = static_cast<std::uint32_t>(compute(x, y));
    }
    finalize();
  }

  const SkewBrace& brace() const { return brace_; }
  bool materialized() const { return !table_.empty(); }

  std::size_t order() const override { return brace_.order() * brace_.order(); }
  std::size_t multiply(std::size_t x, std::size_t y) const override {
    if (!table_.empty()) return table_[x * order() + y];
    return compute(x, y);
  }
  std::string label(std::size_t x) const override {
    return "(" + brace_.label(first(x)) + "," + brace_.label(second(x)) + ")";
  }

  std::size_t index(std::size_t a, std::size_t b) const { return a * brace_.order() + b; }
  std::size_t first(std::size_t x) const { return x / brace_.order(); }
  std::size_t second(std::size_t x) const { return x % brace_.order(); }

 private:
  std::size_t compute(std::size_t x, std::size_t y) const {
    const std::size_t a = first(x), b = second(x), c = first(y), d = second(y);
    return index(brace_.dot(a, brace_.lambda_op(b, c)), brace_.circ(b, d));
  }

  SkewBrace brace_;
  std::vector<std::uint32_t> table_;
};

using LambdaGroupPtr = std::shared_ptr<const LambdaGroup>;

inline LambdaGroupPtr lambda_group(const SkewBrace& A) { return std::make_shared<LambdaGroup>(A); }

// Indices of {(x,y) : x,y in S} inside Lambda_A, sorted.
inline std::vector<std::size_t> lambda_pairs(const LambdaGroup& L, const std::vector<std::size_t>& S) {
  std::vector<std::size_t> out;
  for (auto x : S)
    for (auto y : S) out.push_back(L.index(x, y));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::shared_ptr<const Subgroup> embed_lambda_subgroup(const LambdaGroupPtr& L,
                                                             const IdealSubset& I) {
  return std::make_shared<Subgroup>(L, lambda_pairs(*L, I.members()));
}

// The {(a,e)} and {(e,b)} copies of (A,.) and (A,o) inside Lambda_A.
inline std::shared_ptr<const Subgroup> additive_part(const LambdaGroupPtr& L) {
  std::vector<std::size_t> el;
  const auto& A = L->brace();
  for (std::size_t a = 0; a < A.order(); ++a) el.push_back(L->index(a, A.identity()));
  return std::make_shared<Subgroup>(L, std::move(el));
}

inline std::shared_ptr<const Subgroup> multiplicative_part(const LambdaGroupPtr& L) {
  std::vector<std::size_t> el;
  const auto& A = L->brace();
  for (std::size_t b = 0; b < A.order(); ++b) el.push_back(L->index(A.identity(), b));
  return std::make_shared<Subgroup>(L, std::move(el));
}

struct ConjugationWitness {
  std::size_t g;          // element of Lambda_A
  std::size_t h;          // element of Lambda_S
  std::size_t conjugate;  // g h g^-1, outside Lambda_S
};

// Exhaustive check that g Lambda_S g^-1 = Lambda_S for every g in Lambda_A.
// Returns the first failing (g, h) in index order, or nullopt when normal.
inline std::optional<ConjugationWitness> check_lambda_subgroup_normal(
    const LambdaGroup& L, std::vector<std::size_t> S) {
  const auto& A = L.brace();
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  if (!A.additive_group()->is_subgroup(S) || !A.multiplicative_group()->is_subgroup(S))
    throw NotASubgroup("S must be a subgroup of both (A,.) and (A,o)");
  auto pairs = lambda_pairs(L, S);
  std::vector<char> in(L.order(), 0);
  for (auto x : pairs) in[x] = 1;
  for (std::size_t g = 0; g < L.order(); ++g) {
    const std::size_t gi = L.inverse(g);
    for (auto h : pairs) {
      std::size_t c = L.multiply(L.multiply(g, h), gi);
      if (!in[c]) return ConjugationWitness{g, h, c};
    }
  }
  return std::nullopt;
}

}  // namespace skewbrace

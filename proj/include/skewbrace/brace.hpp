#pragma once

// Finite skew braces held as two Cayley tables on indices 0..n-1.
//
// A SkewBrace is only obtainable through verify_brace(), so every instance
// satisfies the group axioms for both operations and the brace relation
//   a o (b . c) = (a o b) . a^-1 . (a o c).
// Instances are cheap handles to immutable shared tables.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "skewbrace/errors.hpp"
#include "skewbrace/group.hpp"

namespace skewbrace {

using CayleyTable = std::vector<std::vector<std::size_t>>;

namespace detail {

struct BraceData {
  std::size_t n = 0;
  std::vector<std::uint32_t> dot, circ;
  std::vector<std::uint32_t> dot_inv, circ_inv;
  std::size_t identity = 0;
  std::vector<std::string> labels;
  std::shared_ptr<const TableGroup> additive, multiplicative;
};

// Identity of a table, or n when there is none.
inline std::size_t find_identity(std::size_t n, const std::vector<std::uint32_t>& t) {
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = t[e * n + x] == x && t[x * n + e] == x;
    if (ok) return e;
  }
  return n;
}

// Validates group axioms exhaustively; returns the inverse table.
inline std::vector<std::uint32_t> check_group(Operation which, std::size_t n,
                                              const std::vector<std::uint32_t>& t,
                                              std::size_t& identity) {
  for (std::size_t i = 0; i < n * n; ++i)
    if (t[i] >= n)
      throw NotAGroup(which, "entry at (" + std::to_string(i / n) + "," +
                                 std::to_string(i % n) + ") is out of range");
  identity = find_identity(n, t);
  if (identity == n) throw NotAGroup(which, "no two-sided identity");
  std::vector<std::uint32_t> inv(n, static_cast<std::uint32_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (t[a * n + b] == identity && t[b * n + a] == identity) {
        inv[a] = static_cast<std::uint32_t>(b);
        break;
      }
    if (inv[a] == n)
      throw NotAGroup(which, "element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]])
          throw NotAGroup(which, "associativity fails at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
  return inv;
}

inline std::vector<std::uint32_t> flatten(Operation which, const CayleyTable& t, std::size_t n) {
  if (t.size() != n)
    throw NotAGroup(which, "table has " + std::to_string(t.size()) + " rows, expected " +
                               std::to_string(n));
  std::vector<std::uint32_t> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].size() != n)
      throw NotAGroup(which, "row " + std::to_string(i) + " has " + std::to_string(t[i].size()) +
                                 " entries, expected " + std::to_string(n));
    for (auto x : t[i]) flat.push_back(static_cast<std::uint32_t>(std::min<std::size_t>(x, n)));
  }
  return flat;
}

}  // namespace detail

class SkewBrace;
SkewBrace verify_brace(const CayleyTable& dot, const CayleyTable& circ,
                       std::vector<std::string> labels);

class SkewBrace {
 public:
  std::size_t order() const noexcept { return d_->n; }
  std::size_t identity() const noexcept { return d_->identity; }

  std::size_t dot(std::size_t a, std::size_t b) const { return d_->dot[a * d_->n + b]; }
  std::size_t circ(std::size_t a, std::size_t b) const { return d_->circ[a * d_->n + b]; }
  // a^-1 in (A,.) and a-bar in (A,o).
  std::size_t dot_inv(std::size_t a) const { return d_->dot_inv[a]; }
  std::size_t circ_inv(std::size_t a) const { return d_->circ_inv[a]; }

  // lambda_a(b) = a^-1 . (a o b)
  std::size_t lambda(std::size_t a, std::size_t b) const { return dot(dot_inv(a), circ(a, b)); }
  // lambda^op_a(b) = (a o b) . a^-1
  std::size_t lambda_op(std::size_t a, std::size_t b) const { return dot(circ(a, b), dot_inv(a)); }
  // a * b = a^-1 . (a o b) . b^-1
  std::size_t star(std::size_t a, std::size_t b) const { return dot(lambda(a, b), dot_inv(b)); }

  const std::string& label(std::size_t a) const { return d_->labels[a]; }
  const std::vector<std::string>& labels() const { return d_->labels; }

  CayleyTable dot_table() const { return table(d_->dot); }
  CayleyTable circ_table() const { return table(d_->circ); }

  std::shared_ptr<const TableGroup> additive_group() const { return d_->additive; }
  std::shared_ptr<const TableGroup> multiplicative_group() const { return d_->multiplicative; }

  bool is_trivial() const { return d_->dot == d_->circ; }
  bool additive_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = 0; b < order(); ++b)
        if (dot(a, b) != dot(b, a)) return false;
    return true;
  }

  friend bool operator==(const SkewBrace& x, const SkewBrace& y) {
    return x.d_ == y.d_ || (x.d_->dot == y.d_->dot && x.d_->circ == y.d_->circ);
  }

 private:
  friend SkewBrace verify_brace(const CayleyTable&, const CayleyTable&, std::vector<std::string>);
  explicit SkewBrace(std::shared_ptr<const detail::BraceData> d) : d_(std::move(d)) {}

  CayleyTable table(const std::vector<std::uint32_t>& flat) const {
    CayleyTable t(order(), std::vector<std::size_t>(order()));
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = 0; b < order(); ++b) t[a][b] = flat[a * order() + b];
    return t;
  }

  std::shared_ptr<const detail::BraceData> d_;
};

// Exhaustive validation: both group structures, the shared identity, then the
// brace relation over all n^3 triples (first violation in lexicographic
// order). The relation alone would catch a mismatch, but as an anonymous
// triple.
inline SkewBrace verify_brace(const CayleyTable& dot_table, const CayleyTable& circ_table,
                              std::vector<std::string> labels = {}) {
  const std::size_t n = dot_table.size();
  if (n == 0) throw NotAGroup(Operation::dot, "empty table");
  auto d = std::make_shared<detail::BraceData>();
  d->n = n;
  d->dot = detail::flatten(Operation::dot, dot_table, n);
  d->circ = detail::flatten(Operation::circ, circ_table, n);
  std::size_t dot_e = 0, circ_e = 0;
  d->dot_inv = detail::check_group(Operation::dot, n, d->dot, dot_e);
  d->circ_inv = detail::check_group(Operation::circ, n, d->circ, circ_e);
  if (dot_e != circ_e) throw IdentityMismatch(dot_e, circ_e);
  const auto& D = d->dot;
  const auto& C = d->circ;
  const auto& inv = d->dot_inv;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t lhs = C[a * n + D[b * n + c]];
        std::size_t rhs = D[D[C[a * n + b] * n + inv[a]] * n + C[a * n + c]];
        if (lhs != rhs) throw BraceRelationViolation(a, b, c);
      }
  d->identity = dot_e;
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  if (labels.size() != n) throw BadParams("label count does not match brace order");
  d->labels = std::move(labels);
  d->additive = std::make_shared<TableGroup>(n, d->dot, d->labels);
  d->multiplicative = std::make_shared<TableGroup>(n, d->circ, d->labels);
  return SkewBrace(std::move(d));
}

struct LambdaPair {
  std::size_t lambda;     // a^-1 . (a o b)
  std::size_t lambda_op;  // (a o b) . a^-1
};

inline LambdaPair lambda_maps(const SkewBrace& A, std::size_t a, std::size_t b) {
  if (a >= A.order() || b >= A.order()) throw BadParams("element index out of range");
  return {A.lambda(a, b), A.lambda_op(a, b)};
}

// An ideal: normal in (A,.) and (A,o), stable under every lambda_a.
class IdealSubset {
 public:
  const SkewBrace& brace() const { return brace_; }
  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(std::size_t a) const {
    return std::binary_search(members_.begin(), members_.end(), a);
  }

  friend bool operator==(const IdealSubset& x, const IdealSubset& y) {
    return x.members_ == y.members_ && x.brace_ == y.brace_;
  }

 private:
  friend std::optional<IdealSubset> as_ideal(const SkewBrace&, std::vector<std::size_t>);
  IdealSubset(SkewBrace brace, std::vector<std::size_t> members)
      : brace_(std::move(brace)), members_(std::move(members)) {}
  SkewBrace brace_;
  std::vector<std::size_t> members_;
};

inline bool is_ideal(const SkewBrace& A, const std::vector<std::size_t>& members) {
  if (!A.additive_group()->is_normal_subgroup(members)) return false;
  if (!A.multiplicative_group()->is_normal_subgroup(members)) return false;
  std::vector<char> in(A.order(), 0);
  for (auto x : members) in[x] = 1;
  for (std::size_t a = 0; a < A.order(); ++a)
    for (auto x : members)
      if (!in[A.lambda(a, x)]) return false;
  return true;
}

inline std::optional<IdealSubset> as_ideal(const SkewBrace& A, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (auto x : members)
    if (x >= A.order()) return std::nullopt;
  if (!is_ideal(A, members)) return std::nullopt;
  return IdealSubset(A, std::move(members));
}

inline IdealSubset make_ideal(const SkewBrace& A, std::vector<std::size_t> members) {
  auto I = as_ideal(A, std::move(members));
  if (!I) throw BadParams("subset is not an ideal");
  return *I;
}

inline IdealSubset trivial_ideal(const SkewBrace& A) { return make_ideal(A, {A.identity()}); }

inline IdealSubset whole_ideal(const SkewBrace& A) {
  std::vector<std::size_t> all(A.order());
  std::iota(all.begin(), all.end(), 0);
  return make_ideal(A, std::move(all));
}

struct StarResult {
  CayleyTable table;    // table[a][b] = a * b
  IdealSubset derived;  // A*A
};

inline StarResult star_and_derived_ideal(const SkewBrace& A) {
  const std::size_t n = A.order();
  CayleyTable t(n, std::vector<std::size_t>(n));
  std::vector<std::size_t> gens;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      t[a][b] = A.star(a, b);
      gens.push_back(t[a][b]);
    }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  auto members = A.additive_group()->closure(gens);
  auto I = as_ideal(A, members);
  if (!I) throw InternalInvariantViolation("A*A failed the ideal check");
  return {std::move(t), std::move(*I)};
}

inline IdealSubset derived_ideal(const SkewBrace& A) { return star_and_derived_ideal(A).derived; }

// All subgroups of (A,.), by closing every known subgroup under one more
// element until no new subgroup appears. Sorted by (size, members).
inline std::vector<std::vector<std::size_t>> enumerate_subgroups(const FiniteGroup& g) {
  std::vector<std::vector<std::size_t>> found{{g.identity()}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    std::vector<char> in(g.order(), 0);
    for (auto x : found[i]) in[x] = 1;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      auto gens = found[i];
      gens.push_back(x);
      auto h = g.closure(gens);
      if (std::find(found.begin(), found.end(), h) == found.end()) found.push_back(std::move(h));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return found;
}

inline std::vector<IdealSubset> enumerate_ideals(const SkewBrace& A, std::size_t max_order = 24) {
  if (A.order() > max_order) throw BudgetExceeded("ideal enumeration (order)", A.order(), max_order);
  std::vector<IdealSubset> out;
  for (auto& h : enumerate_subgroups(*A.additive_group()))
    if (auto I = as_ideal(A, h)) out.push_back(std::move(*I));
  return out;
}

struct QuotientBrace {
  SkewBrace brace;
  std::vector<std::size_t> projection;       // element -> coset index
  std::vector<std::size_t> representatives;  // coset index -> smallest member
};

// A/I on cosets ordered by their smallest member.
inline QuotientBrace quotient_brace(const SkewBrace& A, const IdealSubset& I) {
  const std::size_t n = A.order();
  std::vector<std::size_t> proj(n, n), reps;
  for (std::size_t a = 0; a < n; ++a) {
    if (proj[a] != n) continue;
    std::vector<std::size_t> dot_coset, circ_coset;
    for (auto x : I.members()) {
      dot_coset.push_back(A.dot(a, x));
      circ_coset.push_back(A.circ(a, x));
    }
    std::sort(dot_coset.begin(), dot_coset.end());
    std::sort(circ_coset.begin(), circ_coset.end());
    if (dot_coset != circ_coset) throw CosetMismatch(a);
    for (auto y : dot_coset) proj[y] = reps.size();
    reps.push_back(a);
  }
  const std::size_t m = reps.size();
  CayleyTable dot(m, std::vector<std::size_t>(m)), circ(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      dot[i][j] = proj[A.dot(reps[i], reps[j])];
      circ[i][j] = proj[A.circ(reps[i], reps[j])];
    }
  std::vector<std::string> labels;
  for (auto r : reps) labels.push_back("[" + A.label(r) + "]");
  return {verify_brace(dot, circ, std::move(labels)), std::move(proj), std::move(reps)};
}

// (A, .^op, o). Its lambda map is the lambda^op of A.
inline SkewBrace opposite_brace(const SkewBrace& A) {
  const std::size_t n = A.order();
  CayleyTable dot(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) dot[a][b] = A.dot(b, a);
  SkewBrace op = verify_brace(dot, A.circ_table(), A.labels());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (op.lambda(a, b) != A.lambda_op(a, b))
        throw InternalInvariantViolation("lambda of opposite brace differs from lambda^op");
  return op;
}

}  // namespace skewbrace

#pragma once

// Finite groups on element indices 0..order-1, and matrix-valued
// homomorphisms defined on them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewbrace/errors.hpp"
#include "skewbrace/matrix.hpp"

namespace skewbrace {

class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;

  virtual std::size_t order() const = 0;
  virtual std::size_t multiply(std::size_t a, std::size_t b) const = 0;
  virtual std::string label(std::size_t a) const { return std::to_string(a); }

  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverses_[a]; }
  // Greedy generating set: scan elements in index order, keep each one not
  // already in the subgroup generated by the previous picks.
  const std::vector<std::size_t>& generators() const { return generators_; }

  // Sorted elements of the subgroup generated by gens.
  std::vector<std::size_t> closure(const std::vector<std::size_t>& gens) const {
    std::vector<char> seen(order(), 0);
    std::vector<std::size_t> frontier{identity_};
    seen[identity_] = 1;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (auto g : gens) {
        std::size_t y = multiply(frontier[i], g);
        if (!seen[y]) {
          seen[y] = 1;
          frontier.push_back(y);
        }
      }
    }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
  }

  bool is_subgroup(const std::vector<std::size_t>& elements) const {
    std::vector<char> in(order(), 0);
    for (auto e : elements) in[e] = 1;
    if (elements.empty() || !in[identity_]) return false;
    for (auto a : elements)
      for (auto b : elements)
        if (!in[multiply(a, b)]) return false;
    return true;
  }

  bool is_normal_subgroup(const std::vector<std::size_t>& elements) const {
    if (!is_subgroup(elements)) return false;
    std::vector<char> in(order(), 0);
    for (auto e : elements) in[e] = 1;
    for (std::size_t g = 0; g < order(); ++g)
      for (auto h : elements)
        if (!in[multiply(multiply(g, h), inverse(g))]) return false;
    return true;
  }

  bool is_abelian() const {
    for (auto a : generators_)
      for (auto b : generators_)
        if (multiply(a, b) != multiply(b, a)) return false;
    return true;
  }

  // Same order and same multiplication on every pair.
  bool same_as(const FiniteGroup& other) const {
    if (this == &other) return true;
    if (order() != other.order()) return false;
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = 0; b < order(); ++b)
        if (multiply(a, b) != other.multiply(a, b)) return false;
    return true;
  }

 protected:
  // Derived constructors call this once multiply() is usable.
  void finalize() {
    const std::size_t n = order();
    identity_ = n;
    for (std::size_t e = 0; e < n && identity_ == n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x)
        ok = multiply(e, x) == x && multiply(x, e) == x;
      if (ok) identity_ = e;
    }
    if (identity_ == n) throw InternalInvariantViolation("group without identity");
    inverses_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n && inverses_[a] == n; ++b)
        if (multiply(a, b) == identity_) inverses_[a] = b;
    generators_.clear();
    std::vector<char> covered(n, 0);
    covered[identity_] = 1;
    for (std::size_t g = 0; g < n; ++g) {
      if (covered[g]) continue;
      generators_.push_back(g);
      for (auto x : closure(generators_)) covered[x] = 1;
    }
  }

 private:
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverses_;
  std::vector<std::size_t> generators_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Group given by an explicit Cayley table (assumed already validated).
class TableGroup final : public FiniteGroup {
 public:
  TableGroup(std::size_t n, std::vector<std::uint32_t> table,
             std::vector<std::string> labels = {})
      : n_(n), table_(std::move(table)), labels_(std::move(labels)) {
    finalize();
  }

  std::size_t order() const override { return n_; }
  std::size_t multiply(std::size_t a, std::size_t b) const override {
    return table_[a * n_ + b];
  }
  std::string label(std::size_t a) const override {
    return a < labels_.size() ? labels_[a] : std::to_string(a);
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> table_;
  std::vector<std::string> labels_;
};

// A subgroup of a parent group, re-indexed 0..k-1 in increasing parent order.
class Subgroup final : public FiniteGroup {
 public:
  Subgroup(GroupPtr parent, std::vector<std::size_t> elements)
      : parent_(std::move(parent)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    if (!parent_->is_subgroup(elements_))
      throw NotASubgroup("element set is not a subgroup");
    local_.assign(parent_->order(), parent_->order());
    for (std::size_t i = 0; i < elements_.size(); ++i) local_[elements_[i]] = i;
    finalize();
  }

  std::size_t order() const override { return elements_.size(); }
  std::size_t multiply(std::size_t a, std::size_t b) const override {
    return local_[parent_->multiply(elements_[a], elements_[b])];
  }
  std::string label(std::size_t a) const override { return parent_->label(elements_[a]); }

  const GroupPtr& parent() const { return parent_; }
  const std::vector<std::size_t>& elements() const { return elements_; }
  std::size_t parent_index(std::size_t a) const { return elements_[a]; }

 private:
  GroupPtr parent_;
  std::vector<std::size_t> elements_;
  std::vector<std::size_t> local_;
};

// First pair (a,b) in lexicographic order with hom(a*b) != hom(a) hom(b), or
// (e,e) when hom(e) != I. Groups with more than 64 elements are checked on
// (a, generator) pairs only, which is equivalent.
inline std::optional<std::pair<std::size_t, std::size_t>> homomorphism_violation(
    const FiniteGroup& g, const std::vector<Matrix>& images) {
  const std::size_t e = g.identity();
  if (images.size() != g.order()) throw DimensionMismatch("one image per element required");
  if (!images[e].is_identity()) return std::make_pair(e, e);
  const bool all_pairs = g.order() <= 64;
  std::vector<char> is_gen(g.order(), 0);
  for (auto x : g.generators()) is_gen[x] = 1;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      if (!all_pairs && !is_gen[b]) continue;
      if (images[g.multiply(a, b)] != images[a] * images[b]) return std::make_pair(a, b);
    }
  return std::nullopt;
}

// Images of every element from images of generators, by breadth-first search
// over words. Throws NotAHomomorphism(side, x, g) when two words for the same
// element disagree (x*g reached inconsistently), and BadParams when the
// generators do not generate the group.
inline std::vector<Matrix> extend_homomorphism(
    const FiniteGroup& g, const std::vector<std::pair<std::size_t, Matrix>>& gens,
    Operation side = Operation::dot) {
  if (gens.empty()) throw BadParams("no generator images given");
  const Matrix& first = gens.front().second;
  if (!first.is_square()) throw DimensionMismatch("generator image not square");
  const std::size_t d = first.rows();
  std::vector<std::optional<Matrix>> img(g.order());
  img[g.identity()] = Matrix::identity(first.field(), d);
  std::deque<std::size_t> queue{g.identity()};
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& [gen, m] : gens) {
      if (m.rows() != d || m.cols() != d)
        throw DimensionMismatch("generator images differ in size");
      std::size_t y = g.multiply(x, gen);
      Matrix candidate = *img[x] * m;
      if (!img[y]) {
        img[y] = std::move(candidate);
        queue.push_back(y);
      } else if (*img[y] != candidate) {
        throw NotAHomomorphism(side, x, gen);
      }
    }
  }
  std::vector<Matrix> out;
  out.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (!img[i]) throw BadParams("generator images do not determine element " + g.label(i));
    out.push_back(std::move(*img[i]));
  }
  return out;
}

}  // namespace skewbrace

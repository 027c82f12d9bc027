#pragma once

// Finite-dimensional modules of a finite group over F_q, given by one matrix
// per group element.

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "skewbrace/errors.hpp"
#include "skewbrace/group.hpp"
#include "skewbrace/matrix.hpp"

namespace skewbrace {

class GroupModule {
 public:
  // Verifies the homomorphism law (all pairs for |G| <= 64, element-by-
  // generator pairs otherwise) unless verify is false.
  GroupModule(GroupPtr group, PrimeField field, std::size_t dim, std::vector<Matrix> action,
              bool verify = true)
      : group_(std::move(group)), field_(field), dim_(dim), action_(std::move(action)) {
    if (action_.size() != group_->order())
      throw DimensionMismatch("module needs one matrix per group element");
    for (const auto& m : action_)
      if (m.rows() != dim_ || m.cols() != dim_ || m.field() != field_)
        throw DimensionMismatch("module matrix has wrong size or field");
    generators_ = group_->generators();
    if (verify) {
      if (auto v = homomorphism_violation(*group_, action_))
        throw NotAHomomorphism(Operation::dot, v->first, v->second);
    }
  }

  // Trivial module of the given dimension.
  static GroupModule trivial(GroupPtr group, PrimeField field, std::size_t dim) {
    std::vector<Matrix> act(group->order(), Matrix::identity(field, dim));
    return GroupModule(std::move(group), field, dim, std::move(act), false);
  }

  // Left regular module: e_h -> e_{g h}.
  static GroupModule regular(GroupPtr group, PrimeField field) {
    const std::size_t n = group->order();
    std::vector<Matrix> act;
    act.reserve(n);
    for (std::size_t g = 0; g < n; ++g) {
      Matrix m(field, n, n);
      for (std::size_t h = 0; h < n; ++h) m.set(group->multiply(g, h), h, 1);
      act.push_back(std::move(m));
    }
    return GroupModule(group, field, n, std::move(act), false);
  }

  const GroupPtr& group() const { return group_; }
  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Matrix& action(std::size_t g) const { return action_[g]; }
  const std::vector<Matrix>& actions() const { return action_; }
  const std::vector<std::size_t>& generators() const { return generators_; }

  std::vector<Matrix> generator_matrices() const {
    std::vector<Matrix> out;
    for (auto g : generators_) out.push_back(action_[g]);
    return out;
  }

  // Same module, analysed through a different generating list.
  GroupModule with_generators(std::vector<std::size_t> gens) const {
    if (group_->closure(gens).size() != group_->order())
      throw BadParams("generator list does not generate the group");
    GroupModule out = *this;
    out.generators_ = std::move(gens);
    return out;
  }

  bool same_group(const GroupModule& other) const { return group_->same_as(*other.group_); }

  bool is_trivial() const {
    for (auto g : generators_)
      if (!action_[g].is_identity()) return false;
    return true;
  }

  // Restriction to a subgroup whose parent is this module's group.
  GroupModule restrict_to(const std::shared_ptr<const Subgroup>& sub) const {
    if (!sub->parent()->same_as(*group_)) throw BadParams("subgroup of a different group");
    std::vector<Matrix> act;
    for (auto x : sub->elements()) act.push_back(action_[x]);
    return GroupModule(sub, field_, dim_, std::move(act), false);
  }

  // Action on an invariant subspace, in the coordinates of its RREF basis.
  GroupModule submodule(const SubspaceBasis& w) const {
    check_invariant(w);
    const std::size_t k = w.dim();
    std::vector<Matrix> act;
    act.reserve(action_.size());
    for (const auto& m : action_) {
      Matrix s(field_, k, k);
      for (std::size_t j = 0; j < k; ++j) {
        auto coords = w.coordinates(m.apply(w.vectors()[j]));
        for (std::size_t i = 0; i < k; ++i) s.set(i, j, coords[i]);
      }
      act.push_back(std::move(s));
    }
    return GroupModule(group_, field_, k, std::move(act), false);
  }

  // Action on V/W, using the standard basis vectors at the non-pivot
  // coordinates of W as the complement basis.
  GroupModule quotient(const SubspaceBasis& w) const {
    check_invariant(w);
    auto freec = w.free_coordinates();
    const std::size_t k = freec.size();
    std::vector<Matrix> act;
    act.reserve(action_.size());
    for (const auto& m : action_) {
      Matrix s(field_, k, k);
      for (std::size_t j = 0; j < k; ++j) {
        auto r = w.reduce(m.column(freec[j]));
        for (std::size_t i = 0; i < k; ++i) s.set(i, j, r[freec[i]]);
      }
      act.push_back(std::move(s));
    }
    return GroupModule(group_, field_, k, std::move(act), false);
  }

  bool is_invariant(const SubspaceBasis& w) const {
    if (w.ambient_dim() != dim_) return false;
    for (auto g : generators_)
      for (const auto& v : w.vectors())
        if (!w.contains(action_[g].apply(v))) return false;
    return true;
  }

  // Direct sum, block-diagonal with this module first.
  GroupModule direct_sum(const GroupModule& other) const {
    if (!same_group(other) || field_ != other.field_) throw BadParams("direct sum of unrelated modules");
    const std::size_t d = dim_ + other.dim_;
    std::vector<Matrix> act;
    for (std::size_t g = 0; g < action_.size(); ++g) {
      Matrix m(field_, d, d);
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) m.set(i, j, action_[g](i, j));
      for (std::size_t i = 0; i < other.dim_; ++i)
        for (std::size_t j = 0; j < other.dim_; ++j) m.set(dim_ + i, dim_ + j, other.action_[g](i, j));
      act.push_back(std::move(m));
    }
    return GroupModule(group_, field_, d, std::move(act), false);
  }

  // Module with every matrix conjugated: g -> t action(g) t^-1.
  GroupModule conjugated(const Matrix& t) const {
    Matrix ti = invert(t);
    std::vector<Matrix> act;
    for (const auto& m : action_) act.push_back(t * m * ti);
    GroupModule out(group_, field_, dim_, std::move(act), false);
    out.generators_ = generators_;
    return out;
  }

 private:
  void check_invariant(const SubspaceBasis& w) const {
    if (!is_invariant(w)) throw BadParams("subspace is not invariant");
  }

  GroupPtr group_;
  PrimeField field_;
  std::size_t dim_;
  std::vector<Matrix> action_;
  std::vector<std::size_t> generators_;
};

}  // namespace skewbrace

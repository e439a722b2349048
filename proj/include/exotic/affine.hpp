#pragma once

#include <optional>
#include <utility>

#include "exotic/subspace.hpp"

namespace exotic {

/// Solution set of an affine-linear system: either empty, or a particular
/// point plus a direction subspace.
class AffineSpace {
 public:
  static AffineSpace empty(PrimeField field, std::size_t ambient) {
    return AffineSpace(std::nullopt, Subspace::zero(field, ambient));
  }

  static AffineSpace of(Vec particular, Subspace directions) {
    if (particular.size() != directions.ambient_dim())
      throw error(errc::dimension_mismatch, "particular/direction shapes");
    return AffineSpace(std::move(particular), std::move(directions));
  }

  static AffineSpace whole(PrimeField field, std::size_t ambient) {
    return of(Vec(ambient, 0), Subspace::full(field, ambient));
  }

  bool is_empty() const { return !particular_.has_value(); }
  std::size_t ambient_dim() const { return directions_.ambient_dim(); }
  const PrimeField& field() const { return directions_.field(); }

  std::size_t dim() const {
    if (is_empty()) throw error(errc::empty_space, "dimension of the empty solution set");
    return directions_.dim();
  }

  const Vec& particular() const {
    if (is_empty()) throw error(errc::empty_space, "point of the empty solution set");
    return *particular_;
  }

  const Subspace& directions() const { return directions_; }

  bool contains(const Vec& v) const {
    if (is_empty()) return false;
    const PrimeField& f = field();
    Vec diff(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) diff[i] = f.sub(v[i], (*particular_)[i]);
    return directions_.contains(diff);
  }

  /// Uniform point of the solution set (deterministic in the rng state).
  Vec random_point(SplitMix64& rng) const {
    if (is_empty()) throw error(errc::empty_space, "sampling the empty solution set");
    return add(field(), *particular_, directions_.random_point(rng));
  }

 private:
  AffineSpace(std::optional<Vec> particular, Subspace directions)
      : particular_(std::move(particular)), directions_(std::move(directions)) {}

  std::optional<Vec> particular_;
  Subspace directions_;
};

/// Accumulates equations sum_j c_j x_j = rhs over a fixed unknown vector.
class LinearSystem {
 public:
  LinearSystem(PrimeField field, std::size_t unknowns)
      : field_(field), unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }
  const PrimeField& field() const { return field_; }

  void add_equation(const Vec& coeffs, std::uint64_t rhs) {
    if (coeffs.size() != unknowns_) throw error(errc::dimension_mismatch, "equation width");
    rows_.push_back(coeffs);
    rhs_.push_back(rhs);
  }

  std::size_t equation_count() const { return rows_.size(); }

  /// Exact solution set; the "empty" marker when inconsistent.
  AffineSpace solve() const {
    Matrix aug(field_, rows_.size(), unknowns_ + 1);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = 0; j < unknowns_; ++j) aug(i, j) = rows_[i][j];
      aug(i, unknowns_) = rhs_[i];
    }
    auto pivots = aug.reduce();
    if (!pivots.empty() && pivots.back() == unknowns_)
      return AffineSpace::empty(field_, unknowns_);

    Vec particular(unknowns_, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) particular[pivots[i]] = aug(i, unknowns_);

    Matrix homo(field_, rows_.size(), unknowns_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < unknowns_; ++j) homo(i, j) = rows_[i][j];
    return AffineSpace::of(std::move(particular), Subspace::span(homo.kernel()));
  }

 private:
  PrimeField field_;
  std::size_t unknowns_;
  std::vector<Vec> rows_;
  std::vector<std::uint64_t> rhs_;
};

}  // namespace exotic

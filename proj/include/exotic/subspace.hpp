#pragma once

#include <cstddef>
#include <utility>

#include "exotic/matrix.hpp"

namespace exotic {

/// Linear subspace of F_p^n, stored as a reduced-echelon basis (one vector
/// per row). The representation is canonical: two Subspace values compare
/// equal iff they are the same subspace.
class Subspace {
 public:
  static Subspace zero(PrimeField field, std::size_t ambient) {
    return Subspace(Matrix(field, 0, ambient));
  }

  static Subspace full(PrimeField field, std::size_t ambient) {
    return Subspace(Matrix::identity(field, ambient));
  }

  /// Row span of an arbitrary generating matrix.
  static Subspace span(Matrix generators) {
    auto pivots = generators.reduce();
    Matrix basis(generators.field(), pivots.size(), generators.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t j = 0; j < generators.cols(); ++j) basis(i, j) = generators(i, j);
    return Subspace(std::move(basis));
  }

  static Subspace span_of(PrimeField field, const std::vector<Vec>& vectors, std::size_t ambient) {
    Matrix m(field, vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) m.set_row(i, vectors[i]);
    return span(std::move(m));
  }

  const Matrix& basis() const { return basis_; }
  const PrimeField& field() const { return basis_.field(); }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

  bool contains(const Vec& v) const {
    Matrix stacked = Matrix::vstack(basis_, Matrix::row_vector(field(), v));
    return stacked.rank() == dim();
  }

  bool contains(const Subspace& o) const {
    if (o.dim() > dim()) return false;
    return Matrix::vstack(basis_, o.basis_).rank() == dim();
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    a.check_compatible(b);
    return span(Matrix::vstack(a.basis_, b.basis_));
  }

  /// Rows annihilating this subspace: {f : <row_i, f> = 0 for all basis rows},
  /// i.e. a basis of the dual-kernel. ambient = dim + annihilator rows.
  Matrix annihilator() const { return basis_.kernel(); }

  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check_compatible(b);
    Matrix joint = Matrix::vstack(a.annihilator(), b.annihilator());
    return Subspace(joint.kernel());
  }

  /// {x : Mx in S} for a linear map given by `m` (columns = domain dim).
  friend Subspace preimage(const Matrix& m, const Subspace& s) {
    if (m.rows() != s.ambient_dim()) throw error(errc::dimension_mismatch, "preimage shapes");
    return Subspace((s.annihilator() * m).kernel());
  }

  /// Orthogonal complement with respect to the bilinear form given by `gram`:
  /// {y : b^T gram y = 0 for all b in the subspace}.
  Subspace perp(const Matrix& gram) const {
    if (gram.rows() != ambient_dim() || gram.cols() != ambient_dim())
      throw error(errc::dimension_mismatch, "gram shape");
    return Subspace((basis_ * gram).kernel());
  }

  /// Vectors completing this basis to a basis of the ambient space
  /// (echelon completion by unit vectors at non-pivot columns).
  Matrix complement_basis() const {
    std::vector<bool> is_pivot(ambient_dim(), false);
    for (std::size_t i = 0; i < dim(); ++i) {
      std::size_t c = 0;
      while (c < ambient_dim() && basis_(i, c) == 0) ++c;
      is_pivot[c] = true;
    }
    Matrix comp(field(), ambient_dim() - dim(), ambient_dim());
    std::size_t r = 0;
    for (std::size_t c = 0; c < ambient_dim(); ++c)
      if (!is_pivot[c]) comp(r++, c) = 1;
    return comp;
  }

  /// Uniform point of the subspace (deterministic in the rng state).
  Vec random_point(SplitMix64& rng) const {
    Vec out(ambient_dim(), 0);
    const PrimeField& f = field();
    for (std::size_t i = 0; i < dim(); ++i) {
      std::uint64_t c = f.sample(rng);
      for (std::size_t j = 0; j < ambient_dim(); ++j)
        out[j] = f.add(out[j], f.mul(c, basis_(i, j)));
    }
    return out;
  }

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}

  void check_compatible(const Subspace& o) const {
    if (ambient_dim() != o.ambient_dim() || !(field() == o.field()))
      throw error(errc::dimension_mismatch, "subspace ambient spaces differ");
  }

  Matrix basis_;
};

}  // namespace exotic

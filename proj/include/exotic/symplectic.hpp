#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "exotic/affine.hpp"
#include "exotic/matrix.hpp"
#include "exotic/permutation.hpp"
#include "exotic/subspace.hpp"

namespace exotic {

/// A 2n-dimensional space over F_p with a nondegenerate skew-symmetric form
/// <a,b> = a^T J b. The Gram matrix travels with the space; all consumers of
/// this module produce Gram-independent invariants.
class SymplecticSpace {
 public:
  SymplecticSpace(int n, Matrix gram) : n_(n), gram_(std::move(gram)), gram_inv_(gram_.field(), 0, 0) {
    if (gram_.rows() != static_cast<std::size_t>(2 * n) || gram_.cols() != gram_.rows())
      throw error(errc::dimension_mismatch, "gram matrix must be 2n x 2n");
    const PrimeField& f = field();
    for (std::size_t i = 0; i < gram_.rows(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (gram_(i, j) != f.neg(gram_(j, i)))
          throw error(errc::bad_argument, "gram matrix must be skew-symmetric");
    gram_inv_ = gram_.inverse();  // throws when degenerate
  }

  /// Standard form: e_i pairs with e_{2n+1-i}, sign +1 for i <= n.
  static SymplecticSpace standard(PrimeField f, int n) {
    Matrix j(f, 2 * n, 2 * n);
    for (int i = 1; i <= n; ++i) {
      j(i - 1, 2 * n - i) = 1;
      j(2 * n - i, i - 1) = f.neg(1);
    }
    return SymplecticSpace(n, std::move(j));
  }

  /// Form adapted to an orbit permutation w: with sigma = w * longest,
  /// e_i pairs with e_{sigma(i)}, sign +1 when i < sigma(i). Under this form
  /// the coordinate flag realizes the orbit labelled by w.
  static SymplecticSpace adapted(PrimeField f, const Permutation& w) {
    int m = w.degree();
    Permutation sigma = w * Permutation::longest(m);
    if (!sigma.is_fixed_point_free_involution())
      throw error(errc::bad_argument, "not an orbit permutation: " + w.to_string());
    Matrix j(f, m, m);
    for (int i = 1; i <= m; ++i) {
      int k = sigma(i);
      j(i - 1, k - 1) = i < k ? 1 : f.neg(1);
    }
    return SymplecticSpace(m / 2, std::move(j));
  }

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  const PrimeField& field() const { return gram_.field(); }
  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inv() const { return gram_inv_; }

  std::uint64_t pair(const Vec& a, const Vec& b) const { return form_value(gram_, a, b); }

  /// Adjoint of x for the form: <x a, b> = <a, adjoint(x) b>.
  Matrix adjoint(const Matrix& x) const { return gram_inv_ * x.transpose() * gram_; }

  /// Rank-one map v' -> <u,v'> v, as a matrix: v u^T J.
  Matrix tau(const Vec& v, const Vec& u) const {
    const PrimeField& f = field();
    Matrix t(f, dim(), dim());
    // (u^T J)_b = sum_k u_k J(k, b)
    Vec utj(dim(), 0);
    for (int b = 0; b < dim(); ++b) {
      std::uint64_t acc = 0;
      for (int k = 0; k < dim(); ++k) acc = f.add(acc, f.mul(u[k], gram_(k, b)));
      utj[b] = acc;
    }
    for (int a = 0; a < dim(); ++a)
      for (int b = 0; b < dim(); ++b) t(a, b) = f.mul(v[a], utj[b]);
    return t;
  }

  /// Symplectic transvection x -> x + c <x,a> a, as a matrix I - c a a^T J.
  Matrix transvection(const Vec& a, std::uint64_t c) const {
    const PrimeField& f = field();
    Matrix t = Matrix::identity(f, dim());
    Vec atj(dim(), 0);
    for (int b = 0; b < dim(); ++b) {
      std::uint64_t acc = 0;
      for (int k = 0; k < dim(); ++k) acc = f.add(acc, f.mul(a[k], gram_(k, b)));
      atj[b] = acc;
    }
    for (int i = 0; i < dim(); ++i)
      for (int b = 0; b < dim(); ++b)
        t(i, b) = f.sub(t(i, b), f.mul(f.mul(c, a[i]), atj[b]));
    return t;
  }

  /// Product of `count` random transvections: a random element of Sp(V).
  Matrix random_symplectic(SplitMix64& rng, int count = 6) const {
    Matrix k = Matrix::identity(field(), dim());
    for (int t = 0; t < count; ++t) {
      Vec a = random_vec(field(), dim(), rng);
      if (is_zero_vec(a)) continue;
      k = transvection(a, field().sample(rng)) * k;
    }
    return k;
  }

  bool operator==(const SymplecticSpace& o) const { return n_ == o.n_ && gram_ == o.gram_; }

 private:
  int n_;
  Matrix gram_;
  Matrix gram_inv_;
};

/// Complete flag in a symplectic space: V_i is the span of the first i
/// columns of an invertible matrix.
class Flag {
 public:
  Flag(SymplecticSpace space, Matrix cols) : space_(std::move(space)), cols_(std::move(cols)) {
    if (cols_.rows() != static_cast<std::size_t>(space_.dim()) || !cols_.is_square())
      throw error(errc::dimension_mismatch, "flag matrix must be 2n x 2n");
    if (cols_.rank() != cols_.rows()) throw error(errc::singular_matrix, "flag matrix must be invertible");
  }

  static Flag coordinate(SymplecticSpace space) {
    Matrix id = Matrix::identity(space.field(), space.dim());
    return Flag(std::move(space), std::move(id));
  }

  const SymplecticSpace& space() const { return space_; }
  const Matrix& cols() const { return cols_; }

  Vec column(int i) const {  // 1-based
    Vec v(space_.dim());
    for (int r = 0; r < space_.dim(); ++r) v[r] = cols_(r, i - 1);
    return v;
  }

  Subspace subspace(int i) const {
    std::vector<Vec> rows;
    for (int c = 1; c <= i; ++c) rows.push_back(column(c));
    return Subspace::span_of(space_.field(), rows, space_.dim());
  }

  Flag transformed(const Matrix& k) const { return Flag(space_, k * cols_); }

 private:
  SymplecticSpace space_;
  Matrix cols_;
};

/// The flag whose i-th space is the perp of V_{2n-i}.
inline Flag perp_flag(const Flag& flag) {
  const SymplecticSpace& sp = flag.space();
  int m = sp.dim();
  Matrix cols(sp.field(), m, m);
  Subspace prev = Subspace::zero(sp.field(), m);
  for (int i = 1; i <= m; ++i) {
    Subspace cur = flag.subspace(m - i).perp(sp.gram());
    // extend prev by one vector of cur
    bool found = false;
    for (std::size_t r = 0; r < cur.basis().rows() && !found; ++r) {
      Vec cand = cur.basis().row(r);
      if (!prev.contains(cand)) {
        for (int a = 0; a < m; ++a) cols(a, i - 1) = cand[a];
        found = true;
      }
    }
    if (!found) throw error(errc::bad_argument, "perp flag construction failed");
    prev = cur;
  }
  return Flag(sp, std::move(cols));
}

struct SymplecticPoint {
  Vec v;
  Flag flag;
};

/// Identify the orbit of a (vector, flag) pair: recover w from the grid of
/// intersection dimensions with the perp flag, recover alpha from the
/// membership grid, then verify the full biconditional.
inline OrbitParam orbit_of(const SymplecticPoint& pt) {
  const SymplecticSpace& sp = pt.flag.space();
  int m = sp.dim();
  std::vector<Subspace> vs, ps;
  for (int i = 0; i <= m; ++i) vs.push_back(pt.flag.subspace(i));
  for (int j = 0; j <= m; ++j) ps.push_back(vs[m - j].perp(sp.gram()));

  std::vector<std::vector<int>> d(m + 1, std::vector<int>(m + 1, 0));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) d[i][j] = static_cast<int>(intersect(vs[i], ps[j]).dim());

  std::vector<int> one_line(m, 0);
  for (int j = 1; j <= m; ++j) {
    int found = 0;
    for (int i = 1; i <= m; ++i) {
      if (d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1] == 1) {
        one_line[j - 1] = i;
        ++found;
      }
    }
    if (found != 1)
      throw error(errc::inconsistent_membership, "rank grid does not define a permutation");
  }
  Permutation w(one_line);

  std::vector<std::vector<bool>> member(m + 1, std::vector<bool>(m + 1, false));
  std::uint32_t alpha = (m >= 32) ? ~0u : ((1u << m) - 1);
  for (int i = 0; i <= m; ++i) {
    std::uint32_t head = (i == 0) ? 0 : ((1u << i) - 1);
    std::uint32_t image = 0;
    for (int j = 0; j <= m; ++j) {
      if (j > 0) image |= 1u << (w(j) - 1);
      member[i][j] = (vs[i] + ps[j]).contains(pt.v);
      if (member[i][j]) alpha &= head | image;
    }
  }
  for (int i = 0; i <= m; ++i) {
    std::uint32_t head = (i == 0) ? 0 : ((1u << i) - 1);
    std::uint32_t image = 0;
    for (int j = 0; j <= m; ++j) {
      if (j > 0) image |= 1u << (w(j) - 1);
      if (member[i][j] != ((alpha & ~(head | image)) == 0))
        throw error(errc::inconsistent_membership, "membership grid is not of orbit form");
    }
  }

  OrbitParam p{std::move(w), alpha};
  if (!is_valid_orbit_param(p))
    throw error(errc::inconsistent_membership, "recovered parameter fails orbit invariants");
  return p;
}

/// A point realizing the given orbit parameter, in the space adapted to its
/// permutation. The deterministic candidate (coordinate flag, v = sum of
/// unit vectors over alpha) is verified via orbit_of; randomized fallbacks
/// keep correctness independent of the construction.
inline SymplecticPoint representative(const OrbitParam& p, PrimeField field, std::uint64_t seed = 1) {
  if (!is_valid_orbit_param(p)) throw error(errc::bad_argument, "invalid orbit parameter");
  SymplecticSpace sp = SymplecticSpace::adapted(field, p.w);
  Flag flag = Flag::coordinate(sp);
  int m = sp.dim();

  auto try_point = [&](const Vec& v) -> bool {
    SymplecticPoint pt{v, flag};
    try {
      return orbit_of(pt) == p;
    } catch (const error&) {
      return false;
    }
  };

  Vec unit(m, 0);
  for (int a = 1; a <= m; ++a)
    if (p.has(a)) unit[a - 1] = 1;
  if (try_point(unit)) return {unit, flag};

  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Vec v(m, 0);
    for (int a = 1; a <= m; ++a)
      if (p.has(a)) v[a - 1] = field.sample_nonzero(rng);
    if (try_point(v)) return {v, flag};
  }

  // exhaustive support sweep, randomized coefficients
  std::uint64_t budget = 1;
  for (int i = 0; i < m; ++i) budget *= 4;
  std::uint64_t used = 0;
  for (std::uint32_t support = 0; support < (1u << m) && used < budget; ++support) {
    for (int attempt = 0; attempt < m && used < budget; ++attempt, ++used) {
      Vec v(m, 0);
      for (int a = 1; a <= m; ++a)
        if ((support >> (a - 1)) & 1u) v[a - 1] = field.sample_nonzero(rng);
      if (try_point(v)) return {v, flag};
    }
  }
  throw error(errc::representative_search_failed,
              "no representative found for " + print_param(p));
}

/// Dimension of the Lie-algebra stabilizer of (v, flag) inside sp(V):
/// solutions y of y^T J + J y = 0, y v = 0, y V_i <= V_i.
inline int stabilizer_dim(const SymplecticPoint& pt) {
  const SymplecticSpace& sp = pt.flag.space();
  const PrimeField& f = sp.field();
  int m = sp.dim();
  LinearSystem sys(f, static_cast<std::size_t>(m) * m);  // unknown y, row-major
  auto idx = [m](int a, int b) { return static_cast<std::size_t>(a) * m + b; };

  // y^T J + J y = 0
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Vec row(static_cast<std::size_t>(m) * m, 0);
      for (int k = 0; k < m; ++k) {
        row[idx(k, a)] = f.add(row[idx(k, a)], sp.gram()(k, b));
        row[idx(k, b)] = f.add(row[idx(k, b)], sp.gram()(a, k));
      }
      sys.add_equation(row, 0);
    }
  // y v = 0
  for (int a = 0; a < m; ++a) {
    Vec row(static_cast<std::size_t>(m) * m, 0);
    for (int b = 0; b < m; ++b) row[idx(a, b)] = pt.v[b];
    sys.add_equation(row, 0);
  }
  // y f_c in V_c for each flag column
  for (int c = 1; c <= m; ++c) {
    Matrix ann = pt.flag.subspace(c).annihilator();
    Vec fc = pt.flag.column(c);
    for (std::size_t r = 0; r < ann.rows(); ++r) {
      Vec row(static_cast<std::size_t>(m) * m, 0);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          row[idx(a, b)] = f.add(row[idx(a, b)], f.mul(ann(r, a), fc[b]));
      sys.add_equation(row, 0);
    }
  }
  AffineSpace sol = sys.solve();
  return static_cast<int>(sol.dim());
}

/// dim K - stabilizer dimension, with dim Sp(2n) = n(2n+1).
inline int orbit_dim(const SymplecticPoint& pt) {
  int n = pt.flag.space().n();
  return n * (2 * n + 1) - stabilizer_dim(pt);
}

}  // namespace exotic

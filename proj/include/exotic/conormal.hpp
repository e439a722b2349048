#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exotic/affine.hpp"
#include "exotic/bipartition.hpp"
#include "exotic/jordan.hpp"
#include "exotic/symplectic.hpp"
#include "exotic/tableau.hpp"

namespace exotic {

/// A point of the conormal variety over a fixed (v, flag): a covector
/// (u, x) with x strictly flag-triangular and
/// adjoint(x) - x = tau(v,u) + tau(u,v).
struct ConormalSample {
  Vec v;
  Vec u;
  Flag flag;
  Matrix x;
};

inline bool is_strictly_triangular(const Matrix& x, const Flag& flag) {
  Matrix a = flag.cols().inverse() * x * flag.cols();
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c <= r; ++c)
      if (a(r, c) != 0) return false;
  return true;
}

/// The conormal space over the orbit through (v, flag), as the solution set
/// of a linear system in the unknowns (u, entries of x). Its dimension
/// equals dim(V x G/B) - orbit dimension.
inline AffineSpace conormal_fiber(const SymplecticPoint& pt) {
  const SymplecticSpace& sp = pt.flag.space();
  const PrimeField& f = sp.field();
  int m = sp.dim();
  std::size_t unknowns = static_cast<std::size_t>(m) + static_cast<std::size_t>(m) * m;
  auto uidx = [](int t) { return static_cast<std::size_t>(t); };
  auto xidx = [m](int a, int b) { return static_cast<std::size_t>(m) + static_cast<std::size_t>(a) * m + b; };
  LinearSystem sys(f, unknowns);

  // strict flag-triangularity: x f_c in V_{c-1}
  for (int c = 1; c <= m; ++c) {
    Matrix ann = pt.flag.subspace(c - 1).annihilator();
    Vec fc = pt.flag.column(c);
    for (std::size_t r = 0; r < ann.rows(); ++r) {
      Vec row(unknowns, 0);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          row[xidx(a, b)] = f.add(row[xidx(a, b)], f.mul(ann(r, a), fc[b]));
      sys.add_equation(row, 0);
    }
  }

  // moment-map equation: adjoint(x) - x - tau(v,u) - tau(u,v) = 0
  const Matrix& j = sp.gram();
  const Matrix& jinv = sp.gram_inv();
  Vec vtj(m, 0);  // v^T J
  for (int b = 0; b < m; ++b) {
    std::uint64_t acc = 0;
    for (int k = 0; k < m; ++k) acc = f.add(acc, f.mul(pt.v[k], j(k, b)));
    vtj[b] = acc;
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Vec row(unknowns, 0);
      // adjoint(x)_{ab} = sum_{k,l} jinv(a,k) x(l,k) j(l,b)
      for (int k = 0; k < m; ++k) {
        if (jinv(a, k) == 0) continue;
        for (int l = 0; l < m; ++l)
          row[xidx(l, k)] = f.add(row[xidx(l, k)], f.mul(jinv(a, k), j(l, b)));
      }
      row[xidx(a, b)] = f.sub(row[xidx(a, b)], 1);
      // tau(v,u)_{ab} = v[a] * sum_t u_t j(t,b)
      for (int t = 0; t < m; ++t)
        row[uidx(t)] = f.sub(row[uidx(t)], f.mul(pt.v[a], j(t, b)));
      // tau(u,v)_{ab} = u[a] * (v^T J)_b
      row[uidx(a)] = f.sub(row[uidx(a)], vtj[b]);
      sys.add_equation(row, 0);
    }
  return sys.solve();
}

inline ConormalSample unpack_sample(const SymplecticPoint& pt, const Vec& solution) {
  int m = pt.flag.space().dim();
  Vec u(solution.begin(), solution.begin() + m);
  Matrix x(pt.flag.space().field(), m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) x(a, b) = solution[m + a * m + b];
  return {pt.v, std::move(u), pt.flag, std::move(x)};
}

/// Orbit label of a pair (v, x) in the enhanced nilpotent cone: the unique
/// (mu;nu) with mu+nu the Jordan type of x, mu_1 = dim of the x-cyclic
/// subspace through v, and the induced type on the quotient matching.
inline Bipartition enhanced_orbit(const Matrix& x, const Vec& v) {
  const PrimeField& f = x.field();
  int m = static_cast<int>(x.rows());
  Partition lambda = jordan_type(x);  // throws when not nilpotent

  auto pw = x.powers(m);
  std::vector<Vec> cyclic;
  for (int k = 0; k < m; ++k) cyclic.push_back(pw[k].apply(v));
  Subspace w = Subspace::span_of(f, cyclic, m);
  int mu1 = static_cast<int>(w.dim());

  // induced operator on V/W: conjugate x into a basis extending W, read the
  // lower-right block
  Partition rho;
  int q = m - mu1;
  if (q > 0) {
    Matrix basis = Matrix::vstack(w.basis(), w.complement_basis());
    Matrix p = basis.transpose();  // columns = basis vectors
    Matrix a = p.inverse() * x * p;
    Matrix block(f, q, q);
    for (int r = 0; r < q; ++r)
      for (int c = 0; c < q; ++c) block(r, c) = a(mu1 + r, mu1 + c);
    rho = jordan_type(block);
  }

  std::vector<int> mu{mu1}, nu;
  auto fail = [&] {
    throw error(errc::invalid_recursion,
                "enhanced label recursion failed on Jordan data " + lambda.to_string());
  };
  for (int k = 1; k <= m + 1; ++k) {
    int nu_k = lambda.part(k) - mu[k - 1];
    if (nu_k < 0) fail();
    nu.push_back(nu_k);
    int mu_next = rho.part(k) - nu_k;
    if (mu_next < 0) fail();
    mu.push_back(mu_next);
  }
  for (std::size_t i = 0; i + 1 < mu.size(); ++i)
    if (mu[i] < mu[i + 1]) fail();
  for (std::size_t i = 0; i + 1 < nu.size(); ++i)
    if (nu[i] < nu[i + 1]) fail();
  Bipartition out{Partition(std::move(mu)), Partition(std::move(nu))};
  if (out.total() != m) fail();
  return out;
}

/// Orbit label of a pair (v, y) in the exotic nilpotent cone: y must be
/// self-adjoint and nilpotent; the enhanced label is then a duplex pair
/// (mu~ u mu~; nu~ u nu~) and the exotic label is (mu~; nu~).
inline Bipartition exotic_orbit(const SymplecticSpace& sp, const Vec& v, const Matrix& y) {
  if (!(sp.adjoint(y) == y)) throw error(errc::not_self_adjoint, "operator is not self-adjoint");
  Bipartition enhanced = enhanced_orbit(y, v);
  return {enhanced.mu.duplex_half(), enhanced.nu.duplex_half()};
}

/// Lie-algebra stabilizer dimension of an exotic pair (v, y): solutions z
/// with z^T J + J z = 0, z v = 0, z y = y z. The orbit of (v, y) under the
/// symplectic group has dimension n(2n+1) minus this.
inline int exotic_stabilizer_dim(const SymplecticSpace& sp, const Vec& v, const Matrix& y) {
  const PrimeField& f = sp.field();
  int m = sp.dim();
  LinearSystem sys(f, static_cast<std::size_t>(m) * m);
  auto idx = [m](int a, int b) { return static_cast<std::size_t>(a) * m + b; };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Vec skew(static_cast<std::size_t>(m) * m, 0);
      Vec commute(static_cast<std::size_t>(m) * m, 0);
      for (int k = 0; k < m; ++k) {
        skew[idx(k, a)] = f.add(skew[idx(k, a)], sp.gram()(k, b));
        skew[idx(k, b)] = f.add(skew[idx(k, b)], sp.gram()(a, k));
        commute[idx(a, k)] = f.add(commute[idx(a, k)], y(k, b));
        commute[idx(k, b)] = f.sub(commute[idx(k, b)], y(a, k));
      }
      sys.add_equation(skew, 0);
      sys.add_equation(commute, 0);
    }
  for (int a = 0; a < m; ++a) {
    Vec row(static_cast<std::size_t>(m) * m, 0);
    for (int b = 0; b < m; ++b) row[idx(a, b)] = v[b];
    sys.add_equation(row, 0);
  }
  return static_cast<int>(sys.solve().dim());
}

/// Growth chain of Jordan types of x restricted to the flag steps, as a
/// standard tableau of shape jordan_type(x).
inline StandardTableau tableau_of(const Matrix& x, const Flag& flag) {
  Matrix a = flag.cols().inverse() * x * flag.cols();
  int m = static_cast<int>(a.rows());
  for (int r = 0; r < m; ++r)
    for (int c = 0; c <= r; ++c)
      if (a(r, c) != 0)
        throw error(errc::bad_argument, "operator does not shift the flag");
  std::vector<Partition> chain{Partition{}};
  for (int i = 1; i <= m; ++i) {
    Matrix lead(a.field(), i, i);
    for (int r = 0; r < i; ++r)
      for (int c = 0; c < i; ++c) lead(r, c) = a(r, c);
    chain.push_back(jordan_type(lead));
  }
  return StandardTableau::from_chain(std::move(chain));
}

// ---- property verification over conormal samples ----

struct CheckResult {
  std::string name;
  bool passed;
};

struct ZReport {
  std::vector<CheckResult> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

struct VerifyOptions {
  bool tamper = false;  // debug hook: corrupt one entry of x before checking
};

/// Check the structural properties of a conormal sample:
///   moment:        x strictly flag-triangular, adjoint(x)-x = tau(v,u)+tau(u,v)
///   orthogonality: <x^i v, x^j v> = <x^i u, x^j u> = <x^i v, x^j u> = 0
///   self-adjoint:  y = x + tau(v,u) satisfies y = adjoint(y)
///   nilpotent:     y^{2n} = 0
///   balanced:      the enhanced label of (v,x) is balanced
///   square:        exotic label of (v,y) = exotic image of the enhanced label
///   balance-system: the coupled part equations between the two labels
inline ZReport verify_sample(const ConormalSample& sample, const VerifyOptions& opts = {}) {
  const SymplecticSpace& sp = sample.flag.space();
  const PrimeField& f = sp.field();
  int m = sp.dim();
  Matrix x = sample.x;
  if (opts.tamper) x(0, 0) = f.add(x(0, 0), 1);

  ZReport report;
  auto record = [&](std::string name, bool ok) { report.checks.push_back({std::move(name), ok}); };

  Matrix moment_rhs = sp.tau(sample.v, sample.u) + sp.tau(sample.u, sample.v);
  record("moment", is_strictly_triangular(x, sample.flag) && sp.adjoint(x) - x == moment_rhs);

  auto pw = x.powers(m);
  bool ortho = true;
  for (int i = 0; i <= m && ortho; ++i) {
    Vec xiv = pw[i].apply(sample.v);
    Vec xiu = pw[i].apply(sample.u);
    for (int j = 0; j <= m && ortho; ++j) {
      Vec xjv = pw[j].apply(sample.v);
      Vec xju = pw[j].apply(sample.u);
      ortho = sp.pair(xiv, xjv) == 0 && sp.pair(xiu, xju) == 0 && sp.pair(xiv, xju) == 0;
    }
  }
  record("orthogonality", ortho);

  Matrix y = x + sp.tau(sample.v, sample.u);
  record("self-adjoint", sp.adjoint(y) == y);
  record("nilpotent", y.powers(m)[m].is_zero());

  bool balanced = false, square = false, system = false;
  try {
    Bipartition enhanced = enhanced_orbit(x, sample.v);
    balanced = is_balanced(enhanced);
    if (balanced) {
      Bipartition exotic_lbl = exotic_orbit(sp, sample.v, y);
      square = exotic_label_of(enhanced) == exotic_lbl;
      // coupled system: mu~_1 = mu_1, mu~_k + nu~_k = mu_{2k} + nu_{2k-1},
      // mu~_{k+1} + nu~_k = mu_{2k+1} + nu_{2k}
      system = exotic_lbl.mu.part(1) == enhanced.mu.part(1);
      for (int k = 1; k <= m + 1 && system; ++k) {
        system = exotic_lbl.mu.part(k) + exotic_lbl.nu.part(k) ==
                     enhanced.mu.part(2 * k) + enhanced.nu.part(2 * k - 1) &&
                 exotic_lbl.mu.part(k + 1) + exotic_lbl.nu.part(k) ==
                     enhanced.mu.part(2 * k + 1) + enhanced.nu.part(2 * k);
      }
    }
  } catch (const error&) {
    // leave the remaining checks failed
  }
  record("balanced", balanced);
  record("commuting-square", square);
  record("balance-system", system);
  return report;
}

/// Dimension of the affine fibre of covectors u over a fixed exotic pair
/// (v, y) landing in the closure of the enhanced stratum of `target`:
/// solutions u in W-perp of (y - tau(v,u))^{mu_1 + nu_i} (y^{-(mu_{i+1}+nu_i)} W) = 0,
/// expanded through (y-tau)^k = y^k - sum_j y^{k-j} tau y^{j-1}.
/// Returns nullopt when the fibre is empty.
inline std::optional<int> exotic_fiber_dimension(const SymplecticSpace& sp, const Vec& v,
                                                 const Matrix& y, const Bipartition& target) {
  const PrimeField& f = sp.field();
  int m = sp.dim();
  if (target.total() != m) throw error(errc::bad_argument, "target size mismatch");
  if (!(exotic_label_of(target) == exotic_orbit(sp, v, y)))
    throw error(errc::bad_argument, "target does not lie over the exotic label of (v, y)");

  auto pw = y.powers(m + 1);
  std::vector<Vec> yv;  // y^d v
  for (int d = 0; d <= m + 1; ++d) yv.push_back(pw[d].apply(v));
  Subspace w = Subspace::span_of(f, std::vector<Vec>(yv.begin(), yv.begin() + m), m);

  LinearSystem sys(f, m);
  // u in W-perp
  const Matrix& j = sp.gram();
  for (std::size_t r = 0; r < w.basis().rows(); ++r) {
    Vec row(m, 0);
    for (int b = 0; b < m; ++b) {
      std::uint64_t acc = 0;
      for (int k = 0; k < m; ++k) acc = f.add(acc, f.mul(w.basis()(r, k), j(k, b)));
      row[b] = acc;
    }
    sys.add_equation(row, 0);
  }

  int mu1 = target.mu.part(1);
  for (int i = 1; i <= m + 1; ++i) {
    int k = mu1 + target.nu.part(i);
    int drop = target.mu.part(i + 1) + target.nu.part(i);
    Subspace pre = preimage(pw[drop], w);
    for (std::size_t br = 0; br < pre.basis().rows(); ++br) {
      Vec b = pre.basis().row(br);
      // rows: sum_t [ sum_{j=1}^{k} (y^{k-j} v)[a] (J y^{j-1} b)[t] ] u_t = (y^k b)[a]
      Vec ykb = pw[k].apply(b);
      std::vector<Vec> jy(k);  // J y^{j-1} b
      for (int jj = 1; jj <= k; ++jj) jy[jj - 1] = j.apply(pw[jj - 1].apply(b));
      for (int a = 0; a < m; ++a) {
        Vec row(m, 0);
        for (int jj = 1; jj <= k; ++jj) {
          std::uint64_t va = yv[k - jj][a];
          if (va == 0) continue;
          for (int t = 0; t < m; ++t) row[t] = f.add(row[t], f.mul(va, jy[jj - 1][t]));
        }
        sys.add_equation(row, ykb[a]);
      }
    }
  }
  AffineSpace sol = sys.solve();
  if (sol.is_empty()) return std::nullopt;
  return static_cast<int>(sol.dim());
}

}  // namespace exotic

/**
 * @file qip.hpp
 * @brief Separable convex quadratics over the scaled simplex {x >= 0, sum x = t}.
 *
 * f(x) = sum a_i x_i^2 + b_i x_i with every a_i > 0.  The moves e_j - e_i
 * form the Graver basis of the simplex lattice, so a feasible point is a
 * lattice minimizer iff no single move improves it.
 */
#pragma once

#include "slopelab/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace slopelab {

class NotPositiveDefinite : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<std::vector<Rational>>;
using IntVector = std::vector<std::int64_t>;

struct RealMinimum {
  RationalVector point;
  Rational value;
};

/// Solves A x = rhs by exact Gaussian elimination; A must be nonsingular.
inline RationalVector solve_linear(RationalMatrix A, RationalVector rhs) {
  const std::size_t m = A.size();
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (piv < m && A[piv][c] == 0) ++piv;
    if (piv == m) throw std::domain_error("singular matrix");
    std::swap(A[piv], A[c]);
    std::swap(rhs[piv], rhs[c]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Rational f = A[r][c] / A[c][c];
      for (std::size_t k = c; k < m; ++k) A[r][k] -= f * A[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  RationalVector x(m);
  for (std::size_t i = 0; i < m; ++i) x[i] = rhs[i] / A[i][i];
  return x;
}

/// Symmetric with all leading principal minors positive.
inline bool is_positive_definite(const RationalMatrix& A) {
  const std::size_t m = A.size();
  for (const auto& row : A)
    if (row.size() != m) throw std::invalid_argument("matrix is not square");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (A[i][j] != A[j][i]) return false;
  RationalMatrix U = A;
  for (std::size_t c = 0; c < m; ++c) {
    // Without pivoting the c-th pivot is the ratio of consecutive leading minors.
    if (U[c][c] <= 0) return false;
    for (std::size_t r = c + 1; r < m; ++r) {
      Rational f = U[r][c] / U[c][c];
      for (std::size_t k = c; k < m; ++k) U[r][k] -= f * U[c][k];
    }
  }
  return true;
}

/// Minimum of (1/2) x^T A x + b^T x: attained at x = -A^{-1} b with value -(1/2) b^T A^{-1} b.
inline RealMinimum real_min_unconstrained(const RationalMatrix& A, const RationalVector& b) {
  if (A.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  if (!is_positive_definite(A)) throw NotPositiveDefinite("matrix is not symmetric positive definite");
  RationalVector y = solve_linear(A, b);  // A^{-1} b
  RealMinimum r;
  r.value = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    r.point.push_back(-y[i]);
    r.value -= b[i] * y[i] / 2;
  }
  return r;
}

struct SeparableQuadratic {
  IntVector a;  // all > 0
  IntVector b;

  SeparableQuadratic() = default;
  SeparableQuadratic(IntVector a_, IntVector b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.size() != b.size() || a.empty()) throw std::invalid_argument("a and b must have the same positive length");
    for (auto x : a)
      if (x <= 0) throw std::invalid_argument("quadratic coefficients must be positive");
  }
  std::size_t dim() const { return a.size(); }

  Integer operator()(const IntVector& x) const {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      Integer xi(static_cast<long>(x[i]));
      s += Integer(static_cast<long>(a[i])) * xi * xi + Integer(static_cast<long>(b[i])) * xi;
    }
    return s;
  }
  Rational eval(const RationalVector& x) const {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      s += Rational(static_cast<long>(a[i])) * x[i] * x[i] + Rational(static_cast<long>(b[i])) * x[i];
    return s;
  }
  /// Change of f under the move x -> x - e_i + e_j.
  std::int64_t move_delta(const IntVector& x, std::size_t i, std::size_t j) const {
    return a[i] * (1 - 2 * x[i]) - b[i] + a[j] * (2 * x[j] + 1) + b[j];
  }
};

/// Lagrange point on the hyperplane sum x = t (nonnegativity ignored).
inline RealMinimum real_min_simplex(const SeparableQuadratic& f, const Rational& t) {
  Rational inv_sum = 0, ratio_sum = 0;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    inv_sum += make_rational(1, f.a[i]);
    ratio_sum += make_rational(f.b[i], 2 * f.a[i]);
  }
  Rational lambda = 2 * (t + ratio_sum) / inv_sum;  // 2 a_i x_i + b_i = lambda
  RealMinimum r;
  for (std::size_t i = 0; i < f.dim(); ++i)
    r.point.push_back((lambda - Rational(static_cast<long>(f.b[i]))) / Rational(2 * f.a[i]));
  r.value = f.eval(r.point);
  return r;
}

/// Coefficients (c2, c1, c0) of t -> min over the hyperplane.
struct QuadraticInT {
  Rational c2, c1, c0;
};
inline QuadraticInT real_min_simplex_coefficients(const SeparableQuadratic& f) {
  Rational inv_sum = 0, ba = 0, bba = 0;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    inv_sum += make_rational(1, f.a[i]);
    ba += make_rational(f.b[i], f.a[i]);
    bba += make_rational(f.b[i] * f.b[i], f.a[i]);
  }
  return {1 / inv_sum, ba / inv_sum, ba * ba / (4 * inv_sum) - bba / 4};
}

class InfeasiblePoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void check_feasible(const SeparableQuadratic& f, const IntVector& x, std::int64_t t) {
  if (x.size() != f.dim()) throw InfeasiblePoint("dimension mismatch");
  std::int64_t s = 0;
  for (auto v : x) {
    if (v < 0) throw InfeasiblePoint("negative coordinate");
    s += v;
  }
  if (s != t) throw InfeasiblePoint("coordinates do not sum to t");
}

/// The pairwise certificate 2(a_i x_i - a_j x_j) <= (a_i + a_j) - (b_i - b_j) for all i != j.
inline bool graver_certificate(const SeparableQuadratic& f, const IntVector& x, std::int64_t t) {
  check_feasible(f, x, t);
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j)
      if (i != j && 2 * (f.a[i] * x[i] - f.a[j] * x[j]) > (f.a[i] + f.a[j]) - (f.b[i] - f.b[j])) return false;
  return true;
}

/// Same test restricted to moves that stay feasible (x_i >= 1); exact on degenerate points too.
inline bool feasible_move_certificate(const SeparableQuadratic& f, const IntVector& x, std::int64_t t) {
  check_feasible(f, x, t);
  for (std::size_t i = 0; i < f.dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < f.dim(); ++j)
      if (i != j && f.move_delta(x, i, j) < 0) return false;
  }
  return true;
}

/// varpi = sum_i prod_{j != i} a_j, and the shift vector A_i = prod_{j != i} a_j.
inline std::int64_t qip_period(const SeparableQuadratic& f, IntVector* shift = nullptr) {
  IntVector A(f.dim(), 1);
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j)
      if (j != i) A[i] *= f.a[j];
  if (shift) *shift = A;
  return std::accumulate(A.begin(), A.end(), std::int64_t(0));
}

struct LatticeOptimum {
  IntVector minimizer;
  Integer value;
  bool certificate_checked = false;
  std::int64_t period = 0;
  int descent_steps = 0;
};

/// Exact lattice minimizer, lexicographically smallest among ties.
inline LatticeOptimum lattice_min(const SeparableQuadratic& f, std::int64_t t) {
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  const std::size_t m = f.dim();
  LatticeOptimum out;
  out.period = qip_period(f);
  IntVector x(m, 0);
  if (t > 0) {
    RealMinimum r = real_min_simplex(f, Rational(static_cast<long>(t)));
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m; ++i) {
      std::int64_t v = to_int64(floor_of(r.point[i]));
      x[i] = std::clamp<std::int64_t>(v, 0, t);
      s += x[i];
    }
    // Repair the sum: add to the cheapest coordinate, or remove from the most profitable.
    while (s < t) {
      std::size_t best = 0;
      std::int64_t bd = 0;
      for (std::size_t i = 0; i < m; ++i) {
        std::int64_t d = f.a[i] * (2 * x[i] + 1) + f.b[i];
        if (i == 0 || d < bd) { bd = d; best = i; }
      }
      ++x[best];
      ++s;
    }
    while (s > t) {
      std::size_t best = m;
      std::int64_t bd = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (x[i] == 0) continue;
        std::int64_t d = f.a[i] * (1 - 2 * x[i]) - f.b[i];
        if (best == m || d < bd) { bd = d; best = i; }
      }
      --x[best];
      --s;
    }
  }
  // Steepest descent along e_j - e_i.
  for (;;) {
    std::int64_t bd = 0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        std::int64_t d = f.move_delta(x, i, j);
        if (d < bd) { bd = d; bi = i; bj = j; }
      }
    }
    if (bd >= 0) break;
    --x[bi];
    ++x[bj];
    ++out.descent_steps;
  }
  // Lexicographic tie-break: push weight to later coordinates along zero-cost moves.
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < m && !moved; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = i + 1; j < m; ++j)
        if (f.move_delta(x, i, j) == 0) {
          --x[i];
          ++x[j];
          moved = true;
          break;
        }
    }
  }
  out.certificate_checked = feasible_move_certificate(f, x, t);
  if (!out.certificate_checked) throw std::logic_error("lattice descent ended at a non-optimal point");
  out.value = f(x);
  out.minimizer = std::move(x);
  return out;
}

/// Enumerates every composition of t into dim parts in lexicographic order.
inline void for_each_composition(std::size_t dim, std::int64_t t, const std::function<void(const IntVector&)>& fn) {
  IntVector x(dim, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i + 1 == dim) {
      x[i] = left;
      fn(x);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      x[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, t);
}

struct BruteForceMinimum {
  IntVector minimizer;  // lexicographically smallest
  Integer value;
  std::vector<IntVector> all_minimizers;
};

inline BruteForceMinimum brute_force_min(const SeparableQuadratic& f, std::int64_t t) {
  BruteForceMinimum best;
  bool have = false;
  for_each_composition(f.dim(), t, [&](const IntVector& x) {
    Integer v = f(x);
    if (!have || v < best.value) {
      have = true;
      best.value = v;
      best.minimizer = x;
      best.all_minimizers = {x};
    } else if (v == best.value) {
      best.all_minimizers.push_back(x);
    }
  });
  return best;
}

}  // namespace slopelab

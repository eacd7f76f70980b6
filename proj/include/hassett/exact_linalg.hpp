#ifndef HASSETT_EXACT_LINALG_HPP
#define HASSETT_EXACT_LINALG_HPP

// Exact linear algebra over the integers and rationals.
//
// Everything here is a free function template on an Eigen expression, so the
// same routines run on hassett::Integer (the production scalar) and on
// built-in integers in tests. No routine ever touches floating point.

#include "hassett/errors.hpp"
#include "hassett/integer.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hassett {

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& g) {
  if (g.rows() != g.cols()) return false;
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = i + 1; j < g.cols(); ++j)
      if (!(g(i, j) == g(j, i))) return false;
  return true;
}

namespace detail {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw ShapeError(std::string(what) + ": expected a square matrix, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

template <typename Derived>
void require_symmetric(const Eigen::MatrixBase<Derived>& g, const char* what) {
  require_square(g, what);
  if (!is_symmetric(g)) throw ShapeError(std::string(what) + ": matrix is not symmetric");
}

template <typename Scalar>
Scalar abs_value(const Scalar& a) {
  return a < Scalar(0) ? Scalar(-a) : a;
}

}  // namespace detail

/// Determinant by Bareiss fraction-free elimination. Every intermediate
/// division is exact, so entries stay integral throughout.
template <typename Derived>
typename Derived::Scalar det_exact(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  detail::require_square(a, "det_exact");
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);

  Matrix<Scalar> m = a;
  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == Scalar(0)) ++p;
      if (p == n) return Scalar(0);
      m.row(k).swap(m.row(p));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  return negate ? Scalar(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

/// u * a * v == d with u, v unimodular and d diagonal, d(0,0) | d(1,1) | ...
template <typename Scalar>
struct SmithNormalForm {
  Matrix<Scalar> d;
  Matrix<Scalar> u;
  Matrix<Scalar> v;
  Eigen::Index rank = 0;

  std::vector<Scalar> invariant_factors() const {
    std::vector<Scalar> out;
    for (Eigen::Index i = 0; i < rank; ++i) out.push_back(d(i, i));
    return out;
  }
};

template <typename Derived>
SmithNormalForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using detail::abs_value;
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();

  SmithNormalForm<Scalar> snf;
  snf.d = a;
  snf.u = Matrix<Scalar>::Identity(m, m);
  snf.v = Matrix<Scalar>::Identity(n, n);
  auto& d = snf.d;
  auto& u = snf.u;
  auto& v = snf.v;
  const Scalar zero(0);

  Eigen::Index t = 0;
  for (; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Eigen::Index pi = -1, pj = -1;
      Scalar best;
      for (Eigen::Index i = t; i < m; ++i) {
        for (Eigen::Index j = t; j < n; ++j) {
          if (d(i, j) == zero) continue;
          Scalar mag = abs_value(d(i, j));
          if (pi < 0 || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) {
        snf.rank = t;
        return snf;
      }
      if (pi != t) {
        d.row(t).swap(d.row(pi));
        u.row(t).swap(u.row(pi));
      }
      if (pj != t) {
        d.col(t).swap(d.col(pj));
        v.col(t).swap(v.col(pj));
      }

      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        const Scalar q = d(i, t) / d(t, t);
        if (q != zero) {
          d.row(i) -= q * d.row(t);
          u.row(i) -= q * u.row(t);
        }
        if (d(i, t) != zero) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        const Scalar q = d(t, j) / d(t, t);
        if (q != zero) {
          d.col(j) -= q * d.col(t);
          v.col(j) -= q * v.col(t);
        }
        if (d(t, j) != zero) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain: fold an offending row into the pivot row.
      Eigen::Index offending = -1;
      for (Eigen::Index i = t + 1; i < m && offending < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != zero) {
            offending = i;
            break;
          }
      if (offending < 0) break;
      d.row(t) += d.row(offending);
      u.row(t) += u.row(offending);
    }
    if (d(t, t) < zero) {
      d.row(t) = -d.row(t);
      u.row(t) = -u.row(t);
    }
  }
  snf.rank = t;
  return snf;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
  return smith_normal_form(a).rank;
}

/// Basis of the integer kernel {x : a x = 0}, one vector per row. The basis
/// is saturated: it spans every integer kernel element.
template <typename Derived>
Matrix<typename Derived::Scalar> integer_kernel(const Eigen::MatrixBase<Derived>& a) {
  const auto snf = smith_normal_form(a);
  const Eigen::Index n = a.cols();
  return snf.v.rightCols(n - snf.rank).transpose();
}

/// Some integer x with a x = b, or nullopt if none exists.
template <typename DerivedA, typename DerivedB>
std::optional<Vector<typename DerivedA::Scalar>> solve_integer(const Eigen::MatrixBase<DerivedA>& a,
                                                               const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (b.rows() != a.rows() || b.cols() != 1) throw ShapeError("solve_integer: right-hand side has wrong length");
  const auto snf = smith_normal_form(a);
  const Vector<Scalar> c = snf.u * b;
  Vector<Scalar> y = Vector<Scalar>::Zero(a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (i < snf.rank) {
      if (c(i) % snf.d(i, i) != Scalar(0)) return std::nullopt;
      y(i) = c(i) / snf.d(i, i);
    } else if (c(i) != Scalar(0)) {
      return std::nullopt;
    }
  }
  return Vector<Scalar>(snf.v * y);
}

struct Signature {
  Eigen::Index positive = 0;
  Eigen::Index negative = 0;
  Eigen::Index zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric integer form via rational congruence
/// diagonalization. A zero pivot with a nonzero entry further along its row
/// is repaired by adding that basis vector to the pivot vector, which
/// creates the pivot 2*g(k,j) (+ g(j,j)) on the diagonal.
template <typename Derived>
Signature signature(const Eigen::MatrixBase<Derived>& g) {
  detail::require_symmetric(g, "signature");
  const Eigen::Index n = g.rows();
  RatMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Rational(Integer(g(i, j)));

  Signature s;
  const Rational zero(0);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == zero) {
      Eigen::Index j = k + 1;
      while (j < n && a(j, j) == zero) ++j;
      if (j < n) {
        a.row(k).swap(a.row(j));
        a.col(k).swap(a.col(j));
      } else {
        j = k + 1;
        while (j < n && a(k, j) == zero) ++j;
        if (j == n) {
          ++s.zero;
          continue;
        }
        a.row(k) += a.row(j);
        a.col(k) += a.col(j);
      }
    }
    const Rational pivot = a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == zero) continue;
      const Rational f = a(i, k) / pivot;
      a.row(i) -= f * a.row(k);
      a.col(i) -= f * a.col(k);
    }
    if (pivot.sign() > 0) ++s.positive;
    else ++s.negative;
  }
  return s;
}

/// Sylvester's criterion on exact leading principal minors.
template <typename Derived>
bool is_positive_definite(const Eigen::MatrixBase<Derived>& g) {
  using Scalar = typename Derived::Scalar;
  detail::require_symmetric(g, "is_positive_definite");
  for (Eigen::Index k = 1; k <= g.rows(); ++k) {
    const Matrix<Scalar> lead = g.topLeftCorner(k, k);
    if (!(Scalar(0) < det_exact(lead))) return false;
  }
  return true;
}

}  // namespace hassett

#endif  // HASSETT_EXACT_LINALG_HPP

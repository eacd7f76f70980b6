#include "hassett/quadform.hpp"

#include "hassett/errors.hpp"
#include "hassett/exact_linalg.hpp"

#include <algorithm>

namespace hassett {

namespace {

void require_positive_definite(const IntMatrix& g, const char* what) {
  if (!is_positive_definite(g)) throw DefinitenessError(std::string(what) + ": form is not positive definite");
}

// Q(x) = sum_i q(i,i) * (x_i + sum_{j>i} q(i,j) x_j)^2
RatMatrix fincke_pohst_factor(const IntMatrix& g) {
  const Eigen::Index n = g.rows();
  RatMatrix q(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) q(i, j) = Rational(g(i, j));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) = q(i, j) / q(i, i);
    }
    for (Eigen::Index k = i + 1; k < n; ++k)
      for (Eigen::Index l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  return q;
}

class Enumerator {
 public:
  Enumerator(const IntMatrix& g, const Integer& bound)
      : g_(g), q_(fincke_pohst_factor(g)), bound_(bound), x_(IntVector::Zero(g.rows())) {}

  std::vector<ShortVector> run() {
    if (g_.rows() > 0) descend(g_.rows() - 1, Rational(bound_));
    return std::move(found_);
  }

 private:
  void descend(Eigen::Index i, const Rational& budget) {
    Rational center(0);
    for (Eigen::Index j = i + 1; j < g_.rows(); ++j) center -= q_(i, j) * Rational(x_(j));
    // floor(sqrt(budget / q_ii)) brackets the admissible x_i; the exact test filters.
    const Integer reach = isqrt((budget / q_(i, i)).floor());
    const Integer lo = center.floor() - reach - 1;
    const Integer hi = center.ceil() + reach + 1;
    for (Integer x = lo; x <= hi; x += 1) {
      const Rational offset = Rational(x) - center;
      const Rational used = q_(i, i) * offset * offset;
      if (budget < used) continue;
      x_(i) = x;
      if (i == 0) record();
      else descend(i - 1, budget - used);
    }
    x_(i) = 0;
  }

  void record() {
    Eigen::Index lead = 0;
    while (lead < x_.size() && x_(lead).is_zero()) ++lead;
    if (lead == x_.size() || x_(lead).sign() < 0) return;
    const Integer norm = x_.dot(g_ * x_);
    if (norm <= bound_) found_.push_back({x_, norm});
  }

  const IntMatrix& g_;
  RatMatrix q_;
  Integer bound_;
  IntVector x_;
  std::vector<ShortVector> found_;
};

bool lex_less(const IntVector& a, const IntVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

}  // namespace

ShortVectorList short_vectors(const IntMatrix& g, const Integer& bound) {
  require_positive_definite(g, "short_vectors");
  if (bound < Integer(1)) throw PreconditionError("short_vectors: bound must be at least 1");
  ShortVectorList list{bound, Enumerator(g, bound).run()};
  std::sort(list.vectors.begin(), list.vectors.end(), [](const ShortVector& a, const ShortVector& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return lex_less(a.coords, b.coords);
  });
  return list;
}

Integer min_norm(const IntMatrix& g) {
  require_positive_definite(g, "min_norm");
  if (g.rows() == 0) throw PreconditionError("min_norm: zero-dimensional form");
  // The smallest diagonal entry is attained by a unit vector, so it bounds the minimum.
  Integer smallest = g(0, 0);
  for (Eigen::Index i = 1; i < g.rows(); ++i) smallest = std::min(smallest, g(i, i));
  return short_vectors(g, smallest).vectors.front().norm;
}

bool represents(const IntMatrix& g, const Integer& n) {
  const auto list = short_vectors(g, n);
  return std::any_of(list.vectors.begin(), list.vectors.end(), [&](const ShortVector& v) { return v.norm == n; });
}

IntMatrix reduce_binary(const IntMatrix& g) {
  if (g.rows() != 2 || g.cols() != 2) throw ShapeError("reduce_binary: expected a 2x2 form");
  require_positive_definite(g, "reduce_binary");
  Integer a = g(0, 0), b = g(0, 1), c = g(1, 1);
  for (;;) {
    if (c < a) {
      std::swap(a, c);
    }
    // b <- b - k a with |b - k a| <= a / 2
    const Integer k = floor_div(2 * b + a, 2 * a);
    if (!k.is_zero()) {
      c = c - 2 * k * b + k * k * a;
      b = b - k * a;
    }
    if (!(c < a)) break;
  }
  IntMatrix r(2, 2);
  r << a, abs(b), abs(b), c;
  return r;
}

IntMatrix k2_gram() {
  IntMatrix g(2, 2);
  g << 3, 1, 1, 1;
  return g;
}

IntMatrix k6_gram() {
  IntMatrix g(2, 2);
  g << 3, 0, 0, 2;
  return g;
}

const char* to_string(Obstruction o) { return o == Obstruction::K2 ? "K2" : "K6"; }

std::optional<ObstructingSublattice> find_k2_or_k6(const EmbeddedSublattice& m) {
  if (!m.contains_h_squared()) throw PreconditionError("find_k2_or_k6: h^2 is not in the sublattice");
  const IntMatrix& g = m.gram();
  require_positive_definite(g, "find_k2_or_k6");

  const IntVector& h = *m.h_coords();
  const IntMatrix reduced_k2 = reduce_binary(k2_gram());
  const IntMatrix reduced_k6 = reduce_binary(k6_gram());

  for (const auto& candidate : short_vectors(g, 2).vectors) {
    IntVector r = candidate.coords;
    Integer pairing = h.dot(g * r);
    if (pairing.sign() < 0) {
      r = -r;
      pairing = -pairing;
    }
    IntMatrix k(2, 2);
    k << h.dot(g * h), pairing, pairing, candidate.norm;
    if (!(Integer(0) < det_exact(k))) continue;
    const IntMatrix reduced = reduce_binary(k);
    if (reduced == reduced_k2) return ObstructingSublattice{Obstruction::K2, r, k};
    if (reduced == reduced_k6) return ObstructingSublattice{Obstruction::K6, r, k};
  }
  return std::nullopt;
}

}  // namespace hassett

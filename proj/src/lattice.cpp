#include "hassett/lattice.hpp"

#include "hassett/errors.hpp"
#include "hassett/exact_linalg.hpp"

#include <algorithm>
#include <string>

namespace hassett {

namespace {

void require_width(const LatticeVector& v, const char* what) {
  if (v.size() != kAmbientRank) {
    throw ShapeError(std::string(what) + ": lattice vector has length " + std::to_string(v.size()) +
                     ", expected " + std::to_string(kAmbientRank));
  }
}

bool all_unit_factors(const IntMatrix& rows) {
  const auto snf = smith_normal_form(rows);
  if (snf.rank != rows.rows()) return false;
  const auto factors = snf.invariant_factors();
  return std::all_of(factors.begin(), factors.end(), [](const Integer& f) { return f == Integer(1); });
}

}  // namespace

IntMatrix e8_gram() {
  // Bourbaki nodes 1..8 map to indices 0..7; edges 1-3, 3-4, 2-4, 4-5, 5-6, 6-7, 7-8.
  static constexpr int kEdges[][2] = {{0, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
  IntMatrix g = IntMatrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) g(i, i) = 2;
  for (const auto& e : kEdges) {
    g(e[0], e[1]) = -1;
    g(e[1], e[0]) = -1;
  }
  return g;
}

AmbientLattice::AmbientLattice() : gram_(IntMatrix::Zero(kAmbientRank, kAmbientRank)) {
  const IntMatrix e8 = e8_gram();
  gram_.block(layout::kE8First, layout::kE8First, 8, 8) = e8;
  gram_.block(layout::kE8Second, layout::kE8Second, 8, 8) = e8;
  gram_(layout::kE1, layout::kF1) = gram_(layout::kF1, layout::kE1) = 1;
  gram_(layout::kE2, layout::kF2) = gram_(layout::kF2, layout::kE2) = 1;
  for (int i = 0; i < 3; ++i) gram_(layout::kI3 + i, layout::kI3 + i) = 1;
}

AmbientLattice build_ambient() { return AmbientLattice(); }

const AmbientLattice& ambient() {
  static const AmbientLattice instance;
  return instance;
}

Integer AmbientLattice::inner_product(const LatticeVector& u, const LatticeVector& v) const {
  require_width(u, "inner_product");
  require_width(v, "inner_product");
  return u.dot(gram_ * v);
}

Integer inner_product(const LatticeVector& u, const LatticeVector& v) {
  return ambient().inner_product(u, v);
}

LatticeVector AmbientLattice::zero() { return LatticeVector::Zero(kAmbientRank); }

LatticeVector AmbientLattice::unit(Eigen::Index index) {
  LatticeVector v = zero();
  v(index) = 1;
  return v;
}

LatticeVector AmbientLattice::h_squared() {
  LatticeVector v = zero();
  v.segment(layout::kI3, 3).setConstant(Integer(1));
  return v;
}

LatticeVector AmbientLattice::nu() {
  LatticeVector v = zero();
  v(layout::kI3) = 3;
  v(layout::kI3 + 1) = 1;
  return v;
}

EmbeddedSublattice::EmbeddedSublattice(IntMatrix basis) : basis_(std::move(basis)) {
  if (basis_.rows() > 0 && basis_.cols() != kAmbientRank) {
    throw ShapeError("sublattice basis rows have width " + std::to_string(basis_.cols()) + ", expected " +
                     std::to_string(kAmbientRank));
  }
  if (basis_.rows() == 0) basis_.resize(0, kAmbientRank);
  if (hassett::rank(basis_) != basis_.rows()) {
    throw RankError("sublattice basis of " + std::to_string(basis_.rows()) + " vectors is linearly dependent");
  }
  gram_ = basis_ * ambient().gram() * basis_.transpose();
  if (basis_.rows() > 0) {
    // h^2 = c^T B  <=>  B^T c = h^2
    const IntMatrix bt = basis_.transpose();
    h_coords_ = solve_integer(bt, AmbientLattice::h_squared());
  }
}

EmbeddedSublattice sublattice_from_basis(std::span<const LatticeVector> vs) {
  if (vs.empty()) throw RankError("sublattice_from_basis: empty basis");
  IntMatrix rows(static_cast<Eigen::Index>(vs.size()), kAmbientRank);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    require_width(vs[i], "sublattice_from_basis");
    rows.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
  }
  return EmbeddedSublattice(std::move(rows));
}

EmbeddedSublattice sublattice_from_basis(std::initializer_list<LatticeVector> vs) {
  return sublattice_from_basis(std::span<const LatticeVector>(vs.begin(), vs.size()));
}

bool is_saturated_in_L(const EmbeddedSublattice& m) { return all_unit_factors(m.basis()); }

bool is_saturated_in(const EmbeddedSublattice& m, const IntMatrix& k_coords) {
  if (k_coords.cols() != m.rank()) {
    throw ShapeError("is_saturated_in: coordinate rows have width " + std::to_string(k_coords.cols()) +
                     ", sublattice rank is " + std::to_string(m.rank()));
  }
  if (hassett::rank(k_coords) != k_coords.rows()) {
    throw RankError("is_saturated_in: coordinate rows are linearly dependent");
  }
  return all_unit_factors(k_coords);
}

EmbeddedSublattice orthogonal_complement(const EmbeddedSublattice& m) {
  const IntMatrix pairing = m.basis() * ambient().gram();
  return EmbeddedSublattice(integer_kernel(pairing));
}

bool is_even(const IntMatrix& g) {
  detail::require_symmetric(g, "is_even");
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    if (!divides(Integer(2), g(i, i))) return false;
  return true;
}

IntMatrix restricted_gram(const EmbeddedSublattice& m, const IntMatrix& k_coords) {
  if (k_coords.cols() != m.rank()) throw ShapeError("restricted_gram: coordinate width mismatch");
  return k_coords * m.gram() * k_coords.transpose();
}

}  // namespace hassett

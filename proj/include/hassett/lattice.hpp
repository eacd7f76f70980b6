#ifndef HASSETT_LATTICE_HPP
#define HASSETT_LATTICE_HPP

// The rank-23 lattice E8 + E8 + U + U + I_{3,0} in a frozen coordinate
// layout, and sublattices embedded in it.
//
//   0..7    first E8 copy (Bourbaki numbering, positive-definite Cartan form)
//   8..15   second E8 copy
//   16, 17  e1, f1   (first hyperbolic plane)
//   18, 19  e2, f2   (second hyperbolic plane)
//   20..22  standard basis of I_{3,0}
//
// h^2 = (1,1,1) and nu = (3,1,0) in the I_{3,0} block.

#include "hassett/integer.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hassett {

inline constexpr Eigen::Index kAmbientRank = 23;

namespace layout {
inline constexpr Eigen::Index kE8First = 0;
inline constexpr Eigen::Index kE8Second = 8;
inline constexpr Eigen::Index kE1 = 16;
inline constexpr Eigen::Index kF1 = 17;
inline constexpr Eigen::Index kE2 = 18;
inline constexpr Eigen::Index kF2 = 19;
inline constexpr Eigen::Index kI3 = 20;
}  // namespace layout

/// Coordinates of an element of L; always length kAmbientRank.
using LatticeVector = IntVector;

/// Identifier written into every report so outputs can be reinterpreted.
inline constexpr const char* kAmbientConvention =
    "L=E8+E8+U+U+I3,0; E8 Cartan form, Bourbaki numbering (1-3-4-5-6-7-8, 2-4); "
    "layout v1: [0,8) E8, [8,16) E8, 16 e1, 17 f1, 18 e2, 19 f2, [20,23) I3,0";

class AmbientLattice {
 public:
  AmbientLattice();

  const IntMatrix& gram() const { return gram_; }

  Integer inner_product(const LatticeVector& u, const LatticeVector& v) const;

  static LatticeVector zero();
  static LatticeVector unit(Eigen::Index index);
  static LatticeVector h_squared();
  static LatticeVector nu();
  static LatticeVector e1() { return unit(layout::kE1); }
  static LatticeVector f1() { return unit(layout::kF1); }
  static LatticeVector e2() { return unit(layout::kE2); }
  static LatticeVector f2() { return unit(layout::kF2); }
  /// Standard basis vector i (0, 1 or 2) of I_{3,0}.
  static LatticeVector i3_unit(int i) { return unit(layout::kI3 + i); }

 private:
  IntMatrix gram_;
};

/// The 8x8 positive-definite E8 Cartan matrix used in both E8 blocks.
IntMatrix e8_gram();

AmbientLattice build_ambient();

/// Shared immutable instance of the ambient lattice.
const AmbientLattice& ambient();

/// Throws ShapeError unless both vectors have length 23.
Integer inner_product(const LatticeVector& u, const LatticeVector& v);

/// A sublattice M of L given by an ordered basis (one row per vector).
class EmbeddedSublattice {
 public:
  /// Throws ShapeError on a row width other than 23, RankError on a
  /// dependent basis. An empty basis yields the zero sublattice.
  explicit EmbeddedSublattice(IntMatrix basis);

  const IntMatrix& basis() const { return basis_; }
  Eigen::Index rank() const { return basis_.rows(); }
  LatticeVector vector(Eigen::Index i) const { return basis_.row(i).transpose(); }
  const IntMatrix& gram() const { return gram_; }
  /// Integer coordinates of h^2 in the basis when h^2 lies in M.
  const std::optional<IntVector>& h_coords() const { return h_coords_; }
  bool contains_h_squared() const { return h_coords_.has_value(); }

 private:
  IntMatrix basis_;
  IntMatrix gram_;
  std::optional<IntVector> h_coords_;
};

/// Stacks the vectors as basis rows. Throws RankError if vs is empty or
/// dependent.
EmbeddedSublattice sublattice_from_basis(std::span<const LatticeVector> vs);
EmbeddedSublattice sublattice_from_basis(std::initializer_list<LatticeVector> vs);

/// L / M torsion-free.
bool is_saturated_in_L(const EmbeddedSublattice& m);

/// K (rows of k_coords, in the basis of M) is saturated in M.
bool is_saturated_in(const EmbeddedSublattice& m, const IntMatrix& k_coords);

EmbeddedSublattice orthogonal_complement(const EmbeddedSublattice& m);

bool is_even(const IntMatrix& g);

/// Gram matrix of the sublattice of M spanned by the rows of k_coords.
IntMatrix restricted_gram(const EmbeddedSublattice& m, const IntMatrix& k_coords);

}  // namespace hassett

#endif  // HASSETT_LATTICE_HPP

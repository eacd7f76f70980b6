#ifndef HASSETT_QUADFORM_HPP
#define HASSETT_QUADFORM_HPP

// Positive-definite integral forms: short vectors, minima, representation,
// binary reduction, and the literal search for the K2 / K6 obstructions.

#include "hassett/integer.hpp"
#include "hassett/lattice.hpp"

#include <optional>
#include <vector>

namespace hassett {

struct ShortVector {
  IntVector coords;
  Integer norm;
};

/// All nonzero v with v^T G v <= bound, one per +/- pair (first nonzero
/// coordinate positive), sorted by norm then coordinates.
struct ShortVectorList {
  Integer bound;
  std::vector<ShortVector> vectors;
};

/// Fincke-Pohst enumeration over an exact rational Cholesky factorization.
/// Throws DefinitenessError for a form that is not positive definite.
ShortVectorList short_vectors(const IntMatrix& g, const Integer& bound);

/// Minimum of v^T G v over nonzero integer v.
Integer min_norm(const IntMatrix& g);

bool represents(const IntMatrix& g, const Integer& n);

/// Lagrange-reduced form [[a,b],[b,c]] with 0 <= 2b <= a <= c.
IntMatrix reduce_binary(const IntMatrix& g);

IntMatrix k2_gram();  // [[3,1],[1,1]]
IntMatrix k6_gram();  // [[3,0],[0,2]]

enum class Obstruction { K2, K6 };

const char* to_string(Obstruction o);

struct ObstructingSublattice {
  Obstruction kind;
  IntVector r;   // coordinates in the basis of M, normalized to (h^2.r) >= 0
  IntMatrix gram;  // Gram of <h^2, r>
};

/// First sublattice <h^2, r> of M isometric to K2 or K6, searching the
/// vectors r of norm <= 2. Requires h^2 in M (PreconditionError) and a
/// positive-definite Gram (DefinitenessError).
std::optional<ObstructingSublattice> find_k2_or_k6(const EmbeddedSublattice& m);

}  // namespace hassett

#endif  // HASSETT_QUADFORM_HPP

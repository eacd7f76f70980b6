#ifndef HASSETT_HASSETT_HPP
#define HASSETT_HASSETT_HPP

// Discriminant sieves, explicit witness lattices for intersections of
// Hassett divisors, and the verification pipeline that certifies them.

#include "hassett/integer.hpp"
#include "hassett/lattice.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hassett {

/// d > 6 and d = 0, 2 (mod 6).
bool satisfies_star(std::int64_t d);

/// (*) and 4 !| d, 9 !| d, and no odd prime p = 2 (mod 3) divides d.
bool is_admissible(std::int64_t d);

struct DivisorLabel {
  std::int64_t d = 0;
  bool satisfies_star = false;
  bool admissible = false;

  static DivisorLabel of(std::int64_t d);
};

/// Values d <= max_d satisfying (*), ascending.
std::vector<std::int64_t> star_values(std::int64_t max_d);

enum class WitnessKind { Pair, Triple, RationalLocus, UserSupplied };

const char* to_string(WitnessKind kind);

/// Residues of (d1, d2) modulo 6 after normalization: (0,0), (0,2), (2,2).
enum class CongruenceCase { BothZero = 1, ZeroTwo = 2, BothTwo = 3 };

struct LabelledSublattice {
  std::string name;
  IntMatrix coords;  // rows in the basis of the parent lattice
  Integer declared_det;
};

struct Witness {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  WitnessKind kind = WitnessKind::Pair;
  CongruenceCase congruence = CongruenceCase::BothZero;
  EmbeddedSublattice lattice;
  std::vector<LabelledSublattice> labelled;
};

/// Swaps so the multiple of 6 comes first when exactly one of them is.
std::pair<std::int64_t, std::int64_t> normalize_pair(std::int64_t d1, std::int64_t d2);

CongruenceCase congruence_case(std::int64_t d1, std::int64_t d2);

/// Rank-3 lattice <h^2, v1, v2> with labelled K_d1 = <h^2, v1> and
/// K_d2 = <h^2, v2>, where v_i = e_i + n_i f_i plus an I_{3,0} correction
/// for each d_i = 2 (mod 6). Throws PreconditionError unless both satisfy (*).
Witness pair_witness(std::int64_t d1, std::int64_t d2);

/// Rank-4 lattice <h^2, nu, v1, v2> with labelled K_14 = <h^2, nu>, K_d1, K_d2.
Witness triple_witness(std::int64_t d1, std::int64_t d2);

/// (d1 d2 - 1)/3 when both are 2 mod 6, else d1 d2 / 3.
Integer expected_pair_det(std::int64_t d1, std::int64_t d2);

struct SubReport {
  std::string name;
  IntMatrix coords;
  IntMatrix gram;
  Integer det;
  Integer declared_det;
  bool saturated_in_parent = false;

  bool ok() const { return saturated_in_parent && det == declared_det; }
};

struct WitnessReport {
  std::optional<std::int64_t> d1;
  std::optional<std::int64_t> d2;
  WitnessKind kind = WitnessKind::UserSupplied;
  IntMatrix basis;
  IntMatrix gram;
  bool positive_definite = false;
  bool saturated_in_L = false;
  bool contains_h2 = false;
  std::optional<IntVector> h_coords;
  // Only evaluated on positive-definite lattices.
  std::optional<bool> represents_two;
  std::optional<Integer> min_norm;
  Integer det_m;
  std::optional<Integer> expected_det;
  Eigen::Index codimension = 0;
  std::vector<SubReport> sub_reports;
  bool pass = false;

  /// Names of the checks that failed; empty iff pass.
  std::vector<std::string> failed_checks() const;
};

WitnessReport verify(const EmbeddedSublattice& m, std::span<const LabelledSublattice> labelled,
                     const std::optional<Integer>& expected_det);

/// Pair witnesses carry expected_pair_det; triple witnesses carry none.
WitnessReport verify(const Witness& w);

struct RationalLociReport {
  std::int64_t d = 0;
  std::array<WitnessReport, 3> reports;  // partners 14, 26, 38
  bool determinants_distinct = false;
  bool pass = false;
};

inline constexpr std::array<std::int64_t, 3> kRationalPartners = {14, 26, 38};

RationalLociReport rational_loci(std::int64_t d);

struct SweepFailure {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  WitnessKind kind = WitnessKind::Pair;
  std::vector<std::string> failed_checks;
};

struct SweepSummary {
  std::int64_t max_d = 0;
  std::size_t values = 0;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::array<std::size_t, 3> case_tallies{};  // indexed by CongruenceCase - 1
  std::vector<SweepFailure> failures;
};

/// Verifies pair and triple witnesses for every unordered (*) pair d1 <= d2
/// <= max_d. The summary does not depend on jobs.
SweepSummary sweep(std::int64_t max_d, unsigned jobs = 1);

}  // namespace hassett

#endif  // HASSETT_HASSETT_HPP

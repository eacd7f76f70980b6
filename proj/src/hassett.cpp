#include "hassett/hassett.hpp"

#include "hassett/errors.hpp"
#include "hassett/exact_linalg.hpp"
#include "hassett/quadform.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace hassett {

bool satisfies_star(std::int64_t d) { return d > 6 && (d % 6 == 0 || d % 6 == 2); }

bool is_admissible(std::int64_t d) {
  if (!satisfies_star(d) || d % 4 == 0 || d % 9 == 0) return false;
  std::int64_t rest = d;
  while (rest % 2 == 0) rest /= 2;
  for (std::int64_t p = 3; p * p <= rest; p += 2) {
    if (rest % p != 0) continue;
    if (p % 3 == 2) return false;
    while (rest % p == 0) rest /= p;
  }
  return !(rest > 1 && rest % 3 == 2);
}

DivisorLabel DivisorLabel::of(std::int64_t d) { return {d, hassett::satisfies_star(d), is_admissible(d)}; }

std::vector<std::int64_t> star_values(std::int64_t max_d) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 7; d <= max_d; ++d)
    if (satisfies_star(d)) out.push_back(d);
  return out;
}

const char* to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Pair: return "pair-witness";
    case WitnessKind::Triple: return "triple-witness";
    case WitnessKind::RationalLocus: return "rational-loci";
    case WitnessKind::UserSupplied: return "user-supplied";
  }
  return "unknown";
}

namespace {

void require_star(std::int64_t d) {
  if (!satisfies_star(d)) {
    throw PreconditionError("discriminant " + std::to_string(d) + " does not satisfy d > 6 and d = 0, 2 (mod 6)");
  }
}

// e_i + n f_i with n = floor(d / 6), plus the I_{3,0} unit `correction` when d = 2 (mod 6).
LatticeVector divisor_vector(std::int64_t d, const LatticeVector& e, const LatticeVector& f, int correction) {
  LatticeVector v = e + Integer(d / 6) * f;
  if (d % 6 == 2) v += AmbientLattice::i3_unit(correction);
  return v;
}

IntMatrix unit_rows(Eigen::Index width, std::initializer_list<Eigen::Index> columns) {
  IntMatrix rows = IntMatrix::Zero(static_cast<Eigen::Index>(columns.size()), width);
  Eigen::Index r = 0;
  for (auto c : columns) rows(r++, c) = 1;
  return rows;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> normalize_pair(std::int64_t d1, std::int64_t d2) {
  if (d1 % 6 != 0 && d2 % 6 == 0) return {d2, d1};
  return {d1, d2};
}

CongruenceCase congruence_case(std::int64_t d1, std::int64_t d2) {
  const int zeros = (d1 % 6 == 0) + (d2 % 6 == 0);
  return zeros == 2 ? CongruenceCase::BothZero : (zeros == 1 ? CongruenceCase::ZeroTwo : CongruenceCase::BothTwo);
}

Witness pair_witness(std::int64_t d1, std::int64_t d2) {
  require_star(d1);
  require_star(d2);
  std::tie(d1, d2) = normalize_pair(d1, d2);
  const LatticeVector v1 = divisor_vector(d1, AmbientLattice::e1(), AmbientLattice::f1(), 1);
  const LatticeVector v2 = divisor_vector(d2, AmbientLattice::e2(), AmbientLattice::f2(), 2);
  return Witness{
      d1,
      d2,
      WitnessKind::Pair,
      congruence_case(d1, d2),
      sublattice_from_basis({AmbientLattice::h_squared(), v1, v2}),
      {{"K_d1", unit_rows(3, {0, 1}), Integer(d1)}, {"K_d2", unit_rows(3, {0, 2}), Integer(d2)}},
  };
}

Witness triple_witness(std::int64_t d1, std::int64_t d2) {
  require_star(d1);
  require_star(d2);
  std::tie(d1, d2) = normalize_pair(d1, d2);
  const LatticeVector v1 = divisor_vector(d1, AmbientLattice::e1(), AmbientLattice::f1(), 1);
  const LatticeVector v2 = divisor_vector(d2, AmbientLattice::e2(), AmbientLattice::f2(), 2);
  return Witness{
      d1,
      d2,
      WitnessKind::Triple,
      congruence_case(d1, d2),
      sublattice_from_basis({AmbientLattice::h_squared(), AmbientLattice::nu(), v1, v2}),
      {{"K_14", unit_rows(4, {0, 1}), Integer(14)},
       {"K_d1", unit_rows(4, {0, 2}), Integer(d1)},
       {"K_d2", unit_rows(4, {0, 3}), Integer(d2)}},
  };
}

Integer expected_pair_det(std::int64_t d1, std::int64_t d2) {
  require_star(d1);
  require_star(d2);
  Integer product = Integer(d1) * Integer(d2);
  if (d1 % 6 == 2 && d2 % 6 == 2) product -= 1;
  if (!(product % 3).is_zero()) {
    throw std::logic_error("expected_pair_det: " + product.str() + " is not divisible by 3");
  }
  return product / 3;
}

std::vector<std::string> WitnessReport::failed_checks() const {
  std::vector<std::string> failed;
  if (!positive_definite) failed.emplace_back("positive_definite");
  if (!saturated_in_L) failed.emplace_back("saturated_in_L");
  if (!contains_h2) failed.emplace_back("contains_h2");
  if (represents_two.value_or(true)) failed.emplace_back("represents_two");
  if (!min_norm || *min_norm < Integer(3)) failed.emplace_back("min_norm");
  if (expected_det && det_m != *expected_det) failed.emplace_back("det_m");
  for (const auto& sub : sub_reports)
    if (!sub.ok()) failed.push_back("sub_report:" + sub.name);
  return failed;
}

WitnessReport verify(const EmbeddedSublattice& m, std::span<const LabelledSublattice> labelled,
                     const std::optional<Integer>& expected_det) {
  WitnessReport report;
  report.basis = m.basis();
  report.gram = m.gram();
  report.positive_definite = is_positive_definite(m.gram());
  report.saturated_in_L = is_saturated_in_L(m);
  report.contains_h2 = m.contains_h_squared();
  report.h_coords = m.h_coords();
  if (report.positive_definite && m.rank() > 0) {
    report.represents_two = represents(m.gram(), 2);
    report.min_norm = min_norm(m.gram());
  }
  report.det_m = det_exact(m.gram());
  report.expected_det = expected_det;
  report.codimension = std::max<Eigen::Index>(m.rank() - 1, 0);
  for (const auto& k : labelled) {
    SubReport sub;
    sub.name = k.name;
    sub.coords = k.coords;
    sub.gram = restricted_gram(m, k.coords);
    sub.det = det_exact(sub.gram);
    sub.declared_det = k.declared_det;
    sub.saturated_in_parent = is_saturated_in(m, k.coords);
    report.sub_reports.push_back(std::move(sub));
  }
  report.pass = report.failed_checks().empty();
  return report;
}

WitnessReport verify(const Witness& w) {
  std::optional<Integer> expected;
  if (w.kind == WitnessKind::Pair || w.kind == WitnessKind::RationalLocus) expected = expected_pair_det(w.d1, w.d2);
  WitnessReport report = verify(w.lattice, w.labelled, expected);
  report.d1 = w.d1;
  report.d2 = w.d2;
  report.kind = w.kind;
  return report;
}

RationalLociReport rational_loci(std::int64_t d) {
  require_star(d);
  RationalLociReport out;
  out.d = d;
  for (std::size_t i = 0; i < kRationalPartners.size(); ++i) {
    Witness w = pair_witness(d, kRationalPartners[i]);
    w.kind = WitnessKind::RationalLocus;
    out.reports[i] = verify(w);
  }
  const auto& r = out.reports;
  out.determinants_distinct = r[0].det_m != r[1].det_m && r[0].det_m != r[2].det_m && r[1].det_m != r[2].det_m;
  out.pass = out.determinants_distinct &&
             std::all_of(r.begin(), r.end(), [](const WitnessReport& w) { return w.pass; });
  return out;
}

SweepSummary sweep(std::int64_t max_d, unsigned jobs) {
  if (max_d < 8) throw PreconditionError("sweep: max_d must be at least 8");
  const auto values = star_values(max_d);
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i; j < values.size(); ++j) pairs.emplace_back(values[i], values[j]);

  struct Outcome {
    CongruenceCase congruence;
    std::vector<std::string> pair_failed;
    std::vector<std::string> triple_failed;
  };
  std::vector<Outcome> outcomes(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      const auto [d1, d2] = pairs[i];
      const Witness pw = pair_witness(d1, d2);
      outcomes[i].congruence = pw.congruence;
      outcomes[i].pair_failed = verify(pw).failed_checks();
      outcomes[i].triple_failed = verify(triple_witness(d1, d2)).failed_checks();
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::max(1u, jobs);
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }

  SweepSummary summary;
  summary.max_d = max_d;
  summary.values = values.size();
  summary.pairs_checked = pairs.size();
  summary.triples_checked = pairs.size();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& o = outcomes[i];
    ++summary.case_tallies[static_cast<int>(o.congruence) - 1];
    if (!o.pair_failed.empty())
      summary.failures.push_back({pairs[i].first, pairs[i].second, WitnessKind::Pair, o.pair_failed});
    if (!o.triple_failed.empty())
      summary.failures.push_back({pairs[i].first, pairs[i].second, WitnessKind::Triple, o.triple_failed});
  }
  return summary;
}

}  // namespace hassett

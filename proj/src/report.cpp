#include "hassett/report.hpp"

#include "hassett/errors.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace hassett {

namespace {

Json optional_integer(const std::optional<Integer>& v) { return v ? Json(v->str()) : Json(nullptr); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

void matrix_lines(std::ostringstream& os, const IntMatrix& m, const std::string& indent) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << indent << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
}

}  // namespace

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

Json to_json(const WitnessReport& r) {
  Json j;
  j["d1"] = r.d1 ? Json(*r.d1) : Json(nullptr);
  j["d2"] = r.d2 ? Json(*r.d2) : Json(nullptr);
  j["kind"] = to_string(r.kind);
  j["rank"] = r.basis.rows();
  j["basis"] = to_json(r.basis);
  j["gram"] = to_json(r.gram);
  j["positive_definite"] = r.positive_definite;
  j["saturated_in_L"] = r.saturated_in_L;
  j["contains_h2"] = r.contains_h2;
  j["h_coords"] = r.h_coords ? to_json(*r.h_coords) : Json(nullptr);
  j["represents_two"] = r.represents_two ? Json(*r.represents_two) : Json(nullptr);
  j["min_norm"] = optional_integer(r.min_norm);
  j["det_m"] = r.det_m.str();
  j["expected_det"] = optional_integer(r.expected_det);
  j["codimension"] = r.codimension;
  Json subs = Json::array();
  for (const auto& s : r.sub_reports) {
    Json sj;
    sj["name"] = s.name;
    sj["declared_det"] = s.declared_det.str();
    sj["coords"] = to_json(s.coords);
    sj["gram"] = to_json(s.gram);
    sj["det"] = s.det.str();
    sj["saturated_in_parent"] = s.saturated_in_parent;
    subs.push_back(std::move(sj));
  }
  j["sub_reports"] = std::move(subs);
  Json failed = Json::array();
  for (const auto& f : r.failed_checks()) failed.push_back(f);
  j["failed_checks"] = std::move(failed);
  j["pass"] = r.pass;
  return j;
}

Json to_json(const RationalLociReport& r) {
  Json j;
  j["d"] = r.d;
  Json dets = Json::array();
  Json reports = Json::array();
  for (const auto& w : r.reports) {
    dets.push_back(w.det_m.str());
    reports.push_back(to_json(w));
  }
  j["partners"] = kRationalPartners;
  j["determinants"] = std::move(dets);
  j["determinants_distinct"] = r.determinants_distinct;
  j["reports"] = std::move(reports);
  j["pass"] = r.pass;
  return j;
}

Json to_json(const SweepSummary& s) {
  Json j;
  j["max_d"] = s.max_d;
  j["values"] = s.values;
  j["pairs_checked"] = s.pairs_checked;
  j["triples_checked"] = s.triples_checked;
  j["case_tallies"] = {{"case1", s.case_tallies[0]}, {"case2", s.case_tallies[1]}, {"case3", s.case_tallies[2]}};
  j["failure_count"] = s.failures.size();
  Json failures = Json::array();
  for (const auto& f : s.failures) {
    failures.push_back({{"d1", f.d1}, {"d2", f.d2}, {"kind", to_string(f.kind)}, {"failed_checks", f.failed_checks}});
  }
  j["failures"] = std::move(failures);
  j["pass"] = s.failures.empty();
  return j;
}

Json make_document(const std::string& command, Json inputs, Json report) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["ambient_convention"] = kAmbientConvention;
  doc["report"] = std::move(report);
  return doc;
}

std::string to_text(const WitnessReport& r) {
  std::ostringstream os;
  os << to_string(r.kind);
  if (r.d1 && r.d2) os << " d1=" << *r.d1 << " d2=" << *r.d2;
  os << "\nbasis (rank " << r.basis.rows() << "):\n";
  matrix_lines(os, r.basis, "  ");
  os << "gram:\n";
  matrix_lines(os, r.gram, "  ");
  os << "det_m: " << r.det_m;
  if (r.expected_det) os << " (expected " << *r.expected_det << ")";
  os << "\npositive_definite: " << yes_no(r.positive_definite) << "\n";
  os << "saturated_in_L: " << yes_no(r.saturated_in_L) << "\n";
  os << "contains_h2: " << yes_no(r.contains_h2) << "\n";
  os << "represents_two: " << (r.represents_two ? yes_no(*r.represents_two) : "n/a") << "\n";
  os << "min_norm: " << (r.min_norm ? r.min_norm->str() : "n/a") << "\n";
  os << "codimension: " << r.codimension << "\n";
  for (const auto& s : r.sub_reports) {
    os << "sublattice " << s.name << ": det " << s.det << " (declared " << s.declared_det
       << "), saturated " << yes_no(s.saturated_in_parent) << "\n";
    matrix_lines(os, s.gram, "  ");
  }
  os << "pass: " << yes_no(r.pass) << "\n";
  return os.str();
}

std::string to_text(const RationalLociReport& r) {
  std::ostringstream os;
  os << "rational loci for d=" << r.d << "\n";
  for (std::size_t i = 0; i < r.reports.size(); ++i) {
    os << "partner " << kRationalPartners[i] << ": det " << r.reports[i].det_m << ", pass "
       << yes_no(r.reports[i].pass) << "\n";
  }
  os << "determinants_distinct: " << yes_no(r.determinants_distinct) << "\n";
  for (const auto& w : r.reports) os << "\n" << to_text(w);
  os << "\npass: " << yes_no(r.pass) << "\n";
  return os.str();
}

std::string to_text(const SweepSummary& s) {
  std::ostringstream os;
  os << "max_d: " << s.max_d << "\n";
  os << "values: " << s.values << "\n";
  os << "pairs_checked: " << s.pairs_checked << "\n";
  os << "triples_checked: " << s.triples_checked << "\n";
  os << "case1: " << s.case_tallies[0] << "\ncase2: " << s.case_tallies[1] << "\ncase3: " << s.case_tallies[2]
     << "\n";
  os << "failures: " << s.failures.size() << "\n";
  for (const auto& f : s.failures) {
    os << "  " << to_string(f.kind) << " (" << f.d1 << "," << f.d2 << "):";
    for (const auto& c : f.failed_checks) os << " " << c;
    os << "\n";
  }
  return os.str();
}

EmbeddedSublattice read_basis(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_content = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };
  auto tokens = [&]() {
    std::vector<Integer> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
      try {
        out.push_back(Integer::parse(tok));
      } catch (const std::invalid_argument&) {
        throw ParseError("parse error: line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
      }
    }
    return out;
  };

  if (!next_content()) throw ParseError("parse error: missing header line '<rank> <width>'");
  const auto header = tokens();
  if (header.size() != 2 || header[0] < Integer(1) || header[1] < Integer(1) || !header[0].fits_int64() ||
      !header[1].fits_int64()) {
    throw ParseError("parse error: line " + std::to_string(line_no) + ": header must be '<rank> <width>'");
  }
  const auto rank = header[0].to_int64();
  const auto width = header[1].to_int64();
  if (width != kAmbientRank) {
    throw ShapeError("width error: header declares width " + std::to_string(width) + ", expected " +
                     std::to_string(kAmbientRank));
  }

  IntMatrix basis(rank, kAmbientRank);
  for (std::int64_t r = 0; r < rank; ++r) {
    if (!next_content()) {
      throw ParseError("parse error: expected " + std::to_string(rank) + " basis rows, found " + std::to_string(r));
    }
    const auto row = tokens();
    if (static_cast<Eigen::Index>(row.size()) != kAmbientRank) {
      throw ShapeError("width error: line " + std::to_string(line_no) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(kAmbientRank));
    }
    for (Eigen::Index c = 0; c < kAmbientRank; ++c) basis(r, c) = row[c];
  }
  if (next_content()) {
    throw ParseError("parse error: line " + std::to_string(line_no) + ": more rows than the declared rank " +
                     std::to_string(rank));
  }
  try {
    return EmbeddedSublattice(std::move(basis));
  } catch (const RankError&) {
    throw RankError("rank error: the " + std::to_string(rank) + " basis rows are linearly dependent");
  }
}

void write_basis(std::ostream& out, const IntMatrix& basis) {
  out << basis.rows() << " " << basis.cols() << "\n";
  for (Eigen::Index i = 0; i < basis.rows(); ++i) {
    for (Eigen::Index j = 0; j < basis.cols(); ++j) out << (j ? " " : "") << basis(i, j);
    out << "\n";
  }
}

}  // namespace hassett

#ifndef HASSETT_REPORT_HPP
#define HASSETT_REPORT_HPP

// Report documents (JSON and text) and the plain-text basis input format.
//
// JSON documents always carry, in this order: schema_version, command,
// inputs, ambient_convention, report. Integers that may exceed native width
// (matrix entries, determinants, coordinates) are emitted as decimal strings.

#include "hassett/hassett.hpp"

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hassett {

inline constexpr const char* kSchemaVersion = "1";

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const IntMatrix& m);
Json to_json(const IntVector& v);
Json to_json(const WitnessReport& r);
Json to_json(const RationalLociReport& r);
Json to_json(const SweepSummary& s);

Json make_document(const std::string& command, Json inputs, Json report);

std::string to_text(const WitnessReport& r);
std::string to_text(const RationalLociReport& r);
std::string to_text(const SweepSummary& s);

/// Reads the basis file format:
///
///   # comment
///   <rank> <width>
///   <width integers>      (rank lines)
///
/// Throws ParseError on malformed text, ShapeError when a width is not 23,
/// RankError when the rows are dependent.
EmbeddedSublattice read_basis(std::istream& in);

void write_basis(std::ostream& out, const IntMatrix& basis);

}  // namespace hassett

#endif  // HASSETT_REPORT_HPP

#include "hassett/cli.hpp"

#include "hassett/errors.hpp"
#include "hassett/exact_linalg.hpp"
#include "hassett/hassett.hpp"
#include "hassett/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace hassett {

namespace {

enum class Format { Text, Json };

struct Emission {
  std::string text;
  Json document;
  bool pass = false;
};

constexpr const char* kStarCondition = "d must satisfy d > 6 and d = 0 or 2 (mod 6)";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_star_arg(const char* flag, std::int64_t d) {
  if (!satisfies_star(d)) {
    throw UsageError(std::string(flag) + " " + std::to_string(d) + " is not a valid discriminant: " + kStarCondition);
  }
}

Emission admissible_listing(std::int64_t max, bool star_only) {
  if (max < 7) throw UsageError("--max must be at least 7");
  Emission e;
  std::ostringstream os;
  os << "d star admissible\n";
  Json rows = Json::array();
  for (std::int64_t d = 1; d <= max; ++d) {
    const auto label = DivisorLabel::of(d);
    if (star_only && !label.satisfies_star) continue;
    os << d << " " << (label.satisfies_star ? "true" : "false") << " " << (label.admissible ? "true" : "false")
       << "\n";
    rows.push_back({{"d", d}, {"star", label.satisfies_star}, {"admissible", label.admissible}});
  }
  e.text = os.str();
  e.document = make_document("admissible", {{"max", max}, {"star_only", star_only}}, {{"rows", std::move(rows)}});
  e.pass = true;
  return e;
}

Emission witness_report(const std::string& command, std::int64_t d1, std::int64_t d2, bool triple) {
  require_star_arg("--d1", d1);
  require_star_arg("--d2", d2);
  const WitnessReport r = verify(triple ? triple_witness(d1, d2) : pair_witness(d1, d2));
  return {to_text(r), make_document(command, {{"d1", d1}, {"d2", d2}}, to_json(r)), r.pass};
}

Emission rational_loci_report(std::int64_t d) {
  require_star_arg("--d", d);
  const RationalLociReport r = rational_loci(d);
  return {to_text(r), make_document("rational-loci", {{"d", d}}, to_json(r)), r.pass};
}

Emission verify_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  const EmbeddedSublattice m = read_basis(in);
  const WitnessReport r = verify(m, {}, std::nullopt);
  return {to_text(r), make_document("verify", {{"input", path}}, to_json(r)), r.pass};
}

Emission sweep_report(std::int64_t max, unsigned jobs) {
  if (max < 8) throw UsageError("--max must be at least 8");
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const SweepSummary s = sweep(max, jobs);
  // jobs is deliberately absent from the document so output is identical for any value.
  return {to_text(s), make_document("sweep", {{"max", max}}, to_json(s)), s.failures.empty()};
}

Emission ambient_report(bool check) {
  const AmbientLattice& l = ambient();
  const Signature sig = signature(l.gram());
  const Integer det = abs(det_exact(l.gram()));
  Json report;
  report["rank"] = kAmbientRank;
  report["signature"] = {sig.positive, sig.negative, sig.zero};
  report["abs_det"] = det.str();
  bool pass = sig == Signature{21, 2, 0} && det == Integer(1);

  std::ostringstream os;
  os << "convention: " << kAmbientConvention << "\n";
  os << "rank: " << kAmbientRank << "\n";
  os << "signature: (" << sig.positive << "," << sig.negative << "," << sig.zero << ")\n";
  os << "abs_det: " << det << "\n";
  if (check) {
    const EmbeddedSublattice primitive = orthogonal_complement(sublattice_from_basis({AmbientLattice::h_squared()}));
    const Signature psig = signature(primitive.gram());
    const Integer pdet = abs(det_exact(primitive.gram()));
    const bool even = is_even(primitive.gram());
    const bool saturated = is_saturated_in_L(primitive);
    report["primitive"] = {{"rank", primitive.rank()},
                           {"even", even},
                           {"abs_det", pdet.str()},
                           {"signature", {psig.positive, psig.negative, psig.zero}},
                           {"saturated_in_L", saturated}};
    pass = pass && primitive.rank() == 22 && even && pdet == Integer(3) && psig == Signature{20, 2, 0} && saturated;
    os << "primitive rank: " << primitive.rank() << "\n";
    os << "primitive even: " << (even ? "true" : "false") << "\n";
    os << "primitive abs_det: " << pdet << "\n";
    os << "primitive signature: (" << psig.positive << "," << psig.negative << "," << psig.zero << ")\n";
  }
  report["pass"] = pass;
  os << "pass: " << (pass ? "true" : "false") << "\n";
  return {os.str(), make_document("ambient", {{"check", check}}, std::move(report)), pass};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice witnesses for intersections of Hassett divisors", "hassett"};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::Text;
  std::string output_path;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--output", output_path, "Write the document to PATH instead of stdout");

  std::int64_t max = 0, d = 0, d1 = 0, d2 = 0;
  bool star_only = false, check = false;
  unsigned jobs = 1;
  std::string input_path;

  auto* admissible = app.add_subcommand("admissible", "List discriminants with their (*) and admissibility flags");
  admissible->add_option("--max", max, "Largest d listed")->required();
  admissible->add_flag("--star-only", star_only, "Only list d satisfying (*)");

  auto* witness = app.add_subcommand("witness", "Build and verify the rank-3 witness for C_d1 and C_d2");
  witness->add_option("--d1", d1)->required();
  witness->add_option("--d2", d2)->required();

  auto* triple = app.add_subcommand("triple", "Build and verify the rank-4 witness for C_14, C_d1 and C_d2");
  triple->add_option("--d1", d1)->required();
  triple->add_option("--d2", d2)->required();

  auto* loci = app.add_subcommand("rational-loci", "Verify the three rank-3 witnesses pairing d with 14, 26, 38");
  loci->add_option("--d", d)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Verify a user-supplied sublattice basis file");
  verify_cmd->add_option("input", input_path, "Basis file")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Verify all pair and triple witnesses up to --max");
  sweep_cmd->add_option("--max", max)->required();
  sweep_cmd->add_option("--jobs", jobs, "Worker threads (0: hardware concurrency)");

  auto* ambient_cmd = app.add_subcommand("ambient", "Report the ambient lattice and its primitive part");
  ambient_cmd->add_flag("--check", check, "Also verify the orthogonal complement of h^2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Emission e;
  try {
    if (admissible->parsed()) e = admissible_listing(max, star_only);
    else if (witness->parsed()) e = witness_report("witness", d1, d2, false);
    else if (triple->parsed()) e = witness_report("triple", d1, d2, true);
    else if (loci->parsed()) e = rational_loci_report(d);
    else if (verify_cmd->parsed()) e = verify_file(input_path);
    else if (sweep_cmd->parsed()) e = sweep_report(max, jobs);
    else e = ambient_report(check);
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& ex) {
    err << ex.what() << "\n";
    return kExitUsage;
  } catch (const ShapeError& ex) {
    err << ex.what() << "\n";
    return kExitUsage;
  } catch (const RankError& ex) {
    err << ex.what() << "\n";
    return kExitUsage;
  }

  const std::string body = format == Format::Json ? e.document.dump(2) + "\n" : e.text;
  if (output_path.empty()) {
    out << body;
  } else {
    std::ofstream file(output_path, std::ios::binary);
    if (!file || !(file << body)) {
      err << "cannot write output file '" << output_path << "'\n";
      return kExitUsage;
    }
  }
  return e.pass ? kExitPass : kExitFail;
}

}  // namespace hassett

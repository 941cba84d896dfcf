#ifndef GAPLAB_IO_JSON_IO_HPP_
#define GAPLAB_IO_JSON_IO_HPP_

#include <string>

#include "json.hpp"

#include "gaplab/diag/path_sets.hpp"
#include "gaplab/diag/stage.hpp"
#include "gaplab/gapcore/gap_program.hpp"
#include "gaplab/gapcore/target_spec.hpp"
#include "gaplab/gapcore/verify.hpp"
#include "gaplab/polyenc/multilinear.hpp"
#include "gaplab/polyenc/oracle_machine.hpp"
#include "gaplab/reconstruct/deck.hpp"

namespace gaplab::io {

// Insertion-ordered JSON keeps report bytes reproducible.
using Json = nlohmann::ordered_json;

// Gap programs and target specs (mirrors the s-expression DSL).
Json gap_program_to_json(const gapcore::GapProgram& g, std::size_t max_table = 4096);
gapcore::GapProgram gap_program_from_json(const Json& j);
Json target_spec_to_json(const gapcore::TargetSpec& spec);
gapcore::TargetSpec target_spec_from_json(const Json& j);
Json two_sided_to_json(const gapcore::TwoSidedTargetSpec& spec);
gapcore::TwoSidedTargetSpec two_sided_from_json(const Json& j);

// Verification reports: one {input, gap, expected, verdict} object per
// violation. Gap values are decimal strings (exact).
Json verify_report_to_json(const gapcore::VerifyReport& report);

// Oracle machines as JSON trees.
Json oracle_machine_to_json(const polyenc::OracleMachine& m);
polyenc::OracleMachine oracle_machine_from_json(const Json& j);

// Polynomials as monomial lists plus the expanded normal form.
Json multilinear_to_json(const polyenc::MultilinearPoly& p);
Json encoding_report_to_json(const polyenc::EncodingReport& report);

// Graphs in graph6 (string) or {"n": .., "edges": [[u,v], ..]} form; decks
// as arrays of graphs.
Json graph_to_json(const reconstruct::Graph& g);
reconstruct::Graph graph_from_json(const Json& j);
Json deck_to_json(const reconstruct::Deck& d);
reconstruct::Deck deck_from_json(const Json& j);
Json qrecon_report_to_json(const reconstruct::QReconReport& report);

// Diagonalization stage fixtures and search results.
Json det_machine_to_json(const diag::DetMachine& m);
diag::DetMachine det_machine_from_json(const Json& j);

struct StageFixture {
  polyenc::OracleMachine n_machine;
  diag::DetMachine m_machine;
  std::size_t n_j = 0;
  std::set<std::string> b_prev;
  NatPoly r;
};
StageFixture stage_fixture_from_json(const Json& j);
Json stage_fixture_to_json(const StageFixture& fixture);
Json stage_conditions_to_json(const diag::StageConditions& cond, bool gap_variant);

// Load/store helpers shared by the CLI and tests.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gaplab::io

#endif  // GAPLAB_IO_JSON_IO_HPP_

#pragma once

#include <string>

#include "json.hpp"

#include "eqlines/hadamard.hpp"
#include "eqlines/lines.hpp"
#include "eqlines/solver.hpp"

namespace eqlines {

using ordered_json = nlohmann::ordered_json;

// Document schemas (entries use the scalar grammar; float backend uses
// decimal a+bi):
//   matrix:   { "backend", "rows", "cols", "entries": [[string, ...], ...] }
//   line set: { "dim", "backend", "vectors": [{ "set", "row", "entries" }] }
// Rendering is canonical, so serialize(parse(serialize(x))) is
// byte-identical to serialize(x).

ordered_json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const ordered_json& j);

ordered_json lineset_to_json(const LineSet& lines);
LineSet lineset_from_json(const ordered_json& j);

ordered_json report_to_json(const EquiangularityReport& report);
ordered_json witness_to_json(const EquivalenceWitness& w);
ordered_json mu_set_to_json(const MuSet& mu);
ordered_json solution_set_to_json(const SolutionSet& sols);

std::string dump_json(const ordered_json& j);
ordered_json parse_json_text(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace eqlines

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "k3acm/harness.hpp"

namespace k3acm {

// A lattice file: {"rank": 2, "gram": [[...],[...]], "basis": ["C","F"]}.
// "basis" is optional; rank defaults to the Gram dimension.
struct LatticeFile {
    PicardLattice lattice;
    std::vector<std::string> basis;
};

LatticeFile read_lattice_json(const nlohmann::json& j);
LatticeFile read_lattice_file(const std::string& path);
nlohmann::json lattice_to_json(const PicardLattice& lat, const std::vector<std::string>& basis);

// "x,y" -> divisor class; throws invalid_input on malformed text.
DivisorClass parse_class(const std::string& text, int rank);

nlohmann::json to_json(const CohomologyVector& v, const DivisorClass& cls, Int chi);
nlohmann::json to_json(const ClassificationRecord& rec);
nlohmann::json to_json(const ValidationReport& rep);
nlohmann::json to_json(const FamilyExampleReport& rep);
nlohmann::json to_json(const FamilyScanReport& rep);

// The command-line front end; returns the process exit code:
// 0 = success and no mismatches, 1 = mismatch or assertion failure,
// 2 = invalid input. Output JSON goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace k3acm

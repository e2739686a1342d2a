#pragma once

#include "simra/bounds.hpp"
#include "simra/lattice.hpp"
#include "simra/minimal.hpp"
#include "simra/projections.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace simra {

// Matrix file: one vector per line, integers whitespace-separated.
// Blank lines and '#' comments are ignored.
IntMatrix read_matrix_file(const std::string& path);

nlohmann::json subspace_json(const Subspace& v);
nlohmann::json record_json(const MinimalPointRecord& r, int l_digits = 15);
std::string record_csv(const MinimalPointRecord& r, int l_digits = 15);
nlohmann::json profile_json(const DimensionProfile& p);
nlohmann::json thm11_json(const Thm11Report& r, int digits = 8);
nlohmann::json structure_json(const StructureIndex& st, int digits = 6);
nlohmann::json exponents_json(const ExponentEstimate& est, int digits = 8);

std::string interval_display(const Interval& v, int digits);

} // namespace simra

#pragma once

// Field exchange: JSON with inline values, or raw little-endian float64
// payload with a JSON sidecar header at <data_path>.json.

#include <iosfwd>
#include <string>

#include "conecalc/lattice_field.hpp"

namespace conecalc {

void save_field_json(std::ostream& os, const MomentumLatticeField& f);
MomentumLatticeField load_field_json(std::istream& is);

void save_field_binary(const std::string& data_path, const MomentumLatticeField& f);
MomentumLatticeField load_field_binary(const std::string& data_path);

}  // namespace conecalc

#pragma once

#include <string>

#include <json.hpp>

#include "cpstrata/ballmodels.hpp"
#include "cpstrata/chambers.hpp"
#include "cpstrata/confgeom.hpp"
#include "cpstrata/dga.hpp"

namespace cpstrata::serialize {

using nlohmann::json;

json rational_json(const Rational& q);  // "p/q" string

json to_json(const lattice::H2Element& e);
json to_json(const chambers::ChamberSignature& s);
json to_json(const chambers::Chamber& c);
json to_json(const ballmodels::CircleWeights& w);

json algebra_to_json(const gradedalg::PresentedAlgebra& a);
gradedalg::PresentedAlgebra algebra_from_json(const json& j);

json dga_to_json(const dga::DgaSpec& d);
dga::DgaSpec dga_from_json(const json& j, int cap_override = -1);

json to_json(const dga::CohomologyReport& r);
json to_json(const dga::PresentationReport& r);
json to_json(const ballmodels::AbIsomorphismReport& r);
json to_json(const confgeom::Stratum& s);

/// d: degree q -> q+1 in the complement bases, as "row,col,value" lines with a header
/// naming the bases.
std::string differential_csv(const dga::DgaSpec& d, int q);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cpstrata::serialize

#pragma once

#include "hyperspec/exact.hpp"
#include "hyperspec/spectral.hpp"

#include <json.hpp>

#include <string>

namespace hyperspec {

using Json = nlohmann::json;

// Spectrum report object:
//   {"eigenvalues":[{"value":...,"multiplicity":...}], "energy":...,
//    "nullity":..., "spectral_radius":..., "det":"...", "charpoly":["...",...]}
// Exact integers are decimal strings; det/charpoly/nullity appear only when
// known.  A non-empty source (e.g. "closed-form:nsm-spectrum") tags where the
// numbers came from.
Json spectrum_json(const Spectrum& s, const CharPoly* cp = nullptr,
                   const std::string& source = "", double cluster_eps = -1.0);

Json charpoly_json(const CharPoly& cp);

// Human-readable one-per-line rendering of the same data.
std::string spectrum_text(const Spectrum& s, const CharPoly* cp = nullptr,
                          double cluster_eps = -1.0);

std::string format_double(double v);

} // namespace hyperspec

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "invar/certify.hpp"
#include "invar/molien.hpp"
#include "invar/orbits.hpp"

namespace invar {

using Json = nlohmann::ordered_json;

Json analyze_json(const StructureReport& report, const GorensteinStatus& status);
Json molien_json(const MolienResult& result);
Json hilbert_json(int n, std::size_t order, const std::vector<BigRat>& coefficients);
Json gobel_json(int n, std::size_t order, const std::vector<MonomialOrbit>& generators);
Json orbit_dim_json(int n, std::size_t order, const std::vector<std::size_t>& dimensions);
Json certificate_json(const Certificate& cert);
Json gorenstein_json(const GorensteinStatus& status, const StructureReport& report);

std::string analyze_text(const StructureReport& report, const GorensteinStatus& status);
std::string molien_text(const MolienResult& result, int n);
std::string hilbert_text(int n, std::size_t order, const std::vector<BigRat>& coefficients);
std::string gobel_text(int n, std::size_t order, const std::vector<MonomialOrbit>& generators);
std::string orbit_dim_text(int n, std::size_t order, const std::vector<std::size_t>& dimensions);
std::string certificate_text(const Certificate& cert);
std::string gorenstein_text(const GorensteinStatus& status, const StructureReport& report);

/// dump(2) plus a trailing newline; parsing and re-rendering the result is
/// byte-stable.
std::string render(const Json& j);

} // namespace invar

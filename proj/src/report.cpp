#include "hyperspec/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hyperspec {

std::string format_double(double v) {
    if (v == 0)
        v = 0; // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

Json charpoly_json(const CharPoly& cp) {
    Json arr = Json::array();
    for (const auto& c : cp.coeffs)
        arr.push_back(c.str());
    return arr;
}

Json spectrum_json(const Spectrum& s, const CharPoly* cp,
                   const std::string& source, double cluster_eps) {
    Json j;
    Json eig = Json::array();
    for (const auto& c : cluster_spectrum(s, cluster_eps))
        eig.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
    j["eigenvalues"] = std::move(eig);
    j["energy"] = s.energy;
    j["energy_bound"] = s.order() * s.max_residual;
    j["spectral_radius"] = s.spectral_radius;
    if (s.nullity >= 0)
        j["nullity"] = s.nullity;
    if (s.det)
        j["det"] = s.det->str();
    if (cp)
        j["charpoly"] = charpoly_json(*cp);
    if (!source.empty())
        j["source"] = source;
    return j;
}

std::string spectrum_text(const Spectrum& s, const CharPoly* cp, double cluster_eps) {
    std::ostringstream os;
    os << "eigenvalues:";
    for (const auto& c : cluster_spectrum(s, cluster_eps)) {
        os << " " << format_double(c.value);
        if (c.multiplicity > 1)
            os << "(x" << c.multiplicity << ")";
    }
    os << "\n";
    os << "energy: " << format_double(s.energy);
    if (s.max_residual > 0)
        os << " +/- " << format_double(s.order() * s.max_residual);
    os << "\n";
    os << "spectral_radius: " << format_double(s.spectral_radius) << "\n";
    if (s.nullity >= 0)
        os << "nullity: " << s.nullity << "\n";
    if (s.det)
        os << "det: " << s.det->str() << "\n";
    if (cp) {
        os << "charpoly (ascending):";
        for (const auto& c : cp->coeffs)
            os << " " << c.str();
        os << "\n";
    }
    return os.str();
}

} // namespace hyperspec

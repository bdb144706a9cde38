#include "hyperspec/verify.hpp"

#include "hyperspec/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hyperspec {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::match:
        return "match";
    case Verdict::mismatch:
        return "mismatch";
    default:
        return "not-applicable";
    }
}

Json VerificationReport::to_json() const {
    Json j;
    j["theorem_id"] = theorem_id;
    j["instance"] = instance;
    j["verdict"] = to_string(verdict);
    j["max_abs_deviation"] = max_abs_deviation;
    j["tolerance"] = tolerance;
    if (formula_spectrum)
        j["formula_spectrum"] = spectrum_json(*formula_spectrum, nullptr,
                                              "closed-form:" + theorem_id);
    if (oracle_spectrum)
        j["oracle_spectrum"] = spectrum_json(*oracle_spectrum, nullptr, "eigensolver");
    Json ef = Json::array();
    for (const auto& f : exact_fields)
        ef.push_back({{"name", f.name},
                      {"formula", f.formula},
                      {"oracle", f.oracle},
                      {"equal", f.equal}});
    j["exact_fields"] = std::move(ef);
    if (!detail.empty())
        j["detail"] = detail;
    return j;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "theorem: " << theorem_id << "\n";
    os << "instance: " << instance << "\n";
    os << "verdict: " << to_string(verdict) << "\n";
    if (verdict != Verdict::not_applicable) {
        os << "max_abs_deviation: " << format_double(max_abs_deviation)
           << " (tolerance " << format_double(tolerance) << ")\n";
        if (formula_spectrum)
            os << "formula:\n" << spectrum_text(*formula_spectrum);
        if (oracle_spectrum)
            os << "oracle:\n" << spectrum_text(*oracle_spectrum);
        for (const auto& f : exact_fields)
            os << "exact " << f.name << ": formula=" << f.formula
               << " oracle=" << f.oracle << (f.equal ? " (equal)" : " (DIFFER)")
               << "\n";
    }
    if (!detail.empty())
        os << "detail: " << detail << "\n";
    return os.str();
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = {
        "nsm-spectrum",   "ns-spectrum", "nsm-energy",
        "nsm-pairing",    "nsm-det-radius", "nns-spectrum",
        "nns-energy",     "vjoin-spectrum", "sjoin-spectrum",
    };
    return ids;
}

namespace {

std::string default_instance_name(const Hypergraph& h) {
    std::ostringstream os;
    os << "n=" << h.n << " k=" << h.k << " |E|=" << h.edges.size();
    return os.str();
}

double effective_tol(const VerifyOptions& opt, const Spectrum& oracle) {
    return opt.tol >= 0 ? opt.tol : 1e-8 * (1 + oracle.spectral_radius);
}

void finish(VerificationReport& rep) {
    bool exact_ok = std::all_of(rep.exact_fields.begin(), rep.exact_fields.end(),
                                [](const ExactField& f) { return f.equal; });
    rep.verdict = (rep.max_abs_deviation <= rep.tolerance && exact_ok)
                      ? Verdict::match
                      : Verdict::mismatch;
    if (rep.verdict == Verdict::mismatch && rep.formula_spectrum &&
        rep.oracle_spectrum && rep.detail.empty()) {
        std::ostringstream os;
        os << "multiset diff (formula vs oracle):";
        const auto& f = rep.formula_spectrum->values;
        const auto& o = rep.oracle_spectrum->values;
        for (std::size_t i = 0; i < std::max(f.size(), o.size()); ++i) {
            double fv = i < f.size() ? f[i] : std::nan("");
            double ov = i < o.size() ? o[i] : std::nan("");
            if (!(std::fabs(fv - ov) <= rep.tolerance))
                os << " [" << i << "] " << format_double(fv) << " vs "
                   << format_double(ov);
        }
        rep.detail = os.str();
    }
}

ExactField int_field(const std::string& name, const BigInt& formula,
                     const BigInt& oracle) {
    return {name, formula.str(), oracle.str(), formula == oracle};
}

ExactField matrix_field(const std::string& name, const IntMatrix& formula,
                        const IntMatrix& oracle) {
    if (formula == oracle)
        return {name, "equal", "equal", true};
    std::string where = "order mismatch";
    if (formula.order() == oracle.order()) {
        [&] {
            for (int i = 0; i < formula.order(); ++i)
                for (int j = 0; j < formula.order(); ++j)
                    if (formula.at(i, j) != oracle.at(i, j)) {
                        where = "first differs at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")";
                        return;
                    }
        }();
    }
    return {name, "block formula", where, false};
}

VerificationReport not_applicable(const std::string& id, const std::string& inst,
                                  const std::string& why) {
    VerificationReport rep;
    rep.theorem_id = id;
    rep.instance = inst;
    rep.verdict = Verdict::not_applicable;
    rep.detail = why;
    return rep;
}

VerificationReport verify_nsm_family(const std::string& id, const Hypergraph& h,
                                     const VerifyOptions& opt) {
    int m = (id == "ns-spectrum") ? 1 : opt.m;
    VerificationReport rep;
    rep.theorem_id = id;
    rep.instance = opt.instance_name.empty() ? default_instance_name(h)
                                             : opt.instance_name;
    if (m < 1)
        return not_applicable(id, rep.instance, "m must be at least 1");

    IntMatrix a = adjacency_matrix(h);
    Spectrum g = eigenvalues(a);
    Hypergraph built = ns_m(h, m);
    IntMatrix a_built = adjacency_matrix(built);
    Spectrum oracle = eigenvalues(a_built);
    rep.tolerance = effective_tol(opt, oracle);
    rep.oracle_spectrum = oracle;

    if (id == "nsm-energy") {
        double formula = ns_m_energy_formula(g.energy, m, h.k);
        rep.formula_spectrum = ns_m_spectrum_formula(g, m, h.k, h.n);
        rep.max_abs_deviation = std::fabs(formula - oracle.energy);
        rep.detail = "formula energy " + format_double(formula) +
                     ", oracle energy " + format_double(oracle.energy);
    } else if (id == "nsm-pairing") {
        rep.formula_spectrum = ns_m_spectrum_formula(g, m, h.k, h.n);
        rep.max_abs_deviation = multiset_deviation(*rep.formula_spectrum, oracle);
        bool ok = ns_pairing_check(oracle, g, m, h.k, rep.tolerance);
        rep.exact_fields.push_back(
            {"pairing", "holds", ok ? "holds" : "violated", ok});
    } else if (id == "nsm-det-radius") {
        DetRadiusRelations rel = nsm_det_radius_relations(g, m, h.k);
        rep.max_abs_deviation = std::fabs(rel.radius - oracle.spectral_radius);
        if (rel.det && oracle.det)
            rep.exact_fields.push_back(int_field("det", *rel.det, *oracle.det));
        rep.detail = "formula radius " + format_double(rel.radius) +
                     ", oracle radius " + format_double(oracle.spectral_radius);
    } else { // nsm-spectrum / ns-spectrum
        rep.formula_spectrum = ns_m_spectrum_formula(g, m, h.k, h.n);
        rep.max_abs_deviation = multiset_deviation(*rep.formula_spectrum, oracle);
        rep.exact_fields.push_back(matrix_field(
            "block_matrix", ns_m_matrix(a, m, h.k), a_built));
        rep.exact_fields.push_back(matrix_field(
            "kronecker", kronecker(splitting_matrix(m, h.k), a), a_built));
        if (rep.formula_spectrum->nullity >= 0)
            rep.exact_fields.push_back(
                int_field("nullity", BigInt(rep.formula_spectrum->nullity),
                          BigInt(oracle.nullity)));
    }
    finish(rep);
    return rep;
}

VerificationReport verify_nns_family(const std::string& id, const Hypergraph& h,
                                     const VerifyOptions& opt) {
    std::string inst = opt.instance_name.empty() ? default_instance_name(h)
                                                 : opt.instance_name;
    if (h.k < 3)
        return not_applicable(id, inst, "theorem requires k >= 3");
    DegreeProfile prof = degree_profile(h);
    if (!prof.regular_degree)
        return not_applicable(id, inst, "non-regular");
    int r = *prof.regular_degree;

    VerificationReport rep;
    rep.theorem_id = id;
    rep.instance = inst;
    IntMatrix a = adjacency_matrix(h);
    Spectrum g = eigenvalues(a);
    Hypergraph built = nns(h);
    IntMatrix a_built = adjacency_matrix(built);
    Spectrum oracle = eigenvalues(a_built);
    rep.tolerance = effective_tol(opt, oracle);
    rep.oracle_spectrum = oracle;

    if (id == "nns-energy") {
        double formula = nns_energy_formula(g, h.n, h.k, r);
        rep.max_abs_deviation = std::fabs(formula - oracle.energy);
        rep.detail = "formula energy " + format_double(formula) +
                     ", oracle energy " + format_double(oracle.energy);
    } else {
        rep.formula_spectrum = nns_spectrum_formula(g, h.n, h.k, r);
        rep.max_abs_deviation = multiset_deviation(*rep.formula_spectrum, oracle);
        rep.exact_fields.push_back(
            matrix_field("block_matrix", nns_matrix(a, h.n, h.k), a_built));
    }
    finish(rep);
    return rep;
}

VerificationReport verify_join_family(const std::string& id, const Hypergraph& h,
                                      const VerifyOptions& opt) {
    std::string inst = opt.instance_name.empty() ? default_instance_name(h)
                                                 : opt.instance_name;
    Hypergraph second =
        opt.second ? *opt.second : complete_hypergraph(h.k, h.k);
    if (second.k != h.k)
        return not_applicable(id, inst, "join factors have different uniformity");
    DegreeProfile p1 = degree_profile(h);
    DegreeProfile p2 = degree_profile(second);
    if (!p1.regular_degree || !p2.regular_degree)
        return not_applicable(id, inst, "non-regular");
    int r1 = *p1.regular_degree, r2 = *p2.regular_degree;
    bool s_variant = (id == "sjoin-spectrum");

    VerificationReport rep;
    rep.theorem_id = id;
    rep.instance = inst + (opt.second ? " joined with second factor"
                                      : " joined with complete(k,k)");
    IntMatrix a1 = adjacency_matrix(h);
    IntMatrix a2 = adjacency_matrix(second);
    Spectrum g1 = eigenvalues(a1);
    Spectrum g2 = eigenvalues(a2);
    Hypergraph built = s_variant ? s_join(h, second) : v_join(h, second);
    IntMatrix a_built = adjacency_matrix(built);
    Spectrum oracle = eigenvalues(a_built);
    rep.tolerance = effective_tol(opt, oracle);
    rep.oracle_spectrum = oracle;

    rep.formula_spectrum =
        s_variant
            ? sjoin_spectrum_formula(g1, g2, h.n, second.n, h.k, r1, r2)
            : vjoin_spectrum_formula(g1, g2, h.n, second.n, h.k, r1, r2);
    rep.max_abs_deviation = multiset_deviation(*rep.formula_spectrum, oracle);
    IntMatrix block = s_variant ? sjoin_matrix(a1, a2, h.n, second.n, h.k)
                                : vjoin_matrix(a1, a2, h.n, second.n, h.k);
    rep.exact_fields.push_back(matrix_field("block_matrix", block, a_built));
    if (g1.nullity > 0) // singular base propagates to the join
        rep.exact_fields.push_back({"singular_join",
                                    "nullity >= 1",
                                    "nullity = " + std::to_string(oracle.nullity),
                                    oracle.nullity >= 1});
    finish(rep);
    return rep;
}

} // namespace

VerificationReport verify(const std::string& theorem_id, const Hypergraph& h,
                          const VerifyOptions& opt) {
    if (auto err = validate(h))
        throw std::invalid_argument("verify: invalid instance: " + *err);
    if (theorem_id == "nsm-spectrum" || theorem_id == "ns-spectrum" ||
        theorem_id == "nsm-energy" || theorem_id == "nsm-pairing" ||
        theorem_id == "nsm-det-radius")
        return verify_nsm_family(theorem_id, h, opt);
    if (theorem_id == "nns-spectrum" || theorem_id == "nns-energy")
        return verify_nns_family(theorem_id, h, opt);
    if (theorem_id == "vjoin-spectrum" || theorem_id == "sjoin-spectrum")
        return verify_join_family(theorem_id, h, opt);
    throw std::invalid_argument("verify: unknown theorem id '" + theorem_id + "'");
}

std::vector<std::pair<std::string, Hypergraph>> desk_corpus() {
    std::vector<std::pair<std::string, Hypergraph>> corpus;
    for (int k = 3; k <= 4; ++k)
        for (int n = k; n <= 7; ++n)
            corpus.emplace_back("complete(" + std::to_string(n) + "," +
                                    std::to_string(k) + ")",
                                complete_hypergraph(n, k));
    corpus.emplace_back("fig3", fig3());
    corpus.emplace_back("fig2a", fig2a());
    auto reg632 = enumerate_regular(6, 3, 2);
    for (std::size_t i = 0; i < reg632.size(); ++i)
        corpus.emplace_back("regular(6,3,2)#" + std::to_string(i), reg632[i]);
    auto reg433 = enumerate_regular(4, 3, 3);
    for (std::size_t i = 0; i < reg433.size(); ++i)
        corpus.emplace_back("regular(4,3,3)#" + std::to_string(i), reg433[i]);
    return corpus;
}

} // namespace hyperspec

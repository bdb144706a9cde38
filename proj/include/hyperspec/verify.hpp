#pragma once

#include "hyperspec/closed_forms.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hyperspec {

// An exactly-compared report field (integers or structural checks).
struct ExactField {
    std::string name;
    std::string formula; // value predicted by the closed form / rule
    std::string oracle;  // value computed independently
    bool equal = false;
};

enum class Verdict { match, mismatch, not_applicable };

std::string to_string(Verdict v);

struct VerificationReport {
    std::string theorem_id;
    std::string instance;
    std::optional<Spectrum> formula_spectrum;
    std::optional<Spectrum> oracle_spectrum;
    double max_abs_deviation = 0.0;
    double tolerance = 0.0;
    Verdict verdict = Verdict::not_applicable;
    std::vector<ExactField> exact_fields;
    std::string detail; // gate reasons / multiset diff on mismatch

    Json to_json() const;
    std::string to_text() const;
};

struct VerifyOptions {
    int m = 1;                         // copy count for the NS_m theorems
    std::optional<Hypergraph> second;  // join partner; default complete(k,k)
    double tol = -1.0;                 // < 0: 1e-8 * (1 + oracle radius)
    std::string instance_name;         // free-form label for the report
};

// Known theorem ids: nsm-spectrum, ns-spectrum, nsm-energy, nsm-pairing,
// nsm-det-radius, nns-spectrum, nns-energy, vjoin-spectrum, sjoin-spectrum.
const std::vector<std::string>& theorem_ids();

// Builds the construction, eigensolves it (oracle), evaluates the closed
// form, and compares; block matrices are cross-checked exactly.  Instances
// that fail a theorem's hypotheses yield verdict not-applicable.
// Throws std::invalid_argument on an unknown theorem id.
VerificationReport verify(const std::string& theorem_id, const Hypergraph& h,
                          const VerifyOptions& opt = {});

// The desk-scale verification corpus: complete hypergraphs (k = 3,4 with
// k <= n <= 7), the two named instances, and the full (6,3,2) and (4,3,3)
// regular enumerations.
std::vector<std::pair<std::string, Hypergraph>> desk_corpus();

} // namespace hyperspec

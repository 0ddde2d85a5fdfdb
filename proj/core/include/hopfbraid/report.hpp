#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfbraid {

using Json = nlohmann::ordered_json;

/// One identity evaluated by a suite.  residual_valuation carries the
/// h-adic valuation of the residual when that is the natural measure
/// (value == order means "exact mod h^N"); exact integer checks leave it
/// at -1 and put the counts in the note.
struct CheckResult {
    std::string name;
    std::string inputs;
    bool pass = false;
    int residual_valuation = -1;
    int required = -1;
    std::string note;
    Json payload; // optional structured detail (e.g. a certificate)

    Json to_json() const;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool overall() const;
    int passed() const;
    Json to_json() const;
    void write_text(std::ostream& os) const;

    CheckResult& add(CheckResult r) {
        checks.push_back(std::move(r));
        return checks.back();
    }
    /// Convenience for valuation-style checks.
    CheckResult& add_valuation(const std::string& name, const std::string& inputs,
                               int residual, int required, const std::string& note = "");
};

/// Per-n h-adic valuations of delta_n(a), certifying membership in the
/// Drinfeld subalgebra up to the truncation order.  certified_order is the
/// largest n0 with valuation(delta_n) >= n for all n <= n0; the verdict is
/// refuted as soon as some recorded valuation drops below its n.  Nothing
/// is ever claimed for n beyond the truncation order.
struct MembershipCertificate {
    std::string element;
    int order = 0;                                // truncation order N
    std::vector<std::pair<int, int>> valuations;  // (n, valuation of delta_n)
    int certified_order = 0;
    bool certified = false;

    Json to_json() const;
    std::string summary() const; // single-line human-readable form
};

} // namespace hopfbraid

#include "hopfbraid/report.hpp"

#include <ostream>
#include <sstream>

namespace hopfbraid {

Json CheckResult::to_json() const {
    Json j;
    j["identity"] = name;
    j["inputs"] = inputs;
    j["pass"] = pass;
    if (residual_valuation >= 0) {
        j["residual_valuation"] = residual_valuation;
        j["required"] = required;
    }
    if (!note.empty())
        j["note"] = note;
    if (!payload.is_null())
        j["detail"] = payload;
    return j;
}

bool VerificationReport::overall() const {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

int VerificationReport::passed() const {
    int n = 0;
    for (const auto& c : checks)
        if (c.pass)
            ++n;
    return n;
}

Json VerificationReport::to_json() const {
    Json j;
    j["suite"] = suite;
    j["overall"] = overall();
    j["checks"] = Json::array();
    for (const auto& c : checks)
        j["checks"].push_back(c.to_json());
    return j;
}

void VerificationReport::write_text(std::ostream& os) const {
    os << "suite " << suite << ": " << (overall() ? "PASS" : "FAIL") << " (" << passed() << "/"
       << checks.size() << " checks)\n";
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
        if (!c.inputs.empty())
            os << " (" << c.inputs << ")";
        if (c.residual_valuation >= 0)
            os << " residual valuation " << c.residual_valuation << " (need >= " << c.required
               << ")";
        if (!c.note.empty())
            os << " -- " << c.note;
        os << "\n";
    }
}

CheckResult& VerificationReport::add_valuation(const std::string& name, const std::string& inputs,
                                               int residual, int required,
                                               const std::string& note) {
    CheckResult r;
    r.name = name;
    r.inputs = inputs;
    r.residual_valuation = residual;
    r.required = required;
    r.pass = residual >= required;
    r.note = note;
    return add(std::move(r));
}

Json MembershipCertificate::to_json() const {
    Json j;
    j["element"] = element;
    j["N"] = order;
    Json vals;
    for (const auto& [n, v] : valuations)
        vals[std::to_string(n)] = v;
    j["valuations"] = vals;
    j["certified_order"] = certified_order;
    j["verdict"] = certified ? "certified" : "refuted";
    return j;
}

std::string MembershipCertificate::summary() const {
    std::ostringstream os;
    os << element << ": " << (certified ? "certified" : "refuted") << " to order "
       << certified_order << " of N=" << order << " [";
    for (size_t i = 0; i < valuations.size(); ++i) {
        if (i)
            os << " ";
        os << "v(d" << valuations[i].first << ")=" << valuations[i].second;
    }
    os << "]";
    return os.str();
}

} // namespace hopfbraid

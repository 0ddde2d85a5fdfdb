#pragma once

#include "hopfbraid/braiding.hpp"
#include "hopfbraid/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfbraid {

enum class OutputMode { Text, Json };

struct RunConfig {
    int order = 5;
    InstanceKind instance = InstanceKind::Uhsl2;
    std::vector<std::string> suites; // empty selects all, in canonical order
    std::string sample_file;         // empty uses the embedded defaults
    std::string json_path;           // write the JSON report here when set
    OutputMode output = OutputMode::Text;
    int max_rank = 3; // ambient size for the subset-indexed suites
    int max_n = 6;    // exhaustive range of the subset-sum nullity scan
    int max_t = 12;   // exhaustive range of the binomial-sum identities

    static const std::vector<std::string>& suite_names();
    /// Resolves aliases and validates names; throws on unknown suites,
    /// order < 2 or max_rank < 2.
    std::vector<std::string> validated_suites() const;

    HopfAlgebra make_algebra() const;
    Json to_json() const;
};

/// All PBW monomials of total degree <= deg as elements.
std::vector<AlgebraElement> monomials_up_to_degree(const HopfAlgebra& alg, unsigned deg);

VerificationReport hopf_suite(const HopfAlgebra& alg);
VerificationReport quasitriangular_suite(const HopfAlgebra& alg);
VerificationReport lemma31_suite(const HopfAlgebra& alg, int max_rank);
VerificationReport lemma32_suite(const HopfAlgebra& alg, const SampleSet& samples, int max_rank);
VerificationReport lemma33_suite(int max_t, int max_s = 8);
VerificationReport eprime_suite(int max_n);
VerificationReport hprime_suite(const HopfAlgebra& alg, const SampleSet& samples);
VerificationReport theorem21_suite(const HopfAlgebra& alg, const SampleSet& samples);
VerificationReport classical_suite(const HopfAlgebra& alg);
VerificationReport braid_suite(const HopfAlgebra& alg, const SampleSet& samples, int max_rank);

struct SuiteOutcome {
    VerificationReport report;
    double seconds = 0.0;
};

struct RunResult {
    std::vector<SuiteOutcome> outcomes;
    bool overall = true;

    /// Deterministic JSON: byte-identical across runs with equal config
    /// (wall-clock timings are reported in text output only).
    Json to_json(const RunConfig& config) const;
    void write_text(std::ostream& os) const;
};

RunResult run_suites(const RunConfig& config);

} // namespace hopfbraid

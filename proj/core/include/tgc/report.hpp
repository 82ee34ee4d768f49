#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgc/center.hpp"
#include "tgc/cocycle.hpp"
#include "tgc/problem.hpp"
#include "tgc/solver.hpp"

namespace tgc {

// Settings after merging problem-file settings with command line flags
// (flags win). The oracle mode is derived from the explicit method list:
// listing "oracle" forces enumeration, an explicit list without it disables
// enumeration, no list means run it when feasible.
struct EffectiveSettings {
    std::uint64_t enumeration_cap = 1000000;
    OracleMode oracle = OracleMode::if_feasible;
    std::optional<std::vector<std::string>> methods_explicit;
    bool json_output = false;
};

EffectiveSettings resolve_settings(const ProblemSettings& file_settings,
                                   std::optional<std::uint64_t> cli_cap,
                                   const std::optional<std::vector<std::string>>& cli_methods,
                                   bool cli_json);

struct PrimeAnalysis {
    PGroupShape shape;
    PairingMatrix pairing;
    NormalizedMatrix normalized;
    KernelDescription kern;
    CenterReport center;
};

struct Analysis {
    std::vector<PrimeAnalysis> primes;
    CombinedReport combined;
    double elapsed_ms = 0.0;
};

Analysis run_analysis(const std::vector<ValidatedPrime>& primes, const EffectiveSettings& s);

// The JSON report embeds a canonicalized copy of the inputs under
// "input_echo"; feeding that object back as a problem file reproduces the
// report byte for byte except for "timing_ms".
std::string render_analysis_json(const Analysis& a, const EffectiveSettings& s);
std::string render_analysis_text(const Analysis& a);

std::string render_normalize_json(const std::vector<ValidatedPrime>& primes);
std::string render_normalize_text(const std::vector<ValidatedPrime>& primes);

std::string render_kernel_json(const std::vector<ValidatedPrime>& primes);
std::string render_kernel_text(const std::vector<ValidatedPrime>& primes);

std::string render_oracle_json(const std::vector<ValidatedPrime>& primes, std::uint64_t cap);
std::string render_oracle_text(const std::vector<ValidatedPrime>& primes, std::uint64_t cap);

std::string render_cocycle_check_json(const CocycleProblem& problem, const PairingMatrix& derived,
                                      std::uint64_t triples_checked);
std::string render_cocycle_check_text(const CocycleProblem& problem, const PairingMatrix& derived,
                                      std::uint64_t triples_checked);

}  // namespace tgc

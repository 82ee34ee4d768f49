#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgc/group.hpp"
#include "tgc/pairing.hpp"

namespace tgc {

// One prime component as written in a problem file, before validation.
struct PrimeInstance {
    std::int64_t p = 0;
    std::vector<Block> blocks;
    std::vector<std::vector<std::int64_t>> matrix;
};

struct ProblemSettings {
    std::optional<std::uint64_t> max_enumeration;
    std::optional<std::vector<std::string>> methods;  // subset of theorem/kernel/oracle
    std::optional<std::string> output;                // "text" or "json"
};

struct ProblemFile {
    std::vector<PrimeInstance> primes;
    ProblemSettings settings;
};

// Parse errors carry the JSON location or the offending field.
ProblemFile parse_problem(const std::string& json_text);
ProblemFile load_problem(const std::string& path);

struct ValidatedPrime {
    PGroupShape shape;
    PairingMatrix pairing;
};

// Validates every component and rejects repeated primes.
std::vector<ValidatedPrime> validate_problem(const ProblemFile& problem);

// Cocycle-check inputs live in their own single-prime format.
struct CocycleProblem {
    std::int64_t p = 0;
    std::vector<Block> blocks;
    std::vector<std::vector<std::int64_t>> table;  // |G| rows of |G| exponents
};

CocycleProblem parse_cocycle_problem(const std::string& json_text);
CocycleProblem load_cocycle_problem(const std::string& path);

}  // namespace tgc

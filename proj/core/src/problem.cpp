#include "tgc/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tgc/errors.hpp"

namespace tgc {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::int64_t require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InputError(where + " must be an integer");
    return j.get<std::int64_t>();
}

std::vector<Block> parse_blocks(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) {
        throw InputError(where + ".blocks must be a nonempty array of [exponent, multiplicity] pairs");
    }
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& b = j[i];
        std::string at = where + ".blocks[" + std::to_string(i) + "]";
        if (!b.is_array() || b.size() != 2) {
            throw InputError(at + " must be an [exponent, multiplicity] pair");
        }
        std::int64_t e = require_int(b[0], at + "[0]");
        std::int64_t m = require_int(b[1], at + "[1]");
        if (e < 1 || e > 62 || m < 1 || m > 4096) {
            throw InputError(at + " is out of range");
        }
        blocks.push_back(Block{static_cast<int>(e), static_cast<int>(m)});
    }
    return blocks;
}

std::vector<std::vector<std::int64_t>> parse_matrix(const json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + " must be an array of rows");
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array()) {
            throw InputError(where + "[" + std::to_string(r) + "] must be an array");
        }
        std::vector<std::int64_t> row;
        for (std::size_t c = 0; c < j[r].size(); ++c) {
            row.push_back(require_int(j[r][c], where + "[" + std::to_string(r) + "][" +
                                                    std::to_string(c) + "]"));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

ProblemFile parse_problem(const std::string& json_text) {
    json root = parse_text(json_text);
    if (!root.is_object()) throw InputError("problem file must be a JSON object");
    if (!root.contains("primes") || !root["primes"].is_array() || root["primes"].empty()) {
        throw InputError("problem file needs a nonempty \"primes\" array");
    }

    ProblemFile out;
    const json& primes = root["primes"];
    for (std::size_t i = 0; i < primes.size(); ++i) {
        std::string where = "primes[" + std::to_string(i) + "]";
        const json& entry = primes[i];
        if (!entry.is_object()) throw InputError(where + " must be an object");
        if (!entry.contains("p")) throw InputError(where + " is missing \"p\"");
        if (!entry.contains("blocks")) throw InputError(where + " is missing \"blocks\"");
        if (!entry.contains("matrix")) throw InputError(where + " is missing \"matrix\"");
        PrimeInstance inst;
        inst.p = require_int(entry["p"], where + ".p");
        inst.blocks = parse_blocks(entry["blocks"], where);
        inst.matrix = parse_matrix(entry["matrix"], where + ".matrix");
        out.primes.push_back(std::move(inst));
    }

    if (root.contains("settings")) {
        const json& s = root["settings"];
        if (!s.is_object()) throw InputError("settings must be an object");
        if (s.contains("max_enumeration")) {
            std::int64_t v = require_int(s["max_enumeration"], "settings.max_enumeration");
            if (v < 1) throw InputError("settings.max_enumeration must be >= 1");
            out.settings.max_enumeration = static_cast<std::uint64_t>(v);
        }
        if (s.contains("methods")) {
            if (!s["methods"].is_array()) throw InputError("settings.methods must be an array");
            std::vector<std::string> methods;
            for (const auto& m : s["methods"]) {
                if (!m.is_string()) throw InputError("settings.methods entries must be strings");
                std::string name = m.get<std::string>();
                if (name != "theorem" && name != "kernel" && name != "oracle") {
                    throw InputError("unknown method \"" + name + "\"");
                }
                methods.push_back(std::move(name));
            }
            out.settings.methods = std::move(methods);
        }
        if (s.contains("output")) {
            if (!s["output"].is_string()) throw InputError("settings.output must be a string");
            std::string fmt = s["output"].get<std::string>();
            if (fmt != "text" && fmt != "json") {
                throw InputError("settings.output must be \"text\" or \"json\"");
            }
            out.settings.output = std::move(fmt);
        }
    }
    return out;
}

ProblemFile load_problem(const std::string& path) { return parse_problem(read_file(path)); }

std::vector<ValidatedPrime> validate_problem(const ProblemFile& problem) {
    std::set<std::int64_t> seen;
    std::vector<ValidatedPrime> out;
    for (const auto& inst : problem.primes) {
        if (!seen.insert(inst.p).second) throw DuplicatePrime(inst.p);
        PGroupShape shape = PGroupShape::validate(inst.p, inst.blocks);
        PairingMatrix pairing = PairingMatrix::validate(shape, inst.matrix);
        out.push_back(ValidatedPrime{std::move(shape), std::move(pairing)});
    }
    return out;
}

CocycleProblem parse_cocycle_problem(const std::string& json_text) {
    json root = parse_text(json_text);
    if (!root.is_object()) throw InputError("cocycle file must be a JSON object");
    for (const char* field : {"p", "blocks", "cocycle"}) {
        if (!root.contains(field)) {
            throw InputError(std::string("cocycle file is missing \"") + field + "\"");
        }
    }
    CocycleProblem out;
    out.p = require_int(root["p"], "p");
    out.blocks = parse_blocks(root["blocks"], "cocycle problem");
    out.table = parse_matrix(root["cocycle"], "cocycle");
    return out;
}

CocycleProblem load_cocycle_problem(const std::string& path) {
    return parse_cocycle_problem(read_file(path));
}

}  // namespace tgc

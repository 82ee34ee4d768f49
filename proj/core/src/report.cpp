#include "tgc/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "tgc/errors.hpp"

namespace tgc {

namespace {

using nlohmann::json;

OracleMode oracle_mode_from(const std::optional<std::vector<std::string>>& methods) {
    if (!methods) return OracleMode::if_feasible;
    bool oracle = std::find(methods->begin(), methods->end(), "oracle") != methods->end();
    return oracle ? OracleMode::always : OracleMode::never;
}

// Emits a count as an exact factored string plus decimal, and as a plain
// number whenever it fits 64 bits.
void put_count(json& obj, const std::string& key, const Count& c) {
    if (auto v = c.as_u64()) obj[key] = *v;
    obj[key + "_factored"] = c.to_factored();
    obj[key + "_decimal"] = c.to_decimal();
}

json blocks_to_json(const PGroupShape& shape) {
    json out = json::array();
    for (const auto& b : shape.blocks()) out.push_back(json::array({b.exponent, b.multiplicity}));
    return out;
}

json grid_to_json(const std::vector<std::vector<std::int64_t>>& rows) {
    json out = json::array();
    for (const auto& r : rows) out.push_back(r);
    return out;
}

json coords_to_json(const std::vector<std::int64_t>& coords) {
    return json(coords);
}

json echo_problem(const Analysis& a, const EffectiveSettings& s) {
    json primes = json::array();
    for (const auto& pa : a.primes) {
        json entry;
        entry["p"] = pa.shape.prime();
        entry["blocks"] = blocks_to_json(pa.shape);
        entry["matrix"] = grid_to_json(pa.pairing.rows());
        primes.push_back(std::move(entry));
    }
    json settings;
    settings["max_enumeration"] = s.enumeration_cap;
    if (s.methods_explicit) {
        json methods = json::array();
        for (const auto& m : *s.methods_explicit) methods.push_back(m);
        settings["methods"] = std::move(methods);
    }
    json out;
    out["primes"] = std::move(primes);
    out["settings"] = std::move(settings);
    return out;
}

json prime_to_json(const PrimeAnalysis& pa) {
    json out;
    out["p"] = pa.shape.prime();
    out["blocks"] = blocks_to_json(pa.shape);
    put_count(out, "group_order", pa.shape.order());
    out["pairing_matrix"] = grid_to_json(pa.pairing.rows());
    out["normalized_matrix"] = grid_to_json(pa.normalized.matrix().rows());
    out["normalized_modulus"] = pa.normalized.modulus_value();

    json kern;
    put_count(kern, "size", pa.kern.size());
    json gens = json::array();
    for (const auto& g : pa.kern.generators) gens.push_back(coords_to_json(g.coords));
    kern["generators"] = std::move(gens);
    if (pa.kern.per_variable) kern["per_variable_moduli"] = *pa.kern.per_variable;
    out["kernel"] = std::move(kern);

    json center;
    center["trivial"] = pa.center.trivial;
    put_count(center, "rank", pa.center.rank());
    json ggens = json::array();
    for (const auto& g : pa.center.greg_generators) ggens.push_back(coords_to_json(g.coords));
    center["greg_generators"] = std::move(ggens);
    json agreed = json::array();
    for (Method m : pa.center.methods_agreed) agreed.push_back(method_name(m));
    center["methods_agreed"] = std::move(agreed);
    out["center"] = std::move(center);
    return out;
}

std::string shape_text(const PGroupShape& shape) {
    std::ostringstream os;
    for (std::size_t i = 0; i < shape.blocks().size(); ++i) {
        const Block& b = shape.blocks()[i];
        if (i) os << " (+) ";
        os << "(Z/" << pow_i64(shape.prime(), b.exponent) << ")";
        if (b.multiplicity > 1) os << "^" << b.multiplicity;
    }
    return os.str();
}

void print_grid(std::ostringstream& os, const std::vector<std::vector<std::int64_t>>& rows,
                const std::string& indent) {
    std::size_t width = 1;
    for (const auto& r : rows) {
        for (auto v : r) width = std::max(width, std::to_string(v).size());
    }
    for (const auto& r : rows) {
        os << indent << "[";
        for (auto v : r) {
            std::string cell = std::to_string(v);
            os << " " << std::string(width - cell.size(), ' ') << cell;
        }
        os << " ]\n";
    }
}

void print_kernel(std::ostringstream& os, const KernelDescription& k, std::int64_t lift_modulus) {
    os << "  kernel: size " << k.size().to_decimal();
    if (!k.size().as_u64() || k.size().to_decimal() != k.size().to_factored()) {
        os << " = " << k.size().to_factored();
    }
    os << "\n";
    if (k.per_variable) {
        for (std::size_t s = 0; s < k.per_variable->size(); ++s) {
            std::int64_t m = (*k.per_variable)[s];
            if (m == 1) {
                os << "    x" << (s + 1) << " free (mod " << lift_modulus << ")\n";
            } else {
                os << "    x" << (s + 1) << " == 0 (mod " << m << ")\n";
            }
        }
    } else {
        for (const auto& g : k.generators) {
            os << "    generator (";
            for (std::size_t s = 0; s < g.coords.size(); ++s) {
                if (s) os << ", ";
                os << g.coords[s];
            }
            os << ")\n";
        }
    }
}

void print_prime_header(std::ostringstream& os, const PGroupShape& shape) {
    os << "prime " << shape.prime() << ": G = " << shape_text(shape)
       << ", |G| = " << shape.order().to_decimal() << "\n";
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

EffectiveSettings resolve_settings(const ProblemSettings& file_settings,
                                   std::optional<std::uint64_t> cli_cap,
                                   const std::optional<std::vector<std::string>>& cli_methods,
                                   bool cli_json) {
    EffectiveSettings out;
    if (file_settings.max_enumeration) out.enumeration_cap = *file_settings.max_enumeration;
    if (cli_cap) out.enumeration_cap = *cli_cap;
    out.methods_explicit = cli_methods ? cli_methods : file_settings.methods;
    if (out.methods_explicit) {
        // Normalize: sorted, unique, validated.
        auto& m = *out.methods_explicit;
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
        for (const auto& name : m) {
            if (name != "theorem" && name != "kernel" && name != "oracle") {
                throw InputError("unknown method \"" + name + "\"");
            }
        }
    }
    out.oracle = oracle_mode_from(out.methods_explicit);
    out.json_output = cli_json || (file_settings.output && *file_settings.output == "json");
    return out;
}

Analysis run_analysis(const std::vector<ValidatedPrime>& primes, const EffectiveSettings& s) {
    auto start = std::chrono::steady_clock::now();
    AnalyzeOptions options{s.enumeration_cap, s.oracle};

    Analysis out;
    std::vector<CenterReport> reports;
    for (const auto& vp : primes) {
        NormalizedMatrix scaled = normalize(vp.pairing);
        KernelDescription k = kernel(scaled);
        CenterReport report = analyze(vp.shape, vp.pairing, options);
        reports.push_back(report);
        out.primes.push_back(PrimeAnalysis{vp.shape, vp.pairing, std::move(scaled), std::move(k),
                                           std::move(report)});
    }
    out.combined = tensor_combine(reports);
    out.elapsed_ms = elapsed_since(start);
    return out;
}

std::string render_analysis_json(const Analysis& a, const EffectiveSettings& s) {
    json root;
    json primes = json::array();
    for (const auto& pa : a.primes) primes.push_back(prime_to_json(pa));
    root["primes"] = std::move(primes);

    json combined;
    combined["trivial"] = a.combined.trivial;
    put_count(combined, "rank", a.combined.rank);
    json gens = json::array();
    for (const auto& g : a.combined.embedded_generators) gens.push_back(json(g));
    combined["embedded_generators"] = std::move(gens);
    root["combined"] = std::move(combined);

    root["input_echo"] = echo_problem(a, s);
    root["timing_ms"] = a.elapsed_ms;
    return root.dump(2) + "\n";
}

std::string render_analysis_text(const Analysis& a) {
    std::ostringstream os;
    for (const auto& pa : a.primes) {
        print_prime_header(os, pa.shape);
        os << "  pairing matrix (canonical exponents):\n";
        print_grid(os, pa.pairing.rows(), "    ");
        os << "  normalized matrix over Z/" << pa.normalized.modulus_value() << ":\n";
        print_grid(os, pa.normalized.matrix().rows(), "    ");
        print_kernel(os, pa.kern, pa.normalized.modulus_value());
        os << "  center rank: " << pa.center.rank().to_decimal();
        if (pa.center.rank().to_factored() != pa.center.rank().to_decimal()) {
            os << " = " << pa.center.rank().to_factored();
        }
        os << (pa.center.trivial ? " (trivial)" : "") << "\n";
        os << "  G_reg generators: ";
        if (pa.center.trivial) {
            os << "{identity}";
        } else {
            bool first = true;
            for (const auto& g : pa.center.greg_generators) {
                if (!first) os << ", ";
                first = false;
                os << "(";
                for (std::size_t i = 0; i < g.coords.size(); ++i) {
                    if (i) os << ", ";
                    os << g.coords[i];
                }
                os << ")";
            }
        }
        os << "\n  methods agree: ";
        bool first = true;
        for (Method m : pa.center.methods_agreed) {
            if (!first) os << ", ";
            first = false;
            os << method_name(m);
        }
        os << "\n\n";
    }
    os << "combined over all primes:\n";
    os << "  center trivial: " << (a.combined.trivial ? "yes" : "no") << "\n";
    os << "  center rank: " << a.combined.rank.to_decimal();
    if (a.combined.rank.to_factored() != a.combined.rank.to_decimal()) {
        os << " = " << a.combined.rank.to_factored();
    }
    os << "\n";
    std::ostringstream ms;
    ms.precision(3);
    ms << std::fixed << a.elapsed_ms;
    os << "  elapsed: " << ms.str() << " ms\n";
    return os.str();
}

std::string render_normalize_json(const std::vector<ValidatedPrime>& primes) {
    json root;
    json arr = json::array();
    for (const auto& vp : primes) {
        NormalizedMatrix scaled = normalize(vp.pairing);
        json entry;
        entry["p"] = vp.shape.prime();
        entry["blocks"] = blocks_to_json(vp.shape);
        entry["pairing_matrix"] = grid_to_json(vp.pairing.rows());
        entry["normalized_matrix"] = grid_to_json(scaled.matrix().rows());
        entry["normalized_modulus"] = scaled.modulus_value();
        arr.push_back(std::move(entry));
    }
    root["primes"] = std::move(arr);
    return root.dump(2) + "\n";
}

std::string render_normalize_text(const std::vector<ValidatedPrime>& primes) {
    std::ostringstream os;
    for (const auto& vp : primes) {
        NormalizedMatrix scaled = normalize(vp.pairing);
        print_prime_header(os, vp.shape);
        os << "  pairing matrix (canonical exponents):\n";
        print_grid(os, vp.pairing.rows(), "    ");
        os << "  normalized matrix over Z/" << scaled.modulus_value() << ":\n";
        print_grid(os, scaled.matrix().rows(), "    ");
    }
    return os.str();
}

std::string render_kernel_json(const std::vector<ValidatedPrime>& primes) {
    json root;
    json arr = json::array();
    for (const auto& vp : primes) {
        NormalizedMatrix scaled = normalize(vp.pairing);
        KernelDescription k = kernel(scaled);
        json entry;
        entry["p"] = vp.shape.prime();
        entry["blocks"] = blocks_to_json(vp.shape);
        entry["normalized_matrix"] = grid_to_json(scaled.matrix().rows());
        entry["normalized_modulus"] = scaled.modulus_value();
        json kern;
        put_count(kern, "size", k.size());
        json gens = json::array();
        for (const auto& g : k.generators) gens.push_back(coords_to_json(g.coords));
        kern["generators"] = std::move(gens);
        if (k.per_variable) kern["per_variable_moduli"] = *k.per_variable;
        entry["kernel"] = std::move(kern);
        arr.push_back(std::move(entry));
    }
    root["primes"] = std::move(arr);
    return root.dump(2) + "\n";
}

std::string render_kernel_text(const std::vector<ValidatedPrime>& primes) {
    std::ostringstream os;
    for (const auto& vp : primes) {
        NormalizedMatrix scaled = normalize(vp.pairing);
        KernelDescription k = kernel(scaled);
        print_prime_header(os, vp.shape);
        os << "  normalized matrix over Z/" << scaled.modulus_value() << ":\n";
        print_grid(os, scaled.matrix().rows(), "    ");
        print_kernel(os, k, scaled.modulus_value());
    }
    return os.str();
}

std::string render_oracle_json(const std::vector<ValidatedPrime>& primes, std::uint64_t cap) {
    constexpr std::size_t kMaxListed = 1000;
    json root;
    json arr = json::array();
    for (const auto& vp : primes) {
        NormalizedMatrix scaled = normalize(vp.pairing);
        RegularSubgroup reg = greg_brute_force(scaled, vp.shape, cap);
        json entry;
        entry["p"] = vp.shape.prime();
        entry["blocks"] = blocks_to_json(vp.shape);
        put_count(entry, "order", reg.order());
        json elems = json::array();
        std::size_t listed = std::min(reg.generators.size(), kMaxListed);
        for (std::size_t i = 0; i < listed; ++i) {
            elems.push_back(coords_to_json(reg.generators[i].coords));
        }
        entry["elements"] = std::move(elems);
        entry["elements_truncated"] = reg.generators.size() > kMaxListed;
        arr.push_back(std::move(entry));
    }
    root["primes"] = std::move(arr);
    return root.dump(2) + "\n";
}

std::string render_oracle_text(const std::vector<ValidatedPrime>& primes, std::uint64_t cap) {
    constexpr std::size_t kMaxListed = 64;
    std::ostringstream os;
    for (const auto& vp : primes) {
        NormalizedMatrix scaled = normalize(vp.pairing);
        RegularSubgroup reg = greg_brute_force(scaled, vp.shape, cap);
        print_prime_header(os, vp.shape);
        os << "  G_reg order (by enumeration): " << reg.order().to_decimal() << " = "
           << reg.order().to_factored() << "\n";
        std::size_t listed = std::min(reg.generators.size(), kMaxListed);
        for (std::size_t i = 0; i < listed; ++i) {
            os << "    (";
            for (std::size_t s = 0; s < reg.generators[i].coords.size(); ++s) {
                if (s) os << ", ";
                os << reg.generators[i].coords[s];
            }
            os << ")\n";
        }
        if (reg.generators.size() > kMaxListed) {
            os << "    ... (" << (reg.generators.size() - kMaxListed) << " more)\n";
        }
    }
    return os.str();
}

std::string render_cocycle_check_json(const CocycleProblem& problem, const PairingMatrix& derived,
                                      std::uint64_t triples_checked) {
    json root;
    root["p"] = problem.p;
    json blocks = json::array();
    for (const auto& b : problem.blocks) blocks.push_back(json::array({b.exponent, b.multiplicity}));
    root["blocks"] = std::move(blocks);
    root["cocycle_ok"] = true;
    root["triples_checked"] = triples_checked;
    root["derived_pairing_matrix"] = grid_to_json(derived.rows());
    return root.dump(2) + "\n";
}

std::string render_cocycle_check_text(const CocycleProblem& problem, const PairingMatrix& derived,
                                      std::uint64_t triples_checked) {
    std::ostringstream os;
    print_prime_header(os, derived.shape());
    os << "  cocycle identity: ok (" << triples_checked << " triples checked)\n";
    os << "  derived pairing matrix (canonical exponents):\n";
    print_grid(os, derived.rows(), "    ");
    return os.str();
}

}  // namespace tgc

#include "tgc/cli.hpp"

#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tgc/center.hpp"
#include "tgc/cocycle.hpp"
#include "tgc/errors.hpp"
#include "tgc/problem.hpp"
#include "tgc/report.hpp"
#include "tgc/solver.hpp"
#include "tgc/sweep.hpp"

namespace tgc {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDisagree = 3;
constexpr int kExitInternal = 4;

std::optional<std::vector<std::string>> split_methods(const std::string& list) {
    if (list.empty()) return std::nullopt;
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct CliState {
    bool json = false;
    std::uint64_t max_enumeration = 0;  // 0 means "not given"
    std::string methods;
    std::uint64_t seed = 12345;
    std::string file;

    std::optional<std::uint64_t> cap() const {
        return max_enumeration ? std::optional<std::uint64_t>(max_enumeration) : std::nullopt;
    }
};

int do_analyze(const CliState& st, std::ostream& out) {
    ProblemFile problem = load_problem(st.file);
    auto primes = validate_problem(problem);
    EffectiveSettings settings =
        resolve_settings(problem.settings, st.cap(), split_methods(st.methods), st.json);
    Analysis a = run_analysis(primes, settings);
    out << (settings.json_output ? render_analysis_json(a, settings) : render_analysis_text(a));
    return kExitOk;
}

int do_normalize(const CliState& st, std::ostream& out) {
    ProblemFile problem = load_problem(st.file);
    auto primes = validate_problem(problem);
    EffectiveSettings settings =
        resolve_settings(problem.settings, st.cap(), split_methods(st.methods), st.json);
    out << (settings.json_output ? render_normalize_json(primes) : render_normalize_text(primes));
    return kExitOk;
}

int do_kernel(const CliState& st, std::ostream& out) {
    ProblemFile problem = load_problem(st.file);
    auto primes = validate_problem(problem);
    EffectiveSettings settings =
        resolve_settings(problem.settings, st.cap(), split_methods(st.methods), st.json);
    out << (settings.json_output ? render_kernel_json(primes) : render_kernel_text(primes));
    return kExitOk;
}

int do_oracle(const CliState& st, std::ostream& out) {
    ProblemFile problem = load_problem(st.file);
    auto primes = validate_problem(problem);
    EffectiveSettings settings =
        resolve_settings(problem.settings, st.cap(), split_methods(st.methods), st.json);
    out << (settings.json_output ? render_oracle_json(primes, settings.enumeration_cap)
                                 : render_oracle_text(primes, settings.enumeration_cap));
    return kExitOk;
}

int do_cocycle_check(const CliState& st, std::ostream& out) {
    CocycleProblem problem = load_cocycle_problem(st.file);
    PGroupShape shape = PGroupShape::validate(problem.p, problem.blocks);

    auto order = shape.order_u64();
    if (!order) throw TooLargeToValidate("group too large for a cocycle table");
    std::vector<std::int64_t> flat;
    flat.reserve(*order * *order);
    if (problem.table.size() != *order) {
        throw WrongDimensions("cocycle table must have |G| = " + std::to_string(*order) +
                              " rows, got " + std::to_string(problem.table.size()));
    }
    for (std::size_t r = 0; r < problem.table.size(); ++r) {
        if (problem.table[r].size() != *order) {
            throw WrongDimensions("cocycle table row " + std::to_string(r + 1) + " must have " +
                                  std::to_string(*order) + " entries, got " +
                                  std::to_string(problem.table[r].size()));
        }
        flat.insert(flat.end(), problem.table[r].begin(), problem.table[r].end());
    }

    CocycleTable table(shape, std::move(flat));
    validate_cocycle(table);
    PairingMatrix derived = derive_pairing(table);
    std::uint64_t triples = *order * *order * *order;

    EffectiveSettings settings = resolve_settings(ProblemSettings{}, st.cap(),
                                                  split_methods(st.methods), st.json);
    out << (settings.json_output ? render_cocycle_check_json(problem, derived, triples)
                                 : render_cocycle_check_text(problem, derived, triples));
    return kExitOk;
}

int do_selftest(const CliState& st, std::ostream& out) {
    const std::uint64_t cap = st.cap().value_or(1000000);
    const std::uint64_t brute_cap = std::min<std::uint64_t>(cap, 20000);

    std::uint64_t instances = 0, brute_checks = 0;
    int shape_count = 0;
    for (std::int64_t p : {2, 3}) {
        for (const auto& shape : enumerate_shapes(p, 5, 3)) {
            ++shape_count;
            Rng rng(st.seed ^ (static_cast<std::uint64_t>(p) << 32) ^
                    static_cast<std::uint64_t>(shape_count));
            for (int i = 0; i < 30; ++i) {
                PairingMatrix a = random_pairing_matrix(shape, rng);
                AnalyzeOptions options{cap, OracleMode::if_feasible};
                analyze(shape, a, options);  // throws MethodsDisagree on any mismatch
                ++instances;

                NormalizedMatrix scaled = normalize(a);
                const int m = shape.generator_count();
                std::uint64_t space = 1;
                bool small = true;
                for (int s = 0; s < m && small; ++s) {
                    auto q = static_cast<std::uint64_t>(scaled.modulus_value());
                    small = space <= brute_cap / q;
                    if (small) space *= q;
                }
                if (small) {
                    auto counted = count_solutions_brute(scaled, brute_cap);
                    auto described = kernel(scaled).size().as_u64();
                    if (!described || *described != counted) {
                        throw MethodsDisagree("selftest: kernel size mismatch against brute count");
                    }
                    ++brute_checks;
                }
            }
        }
    }
    out << "selftest: " << instances << " random instances over " << shape_count
        << " shapes, all methods agree\n";
    out << "selftest: " << brute_checks << " brute-force kernel counts matched\n";
    out << "selftest: seed " << st.seed << ", enumeration cap " << cap << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"center structure of twisted group algebras of finite abelian groups"};
    app.name("tgc");

    CliState st;
    app.add_flag("--json", st.json, "emit JSON instead of text");
    app.add_option("--max-enumeration", st.max_enumeration,
                   "largest set the brute-force enumeration may walk (default 1000000)");
    app.add_option("--methods", st.methods,
                   "comma separated subset of theorem,kernel,oracle; theorem and kernel always "
                   "run, listing oracle forces enumeration, omitting it disables enumeration");
    app.add_option("--seed", st.seed, "seed for the selftest's randomized sweeps");

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "decide center triviality with all applicable methods");
    CLI::App* normalize_cmd =
        app.add_subcommand("normalize", "print the canonical and normalized pairing matrices");
    CLI::App* kernel_cmd =
        app.add_subcommand("kernel", "solve the normalized system and describe its kernel");
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "enumerate the group and list the regular subgroup");
    CLI::App* cocycle_cmd = app.add_subcommand(
        "cocycle-check", "validate a cocycle exponent table and derive its pairing matrix");
    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "run randomized agreement sweeps over small shapes");

    for (CLI::App* cmd : {analyze_cmd, normalize_cmd, kernel_cmd, oracle_cmd, cocycle_cmd}) {
        cmd->add_option("file", st.file, "JSON problem file")->required();
        cmd->fallthrough();
    }
    selftest_cmd->fallthrough();
    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("tgc");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        app.exit(e, out, err);
        return kExitInput;
    }

    try {
        if (analyze_cmd->parsed()) return do_analyze(st, out);
        if (normalize_cmd->parsed()) return do_normalize(st, out);
        if (kernel_cmd->parsed()) return do_kernel(st, out);
        if (oracle_cmd->parsed()) return do_oracle(st, out);
        if (cocycle_cmd->parsed()) return do_cocycle_check(st, out);
        if (selftest_cmd->parsed()) return do_selftest(st, out);
    } catch (const MethodsDisagree& e) {
        err << "error: " << e.what() << "\n";
        return kExitDisagree;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace tgc

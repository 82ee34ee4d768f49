#include "tgc/center.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tgc/errors.hpp"

namespace tgc {

const char* method_name(Method m) {
    switch (m) {
        case Method::theorem: return "theorem";
        case Method::kernel: return "kernel";
        case Method::oracle: return "oracle";
    }
    return "?";
}

bool center_trivial_by_theorem(const PairingMatrix& a) {
    const PGroupShape& shape = a.shape();
    for (int i = 0; i < shape.block_count(); ++i) {
        if (!invertible_mod_prime(a.diagonal_block(i), shape.prime())) return false;
    }
    return true;
}

RegularSubgroup greg_from_kernel(const KernelDescription& k, const PGroupShape& shape) {
    // Lifts of the identity: coordinate s ranges over multiples of
    // p^{n_block(s)} inside Z/p^{n_1}.
    std::int64_t fiber_exp = 0;
    for (int s = 0; s < shape.generator_count(); ++s) {
        fiber_exp += shape.top_exponent() - shape.exponent_of(s);
    }
    if (k.size_exponent < fiber_exp) {
        throw InternalInconsistency(
            "kernel is smaller than the identity fiber; the normalized matrix "
            "cannot have been lift-invariant");
    }

    std::vector<GroupElement> gens;
    for (const auto& g : k.generators) gens.push_back(project(g, shape));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    return RegularSubgroup{shape.prime(), k.size_exponent - fiber_exp, std::move(gens), false};
}

RegularSubgroup greg_brute_force(const NormalizedMatrix& a, const PGroupShape& shape,
                                 std::uint64_t cap) {
    const int m = shape.generator_count();
    std::vector<GroupElement> members;
    ElementEnumerator walk(shape, cap);
    while (auto g = walk.next()) {
        LiftedElement l = lift(*g);
        bool central = true;
        for (int h = 0; h < m && central; ++h) {
            central = commutation_phase(a, h, l).is_zero();
        }
        if (central) members.push_back(std::move(*g));
    }

    // A subgroup of a p-group has p-power order; anything else is a bug.
    std::uint64_t count = members.size();
    std::int64_t e = 0;
    while (count % static_cast<std::uint64_t>(shape.prime()) == 0) {
        count /= static_cast<std::uint64_t>(shape.prime());
        ++e;
    }
    if (count != 1) {
        throw InternalInconsistency("enumerated central set has non p-power size " +
                                    std::to_string(members.size()));
    }
    return RegularSubgroup{shape.prime(), e, std::move(members), true};
}

namespace {

std::string describe_instance(const PGroupShape& shape, const PairingMatrix& a) {
    std::ostringstream os;
    os << "p=" << shape.prime() << " blocks=[";
    for (std::size_t i = 0; i < shape.blocks().size(); ++i) {
        if (i) os << ",";
        os << "(" << shape.blocks()[i].exponent << "," << shape.blocks()[i].multiplicity << ")";
    }
    os << "] matrix=[";
    for (int u = 0; u < a.dim(); ++u) {
        if (u) os << ";";
        for (int v = 0; v < a.dim(); ++v) {
            if (v) os << ",";
            os << a.entry(u, v);
        }
    }
    os << "]";
    return os.str();
}

}  // namespace

CenterReport analyze(const PGroupShape& shape, const PairingMatrix& a,
                     const AnalyzeOptions& options) {
    const bool by_theorem = center_trivial_by_theorem(a);

    NormalizedMatrix scaled = normalize(a);
    KernelDescription k = kernel(scaled);
    RegularSubgroup from_kernel = greg_from_kernel(k, shape);
    const bool by_kernel = from_kernel.order_exponent == 0;

    std::set<Method> ran{Method::theorem, Method::kernel};

    std::optional<RegularSubgroup> from_oracle;
    if (options.oracle == OracleMode::always) {
        from_oracle = greg_brute_force(scaled, shape, options.enumeration_cap);
    } else if (options.oracle == OracleMode::if_feasible) {
        auto order = shape.order_u64();
        if (order && *order <= options.enumeration_cap) {
            from_oracle = greg_brute_force(scaled, shape, options.enumeration_cap);
        }
    }

    std::ostringstream disagreement;
    if (by_theorem != by_kernel) {
        disagreement << "theorem says " << (by_theorem ? "trivial" : "nontrivial")
                     << " but the kernel route says rank " << from_kernel.order().to_factored();
    }
    if (from_oracle) {
        ran.insert(Method::oracle);
        if (from_oracle->order_exponent != from_kernel.order_exponent) {
            if (disagreement.tellp() > 0) disagreement << "; ";
            disagreement << "kernel route rank " << from_kernel.order().to_factored()
                         << " but enumeration found " << from_oracle->order().to_factored();
        }
    }
    if (disagreement.tellp() > 0) {
        throw MethodsDisagree("methods disagree on " + describe_instance(shape, a) + ": " +
                              disagreement.str());
    }

    return CenterReport{shape, by_kernel, from_kernel.order_exponent,
                        std::move(from_kernel.generators), std::move(ran)};
}

CombinedReport tensor_combine(const std::vector<CenterReport>& per_prime) {
    std::set<std::int64_t> seen;
    for (const auto& r : per_prime) {
        if (!seen.insert(r.prime()).second) throw DuplicatePrime(r.prime());
    }

    CombinedReport out{true, Count{}, per_prime, {}};
    int total_coords = 0;
    for (const auto& r : per_prime) total_coords += r.shape.generator_count();

    int offset = 0;
    for (const auto& r : per_prime) {
        out.trivial = out.trivial && r.trivial;
        out.rank *= r.rank();
        for (const auto& g : r.greg_generators) {
            std::vector<std::int64_t> embedded(total_coords, 0);
            std::copy(g.coords.begin(), g.coords.end(), embedded.begin() + offset);
            out.embedded_generators.push_back(std::move(embedded));
        }
        offset += r.shape.generator_count();
    }
    return out;
}

}  // namespace tgc

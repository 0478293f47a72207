#include "fermat/isotypic.hpp"

#include <sstream>

namespace fermat {

void GradedVirtualModule::add(int weight, const Character& chi,
                              const Int& multiplicity) {
    if (multiplicity == 0) return;
    if (chi.modulus() != params_.d ||
        chi.size() != static_cast<std::size_t>(params_.ambient_vars()))
        throw std::invalid_argument("character does not belong to this dual group");
    Key key{weight, chi};
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(std::move(key), multiplicity);
        return;
    }
    it->second += multiplicity;
    if (it->second == 0) entries_.erase(it);
}

Int GradedVirtualModule::multiplicity(int weight, const Character& chi) const {
    auto it = entries_.find(Key{weight, chi});
    return it == entries_.end() ? Int(0) : it->second;
}

Int GradedVirtualModule::dimension() const {
    Int total = 0;
    for (const auto& [key, mult] : entries_) total += mult;
    return total;
}

std::set<Character> GradedVirtualModule::character_support() const {
    std::set<Character> out;
    for (const auto& [key, mult] : entries_) out.insert(key.chi);
    return out;
}

std::set<int> GradedVirtualModule::weights() const {
    std::set<int> out;
    for (const auto& [key, mult] : entries_) out.insert(key.weight);
    return out;
}

GradedVirtualModule GradedVirtualModule::shifted(int delta) const {
    GradedVirtualModule out(params_);
    for (const auto& [key, mult] : entries_)
        out.add(key.weight + delta, key.chi, mult);
    return out;
}

GradedVirtualModule&
GradedVirtualModule::operator+=(const GradedVirtualModule& other) {
    if (other.params_ != params_)
        throw std::invalid_argument("cannot add modules over different groups");
    for (const auto& [key, mult] : other.entries_)
        add(key.weight, key.chi, mult);
    return *this;
}

ProjectorSpec averaging_projector(const FermatParams& params) {
    validate(params);
    Character trivial(params.d,
                      std::vector<int>(static_cast<std::size_t>(params.ambient_vars()), 0));
    return ProjectorSpec{ProjectorSpec::Kind::averaging, {std::move(trivial)}};
}

ProjectorSpec character_sum_projector(std::set<Character> support) {
    return ProjectorSpec{ProjectorSpec::Kind::character_sum, std::move(support)};
}

ProjectorSpec complement(const ProjectorSpec& spec, const FermatParams& params,
                         long long max_enum) {
    CharacterSet all = enumerate_dual_group(params, max_enum);
    std::set<Character> rest;
    for (const Character& chi : all.members)
        if (!spec.char_support.count(chi)) rest.insert(chi);
    return character_sum_projector(std::move(rest));
}

GradedVirtualModule apply_projector(const ProjectorSpec& spec,
                                    const GradedVirtualModule& m) {
    // Isotypic projection of a multiplicity map is a filter: the projector
    // p_chi is the identity on V(chi) and zero on every other eigenspace,
    // so multiplicities at kept characters survive unchanged.
    GradedVirtualModule out(m.params());
    for (const auto& [key, mult] : m.entries())
        if (spec.char_support.count(key.chi)) out.add(key.weight, key.chi, mult);
    return out;
}

GradedVirtualModule module_H_middle(const FermatParams& params,
                                    bool primitive_only, long long max_enum) {
    validate(params);
    GradedVirtualModule out(params);
    for (const Character& chi : set_A(params, max_enum).members)
        out.add(params.n, chi, 1);
    if (!primitive_only && params.n % 2 == 0) {
        Character trivial(params.d,
                          std::vector<int>(static_cast<std::size_t>(params.ambient_vars()), 0));
        out.add(params.n, trivial, 1);
    }
    return out;
}

GradedVirtualModule module_support(const FermatParams& params, int p,
                                   long long max_enum) {
    validate(params);
    if (2 * p - 1 != params.n) {
        std::ostringstream msg;
        msg << "support module is defined for 2p - 1 = n; got p = " << p
            << ", n = " << params.n;
        throw std::invalid_argument(msg.str());
    }

    GradedVirtualModule out(params);
    if (params.n == 1) {
        // Three coordinate lines; chi contributes once per line it vanishes
        // on, all in weight 2.  Total dimension sums to 3d.
        for (int axis = 0; axis < 3; ++axis)
            for (const Character& chi : set_B(params, {axis}, max_enum).members)
                out.add(2, chi, 1);
    } else {
        // The group permutes nothing here: each of the C(n+2, p) coordinate
        // sections is fixed, so everything is trivial-isotypic.
        Character trivial(params.d,
                          std::vector<int>(static_cast<std::size_t>(params.ambient_vars()), 0));
        out.add(2 * p, trivial, binomial(params.n + 2, p));
    }
    return out;
}

} // namespace fermat

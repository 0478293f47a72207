#include "fermat/precycles.hpp"

#include <algorithm>
#include <sstream>

namespace fermat {

namespace {

std::string index_set_string(const std::vector<int>& indices) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) out << ',';
        out << indices[i];
    }
    out << '}';
    return out.str();
}

} // namespace

LinearSubvariety linear_subvariety(const FermatParams& params,
                                   std::vector<int> indices) {
    validate(params);
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
        throw std::invalid_argument("index collision in " +
                                    index_set_string(indices));
    if (!indices.empty() &&
        (indices.front() < 0 || indices.back() > params.n + 1))
        throw std::invalid_argument("subvariety index outside {0, ..., n+1}");
    if (static_cast<int>(indices.size()) > params.n)
        throw std::invalid_argument(
            "dimension error: " + index_set_string(indices) + " cuts " +
            std::to_string(indices.size()) +
            " hyperplanes out of an n-fold with n = " + std::to_string(params.n));
    return LinearSubvariety{params, std::move(indices)};
}

LinearSubvariety extended(const LinearSubvariety& base, std::vector<int> extra) {
    std::vector<int> joined = base.indices;
    for (int i : extra) joined.push_back(i);
    return linear_subvariety(base.params, std::move(joined));
}

SymbolicFunction symbolic_function(const LinearSubvariety& base, int plus_idx,
                                   int minus_idx) {
    if (plus_idx == minus_idx)
        throw std::invalid_argument(
            "index collision: divisor components of a symbolic function must "
            "differ");
    // Validates ranges, distinctness from base.indices and the dimension
    // bound |I u {a,b}| <= n in one place.
    extended(base, {plus_idx});
    extended(base, {minus_idx});
    return SymbolicFunction{base, plus_idx, minus_idx};
}

LinearSubvariety plus_component(const SymbolicFunction& f) {
    return extended(f.base, {f.plus_idx});
}

LinearSubvariety minus_component(const SymbolicFunction& f) {
    return extended(f.base, {f.minus_idx});
}

int PreCycle::level() const {
    return terms.empty() ? 0 : static_cast<int>(terms.front().entries.size());
}

void validate(const PreCycle& cycle) {
    if (cycle.terms.empty()) return;
    const FermatParams params = cycle.terms.front().carrier.params;
    const std::size_t level = cycle.terms.front().entries.size();
    if (level == 0)
        throw std::invalid_argument("precycle terms need at least one function entry");
    for (const PreCycleTerm& term : cycle.terms) {
        if (term.carrier.params != params)
            throw std::invalid_argument("precycle terms mix ambient varieties");
        if (term.entries.size() != level)
            throw std::invalid_argument("precycle entry lists must share a length");
        for (const FunctionEntry& entry : term.entries)
            if (const auto* f = std::get_if<SymbolicFunction>(&entry))
                if (f->base != term.carrier)
                    throw std::invalid_argument(
                        "symbolic function does not live on its term's carrier");
    }
}

PreCycle operator+(const PreCycle& lhs, const PreCycle& rhs) {
    PreCycle out = lhs;
    out.terms.insert(out.terms.end(), rhs.terms.begin(), rhs.terms.end());
    validate(out);
    return out;
}

FormalDivisor divisor_sum(const PreCycle& cycle) {
    validate(cycle);
    if (!cycle.empty() && cycle.level() >= 2)
        throw unsupported_level(
            "divisor bookkeeping is encoded for level q = 1 only; the q >= 2 "
            "boundary is a tame-symbol condition with no formula here");
    FormalDivisor out;
    for (const PreCycleTerm& term : cycle.terms) {
        const auto* f = std::get_if<SymbolicFunction>(&term.entries.front());
        if (f == nullptr) continue; // constants have zero divisor
        out[plus_component(*f).indices] += term.coeff;
        out[minus_component(*f).indices] -= term.coeff;
    }
    std::erase_if(out, [](const auto& entry) { return entry.second == 0; });
    return out;
}

PreCycle triangle_cycle(const FermatParams& params, std::vector<int> indices,
                        int a, int b, int c) {
    if (a == b || a == c || b == c)
        throw std::invalid_argument("index collision among the triangle corners");
    for (int corner : {a, b, c})
        if (std::find(indices.begin(), indices.end(), corner) != indices.end())
            throw std::invalid_argument("triangle corner already in the index set");
    if (static_cast<int>(indices.size()) + 2 > params.n)
        throw std::invalid_argument(
            "dimension error: triangle cycles need |I| + 2 <= n so every "
            "divisor component is positive-dimensional and irreducible");

    const LinearSubvariety base = linear_subvariety(params, indices);
    PreCycle out;
    auto add_term = [&out, &base](int carrier_idx, int plus, int minus) {
        LinearSubvariety carrier = extended(base, {carrier_idx});
        SymbolicFunction f = symbolic_function(carrier, plus, minus);
        out.terms.push_back(PreCycleTerm{1, std::move(carrier), {f}});
    };
    // (C_{I u a}, f_bc) + (C_{I u b}, f_ca) + (C_{I u c}, f_ab): the six
    // divisor components pair off after index-set canonicalization.
    add_term(a, b, c);
    add_term(b, c, a);
    add_term(c, a, b);
    validate(out);
    return out;
}

bool is_admissible(const PreCycle& cycle) { return divisor_sum(cycle).empty(); }

bool is_decomposable(const PreCycle& cycle) {
    validate(cycle);
    for (const PreCycleTerm& term : cycle.terms)
        for (const FunctionEntry& entry : term.entries)
            if (!std::holds_alternative<ConstantMarker>(entry)) return false;
    return true;
}

} // namespace fermat

#include "fermat/characters.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fermat {

void validate(const FermatParams& params) {
    if (params.d < 1)
        throw std::invalid_argument("degree d must be at least 1, got " +
                                    std::to_string(params.d));
    if (params.n < 0)
        throw std::invalid_argument("dimension n must be nonnegative, got " +
                                    std::to_string(params.n));
}

Int group_order(const FermatParams& params) {
    validate(params);
    return int_pow(params.d, static_cast<unsigned>(params.n + 1));
}

Character::Character(int modulus, std::vector<int> residues)
    : d_(modulus), a_(std::move(residues)) {
    if (d_ < 1) throw std::invalid_argument("character modulus must be positive");
    long long sum = 0;
    for (int r : a_) {
        if (r < 0 || r >= d_)
            throw std::invalid_argument("character residue out of range [0, d)");
        sum += r;
    }
    if (sum % d_ != 0)
        throw std::invalid_argument("character residues must sum to 0 mod d");
}

bool Character::trivial() const {
    return std::all_of(a_.begin(), a_.end(), [](int r) { return r == 0; });
}

bool Character::all_nonzero() const {
    return std::all_of(a_.begin(), a_.end(), [](int r) { return r != 0; });
}

Character Character::negated() const {
    std::vector<int> neg(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i)
        neg[i] = a_[i] == 0 ? 0 : d_ - a_[i];
    return Character(d_, std::move(neg));
}

std::string Character::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i) out << ',';
        out << a_[i];
    }
    out << ") mod " << d_;
    return out.str();
}

bool CharacterSet::contains(const Character& chi) const {
    return std::binary_search(members.begin(), members.end(), chi);
}

namespace {

void check_capacity(const FermatParams& params, long long max_enum) {
    const Int total = group_order(params);
    if (total > Int(max_enum)) {
        std::ostringstream out;
        out << "dual group of size d^(n+1) = " << total
            << " exceeds the enumeration limit " << max_enum;
        throw capacity_error(out.str());
    }
}

} // namespace

CharacterSet enumerate_dual_group(const FermatParams& params, long long max_enum) {
    validate(params);
    check_capacity(params, max_enum);

    const int d = params.d;
    const int vars = params.ambient_vars();
    CharacterSet out{params, {}};
    out.members.reserve(static_cast<std::size_t>(group_order(params)));

    // Odometer over the first n+1 residues; the last one is forced by the
    // zero-sum constraint.  This visits tuples in lexicographic order.
    std::vector<int> tuple(static_cast<std::size_t>(vars), 0);
    while (true) {
        int sum = std::accumulate(tuple.begin(), tuple.end() - 1, 0);
        tuple.back() = (d - sum % d) % d;
        out.members.emplace_back(d, tuple);

        int pos = vars - 2;
        while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == d - 1) {
            tuple[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++tuple[static_cast<std::size_t>(pos)];
    }
    return out;
}

CharacterSet set_A(const FermatParams& params, long long max_enum) {
    CharacterSet all = enumerate_dual_group(params, max_enum);
    CharacterSet out{params, {}};
    for (const Character& chi : all.members)
        if (chi.all_nonzero()) out.members.push_back(chi);
    return out;
}

Int count_A_closed_form(const FermatParams& params) {
    validate(params);
    const Int dm1 = params.d - 1;
    const unsigned exp = static_cast<unsigned>(params.n + 2);
    const int sign = (params.n + 2) % 2 == 0 ? 1 : -1;
    Int numerator = int_pow(dm1, exp) + sign * dm1;
    return numerator / params.d;
}

CharacterSet set_B(const FermatParams& params, const std::vector<int>& indices,
                   long long max_enum) {
    validate(params);
    if (indices.empty())
        throw std::invalid_argument("set_B requires a nonempty index set");
    std::vector<int> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("set_B index set has duplicates");
    if (sorted.front() < 0 || sorted.back() > params.n + 1)
        throw std::invalid_argument("set_B index outside {0, ..., n+1}");

    CharacterSet all = enumerate_dual_group(params, max_enum);
    CharacterSet out{params, {}};
    for (const Character& chi : all.members) {
        bool vanishes = true;
        for (int i : sorted)
            if (chi[static_cast<std::size_t>(i)] != 0) {
                vanishes = false;
                break;
            }
        if (vanishes) out.members.push_back(chi);
    }
    return out;
}

HodgeType hodge_type(const FermatParams& params, const Character& chi) {
    validate(params);
    if (chi.modulus() != params.d)
        throw std::invalid_argument("character modulus does not match params");
    if (chi.size() != static_cast<std::size_t>(params.ambient_vars()))
        throw std::invalid_argument("character length does not match params");
    if (!chi.all_nonzero())
        throw std::invalid_argument(
            "Hodge type is defined only for characters with all residues "
            "nonzero");

    // Every residue is in [1, d-1] and the sum is divisible by d, so the sum
    // of fractional parts a_i/d is the integer (sum a_i)/d.
    long long sum = 0;
    for (std::size_t i = 0; i < chi.size(); ++i) sum += chi[i];
    const int q = static_cast<int>(sum / params.d) - 1;
    return HodgeType{params.n - q, q};
}

Int griffiths_hodge_number(const FermatParams& params, int q) {
    validate(params);
    if (q < 0 || q > params.n)
        throw std::invalid_argument("Hodge index q must satisfy 0 <= q <= n");

    const long long target =
        static_cast<long long>(q + 1) * params.d - (params.n + 2);
    if (target < 0) return 0;
    const int bound = params.d - 2; // per-variable exponent cap
    if (bound < 0) return 0;

    // Count compositions of `target` into n+2 parts from [0, bound] by a
    // running convolution; exact at every step.
    std::vector<Int> ways(static_cast<std::size_t>(target) + 1, 0);
    ways[0] = 1;
    for (int var = 0; var < params.ambient_vars(); ++var) {
        std::vector<Int> next(ways.size(), 0);
        for (std::size_t total = 0; total < ways.size(); ++total) {
            if (ways[total] == 0) continue;
            for (int part = 0; part <= bound; ++part) {
                const std::size_t sum = total + static_cast<std::size_t>(part);
                if (sum >= next.size()) break;
                next[sum] += ways[total];
            }
        }
        ways.swap(next);
    }
    return ways.back();
}

} // namespace fermat

#include "fermat/splitting.hpp"

#include <sstream>

namespace fermat {

namespace {

void require_interesting_case(const FermatParams& params, int p, int q) {
    validate(params);
    if (q < 0) throw std::invalid_argument("level q must be nonnegative");
    if (params.n % 2 == 0 || 2 * p - 1 != params.n) {
        std::ostringstream msg;
        msg << "unsupported case (d=" << params.d << ", n=" << params.n
            << ", p=" << p << ", q=" << q
            << "): if 2p - 1 != n the cohomology group in question is "
               "trivial; only n odd with p = (n+1)/2 is interesting";
        throw unsupported_case(msg.str());
    }
    if (q > 1)
        throw unsupported_case(
            "levels q >= 2 are not supported: no boundary bookkeeping is "
            "encoded beyond q = 1");
    if (q == 1 && params.n == 1)
        throw unsupported_case(
            "the curve case n = 1 has no such splitting at level q >= 1: "
            "the support classes are points and the argument degenerates");
}

} // namespace

Int kernel_of_cycle_class(const FermatParams& params, int p) {
    require_interesting_case(params, p, 0);
    if (params.n == 1) return Int(3) * params.d - 1;
    return binomial(params.n + 2, p) - 1;
}

LocalizationModel build_model(const FermatParams& params, int p, int q,
                              long long max_enum) {
    require_interesting_case(params, p, q);

    // The suspension shifts cohomological degree by q but leaves dimensions
    // and the character decomposition alone, so q only moves the middle
    // weight label from 2p-1 to 2p-1-q.
    LocalizationModel model{params, p, q, module_H_middle(params, true, max_enum).shifted(-q),
                            module_support(params, p, max_enum),
                            kernel_of_cycle_class(params, p)};
    return model;
}

SplitReport verify_split(const LocalizationModel& model) {
    const FermatParams& params = model.params;

    ProjectorSpec witness;
    if (params.n == 1) {
        // The support characters all lie in some B_i, disjoint from A, so
        // the sum of their character projectors works.
        std::set<Character> support;
        for (int axis = 0; axis < 3; ++axis)
            for (const Character& chi : set_B(params, {axis}).members)
                support.insert(chi);
        witness = character_sum_projector(std::move(support));
    } else {
        witness = averaging_projector(params);
    }

    const std::set<Character> middle_chars = model.middle.character_support();
    bool disjoint = true;
    for (const Character& chi : model.support.character_support())
        if (middle_chars.count(chi)) {
            disjoint = false;
            break;
        }

    const bool kills_middle = apply_projector(witness, model.middle).is_zero();
    const bool identity_on_support =
        apply_projector(witness, model.support) == model.support;

    // Exactness bookkeeping: the cycle-class image has rank 1 here, so the
    // kernel must be exactly one short of the support dimension.
    const bool dimensions_exact =
        model.kernel_dim >= 0 &&
        model.kernel_dim == model.support.dimension() - 1;

    SplitReport report;
    report.witness = witness;
    report.scalar = group_order(params);
    report.checks = {
        {"disjointness", disjoint},
        {"kill-middle", kills_middle},
        {"identity-on-support", identity_on_support},
        {"dimension-exactness", dimensions_exact},
    };
    report.verdict = disjoint && kills_middle && identity_on_support &&
                     dimensions_exact;
    return report;
}

} // namespace fermat

#include "fermat/splitting.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace fermat;

TEST_CASE("cycle class kernel dimensions") {
    // Curves: 3d sections, rank-1 image of the degree map.
    CHECK(kernel_of_cycle_class(FermatParams{3, 1}, 1) == 8);
    CHECK(kernel_of_cycle_class(FermatParams{4, 1}, 1) == 11);
    CHECK(kernel_of_cycle_class(FermatParams{5, 1}, 1) == 14);
    // Higher dimension: C(n+2, p) sections sharing one class.
    CHECK(kernel_of_cycle_class(FermatParams{3, 3}, 2) == 9);  // C(5,2) - 1
    CHECK(kernel_of_cycle_class(FermatParams{2, 5}, 3) == 34); // C(7,3) - 1
}

TEST_CASE("model dimensions for hand-checked cases") {
    const LocalizationModel curve = build_model(FermatParams{3, 1}, 1, 0);
    CHECK(curve.middle.dimension() == 2);
    CHECK(curve.support.dimension() == 9);
    CHECK(curve.kernel_dim == 8);
    CHECK(curve.middle.weights() == std::set<int>{1});
    CHECK(curve.support.weights() == std::set<int>{2});

    const LocalizationModel threefold = build_model(FermatParams{3, 3}, 2, 0);
    CHECK(threefold.middle.dimension() == 10); // |A_3^3| = (2^5 - 2)/3
    CHECK(threefold.support.dimension() == 10); // C(5, 2)
    CHECK(threefold.kernel_dim == 9);
    CHECK(threefold.middle.weights() == std::set<int>{3});
    CHECK(threefold.support.weights() == std::set<int>{4});
}

TEST_CASE("level q shifts the middle weight label and nothing else") {
    const LocalizationModel base = build_model(FermatParams{3, 3}, 2, 0);
    const LocalizationModel lifted = build_model(FermatParams{3, 3}, 2, 1);
    CHECK(lifted.middle == base.middle.shifted(-1));
    CHECK(lifted.middle.weights() == std::set<int>{2});
    CHECK(lifted.support == base.support);
    CHECK(lifted.kernel_dim == base.kernel_dim);
}

TEST_CASE("build_model rejects the uninteresting or unsupported shapes") {
    // Even n: the support sequence has no middle-degree story here.
    CHECK_THROWS_AS(build_model(FermatParams{3, 2}, 1, 0), unsupported_case);
    // 2p - 1 != n: the localized group is off the interesting degree.
    CHECK_THROWS_AS(build_model(FermatParams{3, 3}, 1, 0), unsupported_case);
    CHECK_THROWS_AS(build_model(FermatParams{3, 5}, 2, 0), unsupported_case);
    // Levels beyond 1 are not modeled.
    CHECK_THROWS_AS(build_model(FermatParams{3, 3}, 2, 2), unsupported_case);
    // The curve case has no level-1 analogue.
    CHECK_THROWS_AS(build_model(FermatParams{3, 1}, 1, 1), unsupported_case);
    CHECK_THROWS_AS(build_model(FermatParams{3, 3}, 2, -1),
                    std::invalid_argument);
}

TEST_CASE("verified split for the genus-1 curve, with the witness inspected") {
    const SplitReport report = verify_split(build_model(FermatParams{3, 1}, 1, 0));
    CHECK(report.verdict);
    CHECK(report.scalar == 9);
    CHECK(report.witness.kind == ProjectorSpec::Kind::character_sum);
    // The witness sums over B_0 u B_1 u B_2: 3(d-1) singles plus the trivial.
    CHECK(report.witness.char_support.size() == 7);
    REQUIRE(report.checks.size() == 4);
    CHECK(report.checks[0].name == "disjointness");
    CHECK(report.checks[1].name == "kill-middle");
    CHECK(report.checks[2].name == "identity-on-support");
    CHECK(report.checks[3].name == "dimension-exactness");
    for (const SplitCheck& check : report.checks) CHECK(check.passed);
}

TEST_CASE("verified split for the threefold, scalar is the group order") {
    const SplitReport report = verify_split(build_model(FermatParams{3, 3}, 2, 0));
    CHECK(report.verdict);
    CHECK(report.scalar == 81);
    CHECK(report.witness.kind == ProjectorSpec::Kind::averaging);
    for (const SplitCheck& check : report.checks) CHECK(check.passed);
}

TEST_CASE("the witness projector fixes support and kills middle at once") {
    for (int d = 3; d <= 5; ++d) {
        const LocalizationModel model = build_model(FermatParams{d, 1}, 1, 0);
        const SplitReport report = verify_split(model);
        REQUIRE(report.verdict);
        const GradedVirtualModule both = model.middle + model.support;
        CHECK(apply_projector(report.witness, both) == model.support);
    }
}

TEST_CASE("split verdicts hold across the parameter grid") {
    const struct {
        int n, p, q;
    } combos[] = {{1, 1, 0}, {3, 2, 0}, {5, 3, 0}, {3, 2, 1}, {5, 3, 1}};
    for (int d = 3; d <= 6; ++d)
        for (const auto& combo : combos) {
            CAPTURE(d);
            CAPTURE(combo.n);
            CAPTURE(combo.q);
            const LocalizationModel model =
                build_model(FermatParams{d, combo.n}, combo.p, combo.q);
            const SplitReport report = verify_split(model);
            CHECK(report.verdict);
            CHECK(report.scalar ==
                  int_pow(Int(d), static_cast<unsigned>(combo.n + 1)));
            for (const SplitCheck& check : report.checks) {
                CAPTURE(check.name);
                CHECK(check.passed);
            }
            // Exactness bookkeeping: the kernel misses exactly the rank-1
            // image of the cycle class map.
            CHECK(model.kernel_dim + 1 == model.support.dimension());
        }
}

#include "fermat/isotypic.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace fermat;

namespace {

Character trivial_char(const FermatParams& params) {
    return Character(params.d,
                     std::vector<int>(
                         static_cast<std::size_t>(params.ambient_vars()), 0));
}

} // namespace

TEST_CASE("graded module bookkeeping: add, cancel, dimension") {
    const FermatParams params{3, 1};
    GradedVirtualModule m(params);
    CHECK(m.is_zero());
    CHECK(m.dimension() == 0);

    const Character chi(3, {1, 1, 1});
    m.add(1, chi, 2);
    m.add(1, chi, -1);
    CHECK(m.multiplicity(1, chi) == 1);
    m.add(1, chi, -1);
    CHECK(m.is_zero()); // exact cancellation removes the entry
    CHECK(m.multiplicity(1, chi) == 0);

    m.add(2, chi, 5);
    m.add(0, trivial_char(params), 1);
    CHECK(m.dimension() == 6);
    CHECK(m.weights() == std::set<int>{0, 2});
    CHECK(m.character_support() ==
          std::set<Character>{chi, trivial_char(params)});
}

TEST_CASE("graded module rejects foreign characters") {
    GradedVirtualModule m(FermatParams{3, 1});
    CHECK_THROWS_AS(m.add(1, Character(4, {1, 1, 2}), 1),
                    std::invalid_argument);
}

TEST_CASE("shifting moves weight labels only") {
    const FermatParams params{3, 1};
    GradedVirtualModule m(params);
    const Character chi(3, {1, 1, 1});
    m.add(1, chi, 4);
    const GradedVirtualModule s = m.shifted(-1);
    CHECK(s.multiplicity(0, chi) == 4);
    CHECK(s.multiplicity(1, chi) == 0);
    CHECK(s.dimension() == m.dimension());
    CHECK(s.shifted(1) == m);
}

TEST_CASE("middle cohomology module has |A| dimensions at weight n") {
    for (int d = 2; d <= 6; ++d)
        for (int n = 1; n <= 3; ++n) {
            const FermatParams params{d, n};
            const GradedVirtualModule middle = module_H_middle(params);
            CHECK(middle.dimension() == count_A_closed_form(params));
            if (!middle.is_zero()) CHECK(middle.weights() == std::set<int>{n});
            for (const Character& chi : middle.character_support())
                CHECK(chi.all_nonzero());
        }
}

TEST_CASE("non-primitive middle adds the algebraic class in even dimension") {
    const FermatParams even{3, 2};
    const GradedVirtualModule prim = module_H_middle(even, true);
    const GradedVirtualModule full = module_H_middle(even, false);
    CHECK(full.dimension() == prim.dimension() + 1);
    CHECK(full.multiplicity(2, trivial_char(even)) == 1);

    const FermatParams odd{3, 1};
    CHECK(module_H_middle(odd, false) == module_H_middle(odd, true));
}

TEST_CASE("support module for a curve: multiplicities count containing B_i") {
    const FermatParams params{3, 1};
    const GradedVirtualModule support = module_support(params, 1);
    CHECK(support.dimension() == 3 * params.d);
    CHECK(support.weights() == std::set<int>{2});
    CHECK(support.multiplicity(2, trivial_char(params)) == 3);
    // A character vanishing on exactly one coordinate appears once.
    CHECK(support.multiplicity(2, Character(3, {0, 1, 2})) == 1);
    // Characters with no zero coordinate do not appear at all.
    CHECK(support.multiplicity(2, Character(3, {1, 1, 1})) == 0);
}

TEST_CASE("support module above the curve case is trivial-isotypic") {
    const FermatParams params{3, 3};
    const GradedVirtualModule support = module_support(params, 2);
    CHECK(support.dimension() == binomial(5, 2)); // C(n+2, p) sections
    CHECK(support.weights() == std::set<int>{4});
    CHECK(support.character_support() ==
          std::set<Character>{trivial_char(params)});
    CHECK_THROWS_AS(module_support(params, 1), std::invalid_argument);
}

TEST_CASE("averaging projector keeps exactly the trivial piece") {
    const FermatParams params{3, 1};
    const ProjectorSpec avg = averaging_projector(params);
    CHECK(avg.kind == ProjectorSpec::Kind::averaging);
    CHECK(avg.kind_name() == "averaging");
    CHECK(avg.char_support == std::set<Character>{trivial_char(params)});

    const GradedVirtualModule support = module_support(params, 1);
    const GradedVirtualModule kept = apply_projector(avg, support);
    CHECK(kept.dimension() == 3);
    CHECK(kept.character_support() ==
          std::set<Character>{trivial_char(params)});

    const GradedVirtualModule middle = module_H_middle(params);
    CHECK(apply_projector(avg, middle).is_zero());
}

TEST_CASE("projectors are idempotent filters") {
    const FermatParams params{4, 1};
    const GradedVirtualModule support = module_support(params, 1);
    std::set<Character> chis;
    for (const Character& chi : set_B(params, {0}).members) chis.insert(chi);
    const ProjectorSpec proj = character_sum_projector(chis);
    CHECK(proj.kind_name() == "character-sum");

    const GradedVirtualModule once = apply_projector(proj, support);
    CHECK(apply_projector(proj, once) == once);
    // B_0 has 4 characters; in the support module the trivial one carries
    // multiplicity 3 and the other three carry 1 each.
    CHECK(once.dimension() == 6);
}

TEST_CASE("complementary projectors decompose every module") {
    const FermatParams params{3, 1};
    const GradedVirtualModule support = module_support(params, 1);
    const GradedVirtualModule middle = module_H_middle(params);

    const ProjectorSpec avg = averaging_projector(params);
    const ProjectorSpec rest = complement(avg, params);
    CHECK(rest.kind == ProjectorSpec::Kind::character_sum);
    CHECK(static_cast<Int>(rest.char_support.size()) ==
          group_order(params) - 1);

    for (const GradedVirtualModule& m : {support, middle}) {
        const GradedVirtualModule split =
            apply_projector(avg, m) + apply_projector(rest, m);
        CHECK(split == m);
    }
}

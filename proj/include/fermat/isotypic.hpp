#pragma once

#include "fermat/characters.hpp"
#include "fermat/numeric.hpp"

#include <map>
#include <set>

namespace fermat {

/* A formal direct sum of character eigenspaces with weight labels:
 * (weight, chi) -> multiplicity.  Weights are carried redundantly with the
 * characters so purity of graded pieces stays assertable.  Multiplicities
 * are integers (virtual modules subtract), but every constructor here
 * produces nonnegative ones.
 */
class GradedVirtualModule {
  public:
    struct Key {
        int weight;
        Character chi;

        friend auto operator<=>(const Key&, const Key&) = default;
    };

    explicit GradedVirtualModule(FermatParams params) : params_(params) {}

    const FermatParams& params() const { return params_; }

    void add(int weight, const Character& chi, const Int& multiplicity);

    Int multiplicity(int weight, const Character& chi) const;
    const std::map<Key, Int>& entries() const { return entries_; }

    // Sum of all multiplicities.
    Int dimension() const;

    bool is_zero() const { return entries_.empty(); }

    std::set<Character> character_support() const;
    std::set<int> weights() const;

    // The same multiplicities with every weight label shifted by delta.
    GradedVirtualModule shifted(int delta) const;

    GradedVirtualModule& operator+=(const GradedVirtualModule& other);
    friend GradedVirtualModule operator+(GradedVirtualModule lhs,
                                         const GradedVirtualModule& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend bool operator==(const GradedVirtualModule&,
                           const GradedVirtualModule&) = default;

  private:
    FermatParams params_;
    std::map<Key, Int> entries_; // zero multiplicities are never stored
};

/* An idempotent of the group algebra, described by the set of characters it
 * keeps.  "averaging" is (1/|G|) sum over g, which keeps exactly the trivial
 * isotypic piece; "character_sum" is a sum of the projectors p_chi over an
 * explicit character set.  Both act on multiplicities as a filter; the
 * normalization scalar |G| = d^(n+1) never enters here and is surfaced in
 * split reports only.
 */
struct ProjectorSpec {
    enum class Kind { averaging, character_sum };

    Kind kind = Kind::averaging;
    std::set<Character> char_support;

    std::string kind_name() const {
        return kind == Kind::averaging ? "averaging" : "character-sum";
    }
};

ProjectorSpec averaging_projector(const FermatParams& params);
ProjectorSpec character_sum_projector(std::set<Character> support);

// character_sum over the complement of spec's support inside the full dual
// group; useful for the complementarity identity m = P m + P' m.
ProjectorSpec complement(const ProjectorSpec& spec, const FermatParams& params,
                         long long max_enum = default_enumeration_limit);

GradedVirtualModule apply_projector(const ProjectorSpec& spec,
                                    const GradedVirtualModule& m);

/* Middle cohomology H^n as a G-module: multiplicity 1 at (weight n, chi) for
 * every chi in A_d^n.  With primitive_only = false and n even, one extra
 * trivial-character class (the power of the hyperplane class) is included.
 */
GradedVirtualModule module_H_middle(const FermatParams& params,
                                    bool primitive_only = true,
                                    long long max_enum = default_enumeration_limit);

/* Cohomology supported on the codimension-p coordinate sections, pure of
 * weight 2p, for the interesting case 2p - 1 = n.
 *   n = 1: sum over the three cusps' hyperplanes of the B_i eigenspaces;
 *          each chi gets multiplicity #{i : chi in B_i} (so the trivial
 *          character gets 3) and the total dimension is 3d.
 *   n > 1: the group acts trivially on the C(n+2, p) components, so the
 *          trivial character carries everything.
 */
GradedVirtualModule module_support(const FermatParams& params, int p,
                                   long long max_enum = default_enumeration_limit);

} // namespace fermat

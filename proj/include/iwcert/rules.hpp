#pragma once

// Closed registry of the justification rules certificates may cite. Each
// rule is one theorem from the literature; the summary states it and
// carries the attribution. Certificates store the string ids, so the
// verifier can reject an unknown id as a verification failure rather
// than a parse error.

#include <optional>
#include <string_view>
#include <vector>

namespace iwcert {

enum class Rule {
    // p-class number control in towers.
    IwasawaDescent,      // totally-ramified-at-one-prime descent of "p divides h"
    FukudaStability,     // stable p-class number at consecutive layers => stable forever
    ItoClassNumber,      // h(Q(sqrt(1-p))) and h(Q(sqrt(4-p))) are prime to p

    // Structure of the unramified module over the full multiple tower.
    MinardiPseudonull,        // imaginary quadratic, p not dividing h => pseudo-null
    CmPseudonullCriterion,    // CM criterion: p split, p not dividing h, vanishing plus-part invariants
    KummerSplitting,          // complete splitting in Q(mu_p, p^(1/p)) via a power residue
    UnramifiedOverCyclotomic, // p split in k => full tower unramified over the cyclotomic one
    SplitLambdaOneTrivial,    // p split in imaginary quadratic k, lambda_p = 1 => module vanishes
    RankDegreeBound,          // surjection onto Z_p^(lambda - r2); trivial module forces degree <= 6

    // Lambda inputs.
    FerreroKidaLambda2,  // lambda_2(Q(sqrt(-q))) from q mod 16
    KidaFormula,         // Riemann-Hurwitz for lambda-minus in p-extensions

    // Galois-theoretic consequences.
    NonfreeFromPseudonull,    // p split + pseudo-null => unramified pro-p group not free non-abelian
    MizusawaOzakiNonabelian,  // p = 2, q = 31 (mod 32) => non-abelian unramified pro-2 group
    OkanoNonabelian,          // non-abelianness for the certified degree-2p composites

    // Standing conjectures known for abelian fields.
    BrumerLeopoldt,       // Leopoldt's conjecture (Brumer) => Gal(k~/k) = Z_p^(r2+1)
    FerreroWashingtonMu,  // mu = 0 for abelian fields
};

// Stable ASCII identifier used inside certificates.
std::string_view rule_id(Rule r);

// One-line statement with attribution, used by the text renderer.
std::string_view rule_summary(Rule r);

std::optional<Rule> rule_from_id(std::string_view id);

const std::vector<Rule>& all_rules();

}  // namespace iwcert

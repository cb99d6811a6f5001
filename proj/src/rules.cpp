#include "iwcert/rules.hpp"

#include <array>

#include "iwcert/errors.hpp"

namespace iwcert {

namespace {

struct RuleEntry {
    Rule rule;
    std::string_view id;
    std::string_view summary;
};

constexpr std::array<RuleEntry, 16> registry{{
    {Rule::IwasawaDescent, "iwasawa_descent",
     "in a p-extension totally ramified at exactly one prime, p divides the upper class "
     "number only if it divides the lower one (Iwasawa)"},
    {Rule::FukudaStability, "fukuda_stability",
     "equal p-class numbers at two consecutive layers of a Z_p-extension stay equal up "
     "the whole tower, so prime-to-p class numbers give lambda = mu = nu = 0 (Fukuda)"},
    {Rule::ItoClassNumber, "ito_class_number",
     "the class numbers of Q(sqrt(1-p)) and Q(sqrt(4-p)) are prime to p (Ito)"},
    {Rule::MinardiPseudonull, "minardi_pseudonull",
     "for an imaginary quadratic field with class number prime to p, the unramified "
     "module over the composite of all Z_p-extensions is pseudo-null (Minardi)"},
    {Rule::CmPseudonullCriterion, "cm_pseudonull_criterion",
     "for a CM field in which p > 2 splits completely, class number prime to p together "
     "with lambda = mu = nu = 0 for the cyclotomic tower of the maximal real subfield "
     "forces the unramified module of the full tower to be pseudo-null"},
    {Rule::KummerSplitting, "kummer_splitting",
     "an odd prime ell splits completely in Q(mu_p, p^(1/p)) iff ell = 1 (mod p) and "
     "p^((ell-1)/p) = 1 (mod ell)"},
    {Rule::UnramifiedOverCyclotomic, "unramified_over_cyclotomic",
     "when p splits completely in k, the composite of all Z_p-extensions of k is "
     "unramified over the cyclotomic one"},
    {Rule::SplitLambdaOneTrivial, "split_lambda_one_trivial",
     "if p splits in the imaginary quadratic k and lambda_p(k) = 1 with mu = 0, the "
     "unramified module over the composite of all Z_p-extensions vanishes"},
    {Rule::RankDegreeBound, "rank_degree_bound",
     "the unramified module surjects onto Z_p^(lambda - r2); a totally imaginary field "
     "with p split completely, Leopoldt valid and vanishing module has degree <= 6"},
    {Rule::FerreroKidaLambda2, "ferrero_kida_lambda2",
     "for prime q = 7 (mod 8): lambda_2(Q(sqrt(-q))) = 1 if q = 7 (mod 16) and >= 3 if "
     "q = 15 (mod 16) (Ferrero, Kida)"},
    {Rule::KidaFormula, "kida_formula",
     "Riemann-Hurwitz formula for lambda-minus in p-extensions of CM fields; with the "
     "auxiliary prime inert in F it collapses to lambda(k) = p * lambda(F) (Kida)"},
    {Rule::NonfreeFromPseudonull, "nonfree_from_pseudonull",
     "if p splits completely in k and the unramified module of the full tower is "
     "pseudo-null, the unramified pro-p group over the cyclotomic tower is not a "
     "non-abelian free pro-p group"},
    {Rule::MizusawaOzakiNonabelian, "mizusawa_ozaki_nonabelian",
     "for k = Q(sqrt(-q)) with prime q = 31 (mod 32), the unramified pro-2 group over "
     "the cyclotomic Z_2-extension is non-abelian (Mizusawa, Ozaki)"},
    {Rule::OkanoNonabelian, "okano_nonabelian",
     "non-abelianness of the unramified pro-p group over the cyclotomic tower for the "
     "certified degree-2p composite fields (Okano)"},
    {Rule::BrumerLeopoldt, "brumer_leopoldt",
     "Leopoldt's conjecture holds for abelian fields, so Gal over k of the composite of "
     "all Z_p-extensions is Z_p^(r2+1) (Brumer)"},
    {Rule::FerreroWashingtonMu, "ferrero_washington_mu",
     "mu = 0 for the cyclotomic Z_p-extension of any abelian field (Ferrero, Washington)"},
}};

}  // namespace

std::string_view rule_id(Rule r) {
    for (const RuleEntry& entry : registry)
        if (entry.rule == r) return entry.id;
    throw ConsistencyError("rule_id: rule missing from registry");
}

std::string_view rule_summary(Rule r) {
    for (const RuleEntry& entry : registry)
        if (entry.rule == r) return entry.summary;
    throw ConsistencyError("rule_summary: rule missing from registry");
}

std::optional<Rule> rule_from_id(std::string_view id) {
    for (const RuleEntry& entry : registry)
        if (entry.id == id) return entry.rule;
    return std::nullopt;
}

const std::vector<Rule>& all_rules() {
    static const std::vector<Rule> rules = [] {
        std::vector<Rule> out;
        out.reserve(registry.size());
        for (const RuleEntry& entry : registry) out.push_back(entry.rule);
        return out;
    }();
    return rules;
}

}  // namespace iwcert

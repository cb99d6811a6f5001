#include "iwcert/certifier.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "iwcert/arith.hpp"
#include "iwcert/errors.hpp"
#include "iwcert/invariants.hpp"
#include "iwcert/rules.hpp"

namespace iwcert {

std::string_view claim_subject_id(ClaimSubject s) {
    switch (s) {
        case ClaimSubject::XTrivial:
            return "x_trivial";
        case ClaimSubject::XPseudoNull:
            return "x_pseudo_null";
        case ClaimSubject::XNonzero:
            return "x_nonzero";
        case ClaimSubject::GNonabelian:
            return "g_nonabelian";
        case ClaimSubject::GNonfree:
            return "g_nonfree";
    }
    throw ConsistencyError("claim_subject_id: unhandled subject");
}

std::optional<ClaimSubject> claim_subject_from_id(std::string_view id) {
    for (ClaimSubject s :
         {ClaimSubject::XTrivial, ClaimSubject::XPseudoNull, ClaimSubject::XNonzero,
          ClaimSubject::GNonabelian, ClaimSubject::GNonfree}) {
        if (claim_subject_id(s) == id) return s;
    }
    return std::nullopt;
}

namespace {

namespace cite {
constexpr const char* brumer =
    "Brumer: Leopoldt's conjecture holds for abelian number fields";
constexpr const char* ferrero_washington =
    "Ferrero-Washington: mu = 0 for the cyclotomic tower of an abelian field";
constexpr const char* ferrero_kida =
    "Ferrero, Kida: lambda_2 of Q(sqrt(-q)), q = 7 (mod 8), read off q mod 16";
constexpr const char* mizusawa_ozaki =
    "Mizusawa-Ozaki: non-abelian unramified pro-2 group for Q(sqrt(-q)), q = 31 (mod 32)";
constexpr const char* okano =
    "Okano: non-abelianness criterion covering the certified degree-2p composites";
constexpr const char* ito =
    "Ito: the class numbers of Q(sqrt(1-p)) and Q(sqrt(4-p)) are prime to p";
constexpr const char* lambda3_of_disc47 =
    "lambda_3(Q(sqrt(-47))) = 2, computed with Mizusawa's Iwasawa invariant software";
}  // namespace cite

// The one literature-sourced number in the system; the p = 3 pipeline
// uses Q(sqrt(-47)) precisely because this value is on record.
constexpr std::int64_t pinned_lambda3_minus_disc47 = 2;
constexpr std::int64_t pinned_disc_for_lambda3 = -47;

std::string rid(Rule r) { return std::string(rule_id(r)); }

void push(Claim& c, const char* key, std::int64_t value) {
    c.witnesses.emplace_back(key, value);
}

bool prime64(std::int64_t n) { return n >= 2 && is_prime(static_cast<std::uint64_t>(n)); }

// ---------------------------------------------------------------------
// Claim builders. Each derives every witness from (p, field) alone and
// throws PremiseError naming any failed hypothesis. verify() reuses the
// builders, so a stored claim is always diffed against a recomputation.
// ---------------------------------------------------------------------

// X pseudo-null for an imaginary quadratic field: p does not divide h.
Claim build_minardi_claim(std::int64_t p, const QuadField& k) {
    const std::int64_t h = class_number_checked(k);
    if (h % p == 0)
        throw PremiseError("p does not divide h_k", "h = " + std::to_string(h) +
                                                        " is divisible by p = " +
                                                        std::to_string(p));
    Claim c;
    c.subject = ClaimSubject::XPseudoNull;
    c.rules = {rid(Rule::MinardiPseudonull)};
    push(c, witness::h_f, h);
    return c;
}

// X nonzero for k = Q(sqrt(-q)), q = 15 (mod 16): lambda_2 >= 3 while
// r2 = 1, so the module surjects onto Z_2^2.
Claim build_p2_nonzero_claim(const QuadField& k) {
    const std::int64_t q = -k.disc;
    if (!prime64(q))
        throw PremiseError("q prime", "|disc| = " + std::to_string(q) + " is not prime");
    if (imod(q, 16) != 15)
        throw PremiseError("q = 15 (mod 16)", "q = " + std::to_string(q) + " is " +
                                                  std::to_string(imod(q, 16)) + " (mod 16)");
    if (splitting_in_quad(k, 2) != SplittingType::Split)
        throw ConsistencyError("build_p2_nonzero_claim: 2 must split when q = 15 (mod 16)");
    const LambdaDatum lambda = lambda2_rule(q);
    if (lambda.kind != LambdaKind::LowerBound)
        throw ConsistencyError("build_p2_nonzero_claim: expected a lower bound from the rule");
    const std::int64_t rank = surjection_rank(lambda.value, 1);
    if (rank < 1)
        throw PremiseError("positive quotient rank",
                           "lambda bound " + std::to_string(lambda.value) + " - r2 = 1 leaves no free quotient");
    Claim c;
    c.subject = ClaimSubject::XNonzero;
    c.rules = {rid(Rule::FerreroKidaLambda2), rid(Rule::FerreroWashingtonMu),
               rid(Rule::UnramifiedOverCyclotomic), rid(Rule::BrumerLeopoldt),
               rid(Rule::RankDegreeBound)};
    push(c, witness::q_mod_16, 15);
    push(c, witness::splitting_p_in_f, 1);
    push(c, witness::lambda_lower_bound, lambda.value);
    push(c, witness::r2, 1);
    push(c, witness::quotient_rank, rank);
    c.external = {cite::ferrero_kida, cite::ferrero_washington, cite::brumer};
    return c;
}

// X pseudo-null for the degree-2p composite: conditions (1)-(3) on ell
// plus p split in F with h_F prime to p. describe_composite_field does
// all the premise work and names broken conditions.
Claim build_cm_pseudonull_claim(std::int64_t p, const QuadField& f, std::int64_t ell) {
    const EllWitness w = make_ell_witness(p, f, ell);
    describe_composite_field(p, f, w);
    const std::int64_t h = class_number_checked(f);
    Claim c;
    c.subject = ClaimSubject::XPseudoNull;
    c.rules = {rid(Rule::CmPseudonullCriterion), rid(Rule::IwasawaDescent),
               rid(Rule::FukudaStability), rid(Rule::KummerSplitting)};
    push(c, witness::h_f, h);
    push(c, witness::splitting_p_in_f, 1);
    push(c, witness::cond1_symbol, w.cond1_symbol);
    push(c, witness::cond2_residue, w.cond2_residue);
    push(c, witness::cond3_congruence, w.cond3_congruence);
    push(c, witness::cond3_residue, w.cond3_residue);
    if (p >= 5) c.external = {cite::ito};
    return c;
}

// X nonzero for the p = 3 composite over Q(sqrt(-47)): the recorded
// lambda_3(F) = 2 scales to 6 by Kida (ell inert), and 6 - r2 = 3 > 0.
Claim build_kida_nonzero_claim(std::int64_t p, const QuadField& f, std::int64_t ell) {
    if (p != 3 || f.disc != pinned_disc_for_lambda3)
        throw PremiseError("lambda datum availability",
                           "the exact-lambda route needs the recorded lambda_3 of "
                           "Q(sqrt(-47)); got p = " + std::to_string(p) + ", disc = " +
                               std::to_string(f.disc));
    const EllWitness w = make_ell_witness(p, f, ell);
    if (w.cond1_symbol != -1)
        throw PremiseError("condition (1)",
                           "ell = " + std::to_string(ell) + " is not inert in F");
    if (splitting_in_quad(f, p) != SplittingType::Split)
        throw PremiseError("p splits in F", "kronecker(disc, p) != 1");
    if (!splits_completely_kummer(p, ell).pass)
        throw PremiseError("condition (3)",
                           "p does not split completely in the composite");
    const LambdaDatum base = paper_lambda_datum(pinned_lambda3_minus_disc47,
                                                cite::lambda3_of_disc47);
    const LambdaDatum total = kida_composite_lambda(p, base.value, SplittingType::Inert);
    const std::int64_t complex_places = p;  // degree 2p, totally imaginary
    const std::int64_t rank = surjection_rank(total.value, complex_places);
    if (rank < 1)
        throw PremiseError("positive quotient rank", "lambda - r2 = " + std::to_string(rank));
    Claim c;
    c.subject = ClaimSubject::XNonzero;
    c.rules = {rid(Rule::KidaFormula), rid(Rule::FerreroWashingtonMu),
               rid(Rule::UnramifiedOverCyclotomic), rid(Rule::BrumerLeopoldt),
               rid(Rule::RankDegreeBound)};
    push(c, witness::lambda_minus_f, base.value);
    push(c, witness::lambda_exact, total.value);
    push(c, witness::r2, complex_places);
    push(c, witness::quotient_rank, rank);
    c.external = {cite::lambda3_of_disc47, cite::ferrero_washington, cite::brumer};
    return c;
}

// X nonzero for p >= 5 composites: degree 2p > 6 with p split completely
// already rules out a vanishing module; no lambda value needed.
Claim build_degree_nonzero_claim(std::int64_t p, const QuadField& f, std::int64_t ell) {
    if (splitting_in_quad(f, p) != SplittingType::Split)
        throw PremiseError("p splits in F", "kronecker(disc, p) != 1");
    if (!splits_completely_kummer(p, ell).pass)
        throw PremiseError("condition (3)", "p does not split completely in the composite");
    const std::int64_t degree = 2 * p;
    if (!nontrivial_by_degree(degree))
        throw PremiseError("degree bound",
                           "degree " + std::to_string(degree) + " does not exceed 6");
    Claim c;
    c.subject = ClaimSubject::XNonzero;
    c.rules = {rid(Rule::RankDegreeBound), rid(Rule::UnramifiedOverCyclotomic),
               rid(Rule::BrumerLeopoldt)};
    push(c, witness::degree, degree);
    push(c, witness::r2, p);
    c.external = {cite::brumer};
    return c;
}

// X trivial, route (a): p inert or ramified in k and p does not divide h.
Claim build_trivial_route_a(std::int64_t p, const QuadField& k) {
    const SplittingType split = splitting_in_quad(k, p);
    if (split == SplittingType::Split)
        throw PremiseError("p not split in k",
                           "this route needs a single prime of k above p");
    const std::int64_t h = class_number_checked(k);
    if (h % p == 0)
        throw PremiseError("p does not divide h_k",
                           "h = " + std::to_string(h) + " is divisible by p = " +
                               std::to_string(p));
    Claim c;
    c.subject = ClaimSubject::XTrivial;
    c.rules = {rid(Rule::IwasawaDescent)};
    push(c, witness::splitting_p_in_f, split == SplittingType::Inert ? -1 : 0);
    push(c, witness::h_f, h);
    return c;
}

// X trivial, route (b): p = 2 split in k = Q(sqrt(-q)) with q = 7
// (mod 16), where lambda_2 = 1 exactly and the module vanishes.
Claim build_trivial_route_b(std::int64_t p, const QuadField& k) {
    if (p != 2) throw PremiseError("p = 2", "the q = 7 (mod 16) route is a p = 2 statement");
    const std::int64_t q = -k.disc;
    if (!prime64(q))
        throw PremiseError("q prime", "|disc| = " + std::to_string(q) + " is not prime");
    if (imod(q, 16) != 7)
        throw PremiseError("q = 7 (mod 16)", "q = " + std::to_string(q) + " is " +
                                                 std::to_string(imod(q, 16)) + " (mod 16)");
    if (splitting_in_quad(k, 2) != SplittingType::Split)
        throw ConsistencyError("build_trivial_route_b: 2 must split when q = 7 (mod 8)");
    const std::int64_t h = class_number_checked(k);
    if (h % 2 == 0)
        throw ConsistencyError(
            "build_trivial_route_b: prime discriminant with even h contradicts genus theory");
    const LambdaDatum lambda = lambda2_rule(q);
    if (lambda.kind != LambdaKind::Exact || lambda.value != 1)
        throw ConsistencyError("build_trivial_route_b: congruence rule drifted");
    Claim c;
    c.subject = ClaimSubject::XTrivial;
    c.rules = {rid(Rule::SplitLambdaOneTrivial), rid(Rule::FerreroKidaLambda2),
               rid(Rule::FerreroWashingtonMu)};
    push(c, witness::q_mod_16, 7);
    push(c, witness::splitting_p_in_f, 1);
    push(c, witness::lambda_exact, lambda.value);
    push(c, witness::h_f, h);
    c.external = {cite::ferrero_kida, cite::ferrero_washington};
    return c;
}

// G not non-abelian free for p = 2, q = 31 (mod 32): 2 splits and the
// module is pseudo-null by Minardi (h odd by genus theory).
Claim build_nonfree_quad(std::int64_t p, const QuadField& k) {
    if (p != 2) throw PremiseError("p = 2", "the quadratic nonfree family is a p = 2 result");
    const std::int64_t q = -k.disc;
    if (!prime64(q))
        throw PremiseError("q prime", "|disc| = " + std::to_string(q) + " is not prime");
    if (imod(q, 32) != 31)
        throw PremiseError("q = 31 (mod 32)", "q = " + std::to_string(q) + " is " +
                                                  std::to_string(imod(q, 32)) + " (mod 32)");
    if (splitting_in_quad(k, 2) != SplittingType::Split)
        throw ConsistencyError("build_nonfree_quad: 2 must split when q = 31 (mod 32)");
    const std::int64_t h = class_number_checked(k);
    if (h % 2 == 0)
        throw PremiseError("p does not divide h_k", "h = " + std::to_string(h) + " is even");
    Claim c;
    c.subject = ClaimSubject::GNonfree;
    c.rules = {rid(Rule::NonfreeFromPseudonull), rid(Rule::MinardiPseudonull)};
    push(c, witness::h_f, h);
    push(c, witness::splitting_p_in_f, 1);
    return c;
}

// G non-abelian for p = 2, q = 31 (mod 32): cited wholesale.
Claim build_nonabelian_quad(std::int64_t p, const QuadField& k) {
    if (p != 2) throw PremiseError("p = 2", "the quadratic non-abelian family is a p = 2 result");
    const std::int64_t q = -k.disc;
    if (!prime64(q))
        throw PremiseError("q prime", "|disc| = " + std::to_string(q) + " is not prime");
    if (imod(q, 32) != 31)
        throw PremiseError("q = 31 (mod 32)", "q = " + std::to_string(q) + " is " +
                                                  std::to_string(imod(q, 32)) + " (mod 32)");
    Claim c;
    c.subject = ClaimSubject::GNonabelian;
    c.rules = {rid(Rule::MizusawaOzakiNonabelian)};
    push(c, witness::q_mod_32, 31);
    c.external = {cite::mizusawa_ozaki};
    return c;
}

// G not non-abelian free for the composites: needs p split completely
// plus the certificate's own pseudo-null claim (checked by the caller).
Claim build_nonfree_composite(std::int64_t p, const QuadField& f, std::int64_t ell) {
    if (splitting_in_quad(f, p) != SplittingType::Split)
        throw PremiseError("p splits in F", "kronecker(disc, p) != 1");
    if (!splits_completely_kummer(p, ell).pass)
        throw PremiseError("condition (3)", "p does not split completely in the composite");
    Claim c;
    c.subject = ClaimSubject::GNonfree;
    c.rules = {rid(Rule::NonfreeFromPseudonull)};
    push(c, witness::splitting_p_in_f, 1);
    return c;
}

// G non-abelian for the composites (Okano). For p = 3 the hypothesis
// lambda_3(F) = 2 > 0 enters, carried as the pinned literature value.
Claim build_nonabelian_composite(std::int64_t p, const QuadField& f) {
    if (p < 3 || p % 2 == 0 || !prime64(p))
        throw PremiseError("p odd prime", "composite non-abelian claims need odd p");
    Claim c;
    c.subject = ClaimSubject::GNonabelian;
    c.rules = {rid(Rule::OkanoNonabelian)};
    if (p == 3) {
        if (f.disc != pinned_disc_for_lambda3)
            throw PremiseError("lambda datum availability",
                               "the p = 3 route needs the recorded lambda_3 of Q(sqrt(-47))");
        push(c, witness::lambda_minus_f, pinned_lambda3_minus_disc47);
        c.external = {cite::okano, cite::lambda3_of_disc47};
    } else {
        c.external = {cite::okano};
    }
    return c;
}

// ---------------------------------------------------------------------
// Verification: shape checks, then rebuild-and-diff per claim.
// ---------------------------------------------------------------------

void validate_certificate(const Certificate& cert) {
    if (!prime64(cert.p)) throw PremiseError("p prime", "p = " + std::to_string(cert.p));
    if (cert.search_limit < 0)
        throw PremiseError("search limit", "negative limit " + std::to_string(cert.search_limit));
    const QuadField& base = cert.field.base;
    if (base.disc >= 0 || !is_fundamental_discriminant(base.disc))
        throw PremiseError("field discriminant",
                           std::to_string(base.disc) + " is not a negative fundamental discriminant");
    if (quad_field_from_disc(base.disc) != base)
        throw PremiseError("field radicand", "radicand " + std::to_string(base.radicand) +
                                                 " does not match discriminant " +
                                                 std::to_string(base.disc));
    if (cert.field.kind == FieldKind::ImaginaryQuadratic) {
        if (cert.field.ell != 0)
            throw PremiseError("field shape", "quadratic field carrying an auxiliary prime");
        if (cert.field.degree != 2)
            throw PremiseError("field degree", "quadratic field must have degree 2");
    } else {
        if (cert.p == 2)
            throw PremiseError("field shape", "composite certificates need odd p");
        if (cert.field.degree != 2 * cert.p)
            throw PremiseError("field degree",
                               "degree " + std::to_string(cert.field.degree) + " != 2p");
        if (!prime64(cert.field.ell) || cert.field.ell == cert.p || cert.field.ell == 2)
            throw PremiseError("auxiliary prime",
                               "ell must be an odd prime different from p");
        if (imod(cert.field.ell, cert.p) != 1)
            throw PremiseError("auxiliary prime congruence",
                               "ell = " + std::to_string(cert.field.ell) + " is not 1 (mod p)");
    }
    if (cert.claims.empty()) throw PremiseError("claims", "certificate carries no claims");
    for (std::size_t i = 0; i < cert.claims.size(); ++i)
        for (std::size_t j = i + 1; j < cert.claims.size(); ++j)
            if (cert.claims[i].subject == cert.claims[j].subject)
                throw PremiseError("claims",
                                   "duplicate claim subject '" +
                                       std::string(claim_subject_id(cert.claims[i].subject)) + "'");
}

Claim rebuild_claim(const Certificate& cert, const Claim& stored) {
    const bool quadratic = cert.field.kind == FieldKind::ImaginaryQuadratic;
    const QuadField& f = cert.field.base;
    switch (stored.subject) {
        case ClaimSubject::XPseudoNull:
            return quadratic ? build_minardi_claim(cert.p, f)
                             : build_cm_pseudonull_claim(cert.p, f, cert.field.ell);
        case ClaimSubject::XNonzero:
            if (quadratic) {
                if (cert.p != 2)
                    throw PremiseError("claim route",
                                       "the quadratic nonzero family is a p = 2 result");
                return build_p2_nonzero_claim(f);
            }
            if (stored.cites_rule(rule_id(Rule::KidaFormula)))
                return build_kida_nonzero_claim(cert.p, f, cert.field.ell);
            return build_degree_nonzero_claim(cert.p, f, cert.field.ell);
        case ClaimSubject::XTrivial:
            if (!quadratic)
                throw PremiseError("claim route",
                                   "triviality claims apply to imaginary quadratic fields");
            if (stored.cites_rule(rule_id(Rule::SplitLambdaOneTrivial)))
                return build_trivial_route_b(cert.p, f);
            return build_trivial_route_a(cert.p, f);
        case ClaimSubject::GNonfree:
            if (quadratic) return build_nonfree_quad(cert.p, f);
            if (cert.find_claim(ClaimSubject::XPseudoNull) == nullptr)
                throw PremiseError("pseudo-null sibling claim",
                                   "the composite nonfree claim relies on this "
                                   "certificate's own pseudo-null claim");
            return build_nonfree_composite(cert.p, f, cert.field.ell);
        case ClaimSubject::GNonabelian:
            return quadratic ? build_nonabelian_quad(cert.p, f)
                             : build_nonabelian_composite(cert.p, f);
    }
    throw ConsistencyError("rebuild_claim: unhandled subject");
}

std::string join_ids(const std::vector<std::string>& ids) {
    std::string out = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) out += ", ";
        out += ids[i];
    }
    return out + "]";
}

std::optional<std::string> diff_claims(const Claim& stored, const Claim& expected) {
    if (stored.rules != expected.rules)
        return "rule list mismatch: expected " + join_ids(expected.rules) + ", found " +
               join_ids(stored.rules);
    for (std::size_t i = 0; i < stored.witnesses.size(); ++i)
        for (std::size_t j = i + 1; j < stored.witnesses.size(); ++j)
            if (stored.witnesses[i].first == stored.witnesses[j].first)
                return "duplicate witness '" + stored.witnesses[i].first + "'";
    for (const auto& [key, value] : expected.witnesses) {
        const std::int64_t* got = stored.find_witness(key);
        if (got == nullptr) return "missing witness '" + key + "'";
        if (*got != value)
            return "witness '" + key + "': stored " + std::to_string(*got) +
                   ", recomputed " + std::to_string(value);
    }
    for (const auto& [key, value] : stored.witnesses) {
        (void)value;
        if (expected.find_witness(key) == nullptr) return "unexpected witness '" + key + "'";
    }
    if (!expected.external.empty() && stored.external.empty())
        return "missing citation for an externally sourced premise";
    return std::nullopt;
}

// Runs verify() on a freshly built certificate before it leaves the
// pipeline; a failure here is a bug, not bad input.
void emit(CertificateStream& stream, Certificate cert) {
    const VerifyResult check = verify(cert);
    if (!check.ok)
        throw ConsistencyError("freshly built certificate failed verification: " +
                               check.failure);
    stream.items.push_back(std::move(cert));
}

}  // namespace

VerifyResult verify(const Certificate& cert) {
    try {
        validate_certificate(cert);
    } catch (const std::exception& e) {
        return VerifyResult{false, std::string("certificate: ") + e.what()};
    }
    for (std::size_t i = 0; i < cert.claims.size(); ++i) {
        const Claim& stored = cert.claims[i];
        const std::string where = "claim[" + std::to_string(i) + "] (" +
                                  std::string(claim_subject_id(stored.subject)) + "): ";
        for (const std::string& id : stored.rules)
            if (!rule_from_id(id)) return VerifyResult{false, where + "unknown rule '" + id + "'"};
        try {
            const Claim expected = rebuild_claim(cert, stored);
            if (auto mismatch = diff_claims(stored, expected))
                return VerifyResult{false, where + *mismatch};
        } catch (const std::exception& e) {
            return VerifyResult{false, where + e.what()};
        }
    }
    return VerifyResult{true, ""};
}

CertificateStream certify_nonzero_pseudonull(std::int64_t p, std::int64_t budget,
                                             std::int64_t max_count) {
    if (!prime64(p)) throw std::domain_error("certify_nonzero_pseudonull: p must be prime");
    if (budget < 2) throw std::domain_error("certify_nonzero_pseudonull: budget must be >= 2");
    if (max_count < 0) throw std::domain_error("certify_nonzero_pseudonull: max_count < 0");
    CertificateStream stream;
    stream.limit = budget;
    if (p == 2) {
        for (std::int64_t q : primes_in_class(16, 15, budget)) {
            if (max_count > 0 &&
                static_cast<std::int64_t>(stream.items.size()) >= max_count)
                break;
            ++stream.candidates_scanned;
            const QuadField k = quad_field_from_radicand(-q);
            Certificate cert;
            cert.p = 2;
            cert.field = FieldDescriptor{FieldKind::ImaginaryQuadratic, k, 0, 2};
            cert.search_limit = budget;
            cert.claims = {build_minardi_claim(2, k), build_p2_nonzero_claim(k)};
            emit(stream, std::move(cert));
        }
        return stream;
    }
    const BaseFieldChoice base = choose_base_field(p);
    const EllSearch search = find_ell(p, base.field, budget);
    stream.candidates_scanned = search.candidates;
    for (const EllWitness& w : search.found) {
        if (max_count > 0 && static_cast<std::int64_t>(stream.items.size()) >= max_count)
            break;
        Certificate cert;
        cert.p = p;
        cert.field = describe_composite_field(p, base.field, w);
        cert.search_limit = budget;
        Claim pseudo = build_cm_pseudonull_claim(p, base.field, w.ell);
        Claim nonzero = (p == 3) ? build_kida_nonzero_claim(p, base.field, w.ell)
                                 : build_degree_nonzero_claim(p, base.field, w.ell);
        cert.claims = {std::move(pseudo), std::move(nonzero)};
        emit(stream, std::move(cert));
    }
    return stream;
}

CertificateStream certify_nonfree(std::int64_t p, std::int64_t budget, std::int64_t max_count) {
    if (!prime64(p)) throw std::domain_error("certify_nonfree: p must be prime");
    if (budget < 2) throw std::domain_error("certify_nonfree: budget must be >= 2");
    if (max_count < 0) throw std::domain_error("certify_nonfree: max_count < 0");
    if (p == 2) {
        CertificateStream stream;
        stream.limit = budget;
        for (std::int64_t q : primes_in_class(32, 31, budget)) {
            if (max_count > 0 &&
                static_cast<std::int64_t>(stream.items.size()) >= max_count)
                break;
            ++stream.candidates_scanned;
            const QuadField k = quad_field_from_radicand(-q);
            Certificate cert;
            cert.p = 2;
            cert.field = FieldDescriptor{FieldKind::ImaginaryQuadratic, k, 0, 2};
            cert.search_limit = budget;
            cert.claims = {build_nonfree_quad(2, k), build_nonabelian_quad(2, k)};
            emit(stream, std::move(cert));
        }
        return stream;
    }
    CertificateStream stream = certify_nonzero_pseudonull(p, budget, max_count);
    for (Certificate& cert : stream.items) {
        cert.claims.push_back(build_nonfree_composite(p, cert.field.base, cert.field.ell));
        cert.claims.push_back(build_nonabelian_composite(p, cert.field.base));
        const VerifyResult check = verify(cert);
        if (!check.ok)
            throw ConsistencyError("freshly extended certificate failed verification: " +
                                   check.failure);
    }
    return stream;
}

std::optional<Claim> classify_trivial(std::int64_t p, const QuadField& k) {
    if (!prime64(p)) throw std::domain_error("classify_trivial: p must be prime");
    if (k.disc >= 0 || !is_fundamental_discriminant(k.disc))
        throw std::domain_error("classify_trivial: imaginary quadratic field required");
    try {
        if (splitting_in_quad(k, p) != SplittingType::Split)
            return build_trivial_route_a(p, k);
        if (p == 2) {
            const std::int64_t q = -k.disc;
            if (prime64(q) && imod(q, 16) == 7) return build_trivial_route_b(p, k);
        }
        return std::nullopt;
    } catch (const PremiseError&) {
        // A failed premise means "this tool cannot certify triviality
        // here", not an error.
        return std::nullopt;
    }
}

std::optional<Claim> classify_pseudonull_quadratic(std::int64_t p, const QuadField& k) {
    if (!prime64(p)) throw std::domain_error("classify_pseudonull_quadratic: p must be prime");
    if (k.disc >= 0 || !is_fundamental_discriminant(k.disc))
        throw std::domain_error("classify_pseudonull_quadratic: imaginary quadratic field required");
    try {
        return build_minardi_claim(p, k);
    } catch (const PremiseError&) {
        return std::nullopt;
    }
}

CertificateStream classify_sweep(std::int64_t p, std::int64_t limit, ClassifyKind kind,
                                 std::int64_t max_count) {
    if (!prime64(p)) throw std::domain_error("classify_sweep: p must be prime");
    if (limit < 3) throw std::domain_error("classify_sweep: limit must be >= 3");
    if (max_count < 0) throw std::domain_error("classify_sweep: max_count < 0");
    CertificateStream stream;
    stream.limit = limit;
    for (std::int64_t n = 3; n <= limit; ++n) {
        if (max_count > 0 && static_cast<std::int64_t>(stream.items.size()) >= max_count)
            break;
        if (!is_fundamental_discriminant(-n)) continue;
        ++stream.candidates_scanned;
        const QuadField k = quad_field_from_disc(-n);
        const std::optional<Claim> claim = (kind == ClassifyKind::Trivial)
                                               ? classify_trivial(p, k)
                                               : classify_pseudonull_quadratic(p, k);
        if (!claim) continue;
        Certificate cert;
        cert.p = p;
        cert.field = FieldDescriptor{FieldKind::ImaginaryQuadratic, k, 0, 2};
        cert.search_limit = limit;
        cert.claims = {*claim};
        emit(stream, std::move(cert));
    }
    return stream;
}

}  // namespace iwcert

#include "iwcert/invariants.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "iwcert/arith.hpp"
#include "iwcert/errors.hpp"

namespace iwcert {

LambdaDatum lambda2_rule(std::int64_t q) {
    if (q < 2 || !is_prime(static_cast<std::uint64_t>(q)))
        throw std::domain_error("lambda2_rule: q must be prime");
    const std::int64_t r16 = imod(q, 16);
    if (r16 == 7) return LambdaDatum{1, LambdaKind::Exact, LambdaSource::CongruenceRule, ""};
    if (r16 == 15) return LambdaDatum{3, LambdaKind::LowerBound, LambdaSource::CongruenceRule, ""};
    throw std::domain_error("lambda2_rule: q = " + std::to_string(q) + " is " +
                            std::to_string(imod(q, 8)) +
                            " (mod 8); the rule covers q = 7 (mod 8) only");
}

LambdaDatum kida_composite_lambda(std::int64_t p, std::int64_t lambda_minus_f,
                                  SplittingType ell_splitting_in_f) {
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::domain_error("kida_composite_lambda: p must be an odd prime");
    if (lambda_minus_f < 0)
        throw std::domain_error("kida_composite_lambda: lambda must be >= 0");
    if (ell_splitting_in_f != SplittingType::Inert)
        throw UnsupportedConfiguration(
            "kida_composite_lambda: only the inert configuration is implemented; "
            "split or ramified ell would contribute extra places");
    // Inert ell: no prime of F above ell splits in the CM step, so the
    // Riemann-Hurwitz correction terms vanish and lambda scales by the
    // degree p.
    return LambdaDatum{p * lambda_minus_f, LambdaKind::Exact, LambdaSource::KidaFormula, ""};
}

LambdaDatum paper_lambda_datum(std::int64_t value, std::string citation) {
    if (value < 0) throw std::domain_error("paper_lambda_datum: lambda must be >= 0");
    if (citation.empty())
        throw std::domain_error("paper_lambda_datum: a literature value needs a citation");
    return LambdaDatum{value, LambdaKind::Exact, LambdaSource::PaperDatum, std::move(citation)};
}

std::int64_t surjection_rank(std::int64_t lambda, std::int64_t r2) {
    if (lambda < 0) throw std::domain_error("surjection_rank: lambda must be >= 0");
    if (r2 < 0) throw std::domain_error("surjection_rank: r2 must be >= 0");
    return lambda > r2 ? lambda - r2 : 0;
}

bool nontrivial_by_degree(std::int64_t degree) {
    if (degree < 2 || degree % 2 != 0)
        throw std::domain_error(
            "nontrivial_by_degree: a totally imaginary field has even degree >= 2");
    return degree > 6;
}

}  // namespace iwcert

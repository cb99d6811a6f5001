#pragma once

// Lambda-invariant bookkeeping: where a lambda value comes from, whether
// it is exact or only a lower bound, and the small exact formulas the
// certifier consumes (the q mod 16 rule for p = 2, Kida's formula for
// the inert configuration, and the Z_p-rank accounting).

#include <cstdint>
#include <string>

#include "iwcert/quad.hpp"

namespace iwcert {

enum class LambdaKind { Exact, LowerBound };

enum class LambdaSource {
    CongruenceRule,  // read off a congruence on the discriminant
    KidaFormula,     // computed by the Riemann-Hurwitz formula for lambda-minus
    PaperDatum,      // imported from the literature; citation required
};

struct LambdaDatum {
    std::int64_t value = 0;
    LambdaKind kind = LambdaKind::Exact;
    LambdaSource source = LambdaSource::CongruenceRule;
    std::string citation;  // nonempty exactly when source == PaperDatum

    bool operator==(const LambdaDatum&) const = default;
};

// lambda_2 of Q(sqrt(-q)) for a prime q = 7 (mod 8), where 2 splits:
// q = 7 (mod 16) gives exactly 1, q = 15 (mod 16) gives at least 3.
// Any other q is rejected.
LambdaDatum lambda2_rule(std::int64_t q);

// lambda-minus of the degree-2p composite k over the cyclotomic
// Z_p-extension, from lambda-minus of the quadratic subfield F, in the
// configuration this tool certifies: the auxiliary ell inert in F, so no
// split primes above ell contribute and the formula collapses to
// lambda(k) = p * lambda(F). Other splitting types are not supported.
LambdaDatum kida_composite_lambda(std::int64_t p, std::int64_t lambda_minus_f,
                                  SplittingType ell_splitting_in_f);

// Wraps a literature value; the citation must be nonempty.
LambdaDatum paper_lambda_datum(std::int64_t value, std::string citation);

// Rank of the free quotient the unramified module maps onto:
// max(lambda - r2, 0), where r2 is the number of complex places.
std::int64_t surjection_rank(std::int64_t lambda, std::int64_t r2);

// Degree criterion for totally imaginary fields in which p splits
// completely (p odd, Leopoldt holding): a vanishing unramified module
// forces degree <= 6, so degree > 6 certifies nonvanishing. The degree
// of such a field is even; odd input is rejected.
bool nontrivial_by_degree(std::int64_t degree);

}  // namespace iwcert

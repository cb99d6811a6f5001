#pragma once

// Builds and checks certificates. The builders derive every witness from
// (p, field) and throw PremiseError when a hypothesis fails; the search
// pipelines drive them over congruence families; verify() re-derives the
// expected claim from the stored field data and diffs it against what the
// certificate says, so any tampered witness is reported by name.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwcert/certificate.hpp"
#include "iwcert/quad.hpp"

namespace iwcert {

// Output of one search run. When `items` is empty the caller can still
// report how much of the budget was examined.
struct CertificateStream {
    std::vector<Certificate> items;
    std::int64_t limit = 0;
    std::int64_t candidates_scanned = 0;
};

// Fields whose unramified module is provably nonzero and pseudo-null.
//   p = 2:  k = Q(sqrt(-q)) over primes q = 15 (mod 16), q <= budget.
//   p odd:  degree-2p CM composites over auxiliary primes ell <= budget.
// max_count = 0 means no cap. Every emitted certificate has passed
// verify(); emission-time failure is a ConsistencyError.
CertificateStream certify_nonzero_pseudonull(std::int64_t p, std::int64_t budget,
                                             std::int64_t max_count = 0);

// Fields whose unramified pro-p group over the cyclotomic tower is
// non-abelian yet not free: q = 31 (mod 32) quadratics for p = 2, the
// nonzero-pseudonull composites with two extra claims for p odd.
CertificateStream certify_nonfree(std::int64_t p, std::int64_t budget,
                                  std::int64_t max_count = 0);

// Classifiers for a single imaginary quadratic field. They return a
// claim when the implemented criteria apply and nullopt otherwise --
// "nullopt" means "this tool cannot decide", never "false".
std::optional<Claim> classify_trivial(std::int64_t p, const QuadField& k);
std::optional<Claim> classify_pseudonull_quadratic(std::int64_t p, const QuadField& k);

enum class ClassifyKind { Trivial, PseudoNull };

// Sweeps fundamental discriminants -3 >= D >= -limit in increasing |D|
// and wraps each positive classification in a certificate.
CertificateStream classify_sweep(std::int64_t p, std::int64_t limit, ClassifyKind kind,
                                 std::int64_t max_count = 0);

struct VerifyResult {
    bool ok = false;
    std::string failure;  // empty iff ok; names the claim and broken witness/premise
};

// Recomputes everything: field well-formedness, class numbers by both
// routes, every stored residue and rank, rule-id membership, citation
// presence and cross-claim dependencies. Never throws.
VerifyResult verify(const Certificate& cert);

}  // namespace iwcert

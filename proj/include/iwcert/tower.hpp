#pragma once

// Criteria on an auxiliary prime ell that make the degree-2p CM field
// k = F * (degree-p subfield of Q(mu_ell)) behave as required: ell inert
// in the imaginary quadratic F, ell inert in the first layer of the
// cyclotomic Z_p-extension of Q, and p splitting completely in k
// (detected via the Kummer field Q(mu_p, p^(1/p))).

#include <cstdint>
#include <string>
#include <vector>

#include "iwcert/quad.hpp"

namespace iwcert {

// Everything needed to re-check one candidate ell offline. All residues
// are stored so a verifier can recompute and compare them one by one.
struct EllWitness {
    std::int64_t p = 0;
    std::int64_t ell = 0;
    std::int64_t disc_f = 0;
    int cond1_symbol = 0;            // kronecker(disc_f, ell); want -1 (inert in F)
    std::int64_t cond2_residue = 0;  // ell^(p-1) mod p^2; want != 1 (inert in Q_1)
    std::int64_t cond3_congruence = 0;  // ell mod p; want 1
    std::int64_t cond3_residue = 0;  // p^((ell-1)/p) mod ell when defined; want 1

    bool operator==(const EllWitness&) const = default;
};

struct ResidueCheck {
    bool pass = false;
    std::int64_t residue = 0;

    bool operator==(const ResidueCheck&) const = default;
};

struct KummerCheck {
    bool pass = false;
    std::int64_t congruence = 0;  // ell mod p
    std::int64_t residue = 0;     // p^((ell-1)/p) mod ell, 0 if congruence fails

    bool operator==(const KummerCheck&) const = default;
};

// The field a certificate talks about: either the imaginary quadratic
// base itself, or the degree-2p CM composite built from base and ell.
enum class FieldKind { ImaginaryQuadratic, CompositeCm };

struct FieldDescriptor {
    FieldKind kind = FieldKind::ImaginaryQuadratic;
    QuadField base;
    std::int64_t ell = 0;  // 0 unless kind == CompositeCm
    std::int64_t degree = 2;

    bool operator==(const FieldDescriptor&) const = default;
};

// ell inert in the first layer of the cyclotomic Z_p-extension of Q,
// decided by ell^(p-1) mod p^2 != 1 (i.e. ell is not a p-th power mod
// p^2). Requires p an odd prime, ell a prime different from p.
ResidueCheck inert_in_first_layer(std::int64_t p, std::int64_t ell);

// ell splits completely in Q(mu_p, p^(1/p)) iff ell = 1 (mod p) and p is
// a p-th power residue mod ell, tested as p^((ell-1)/p) = 1 (mod ell).
KummerCheck splits_completely_kummer(std::int64_t p, std::int64_t ell);

// Computes all four stored residues for (p, F, ell) without judging them.
EllWitness make_ell_witness(std::int64_t p, const QuadField& f, std::int64_t ell);

// Pure predicate on the stored residues: all three conditions hold.
bool ell_witness_holds(const EllWitness& w);

// Scan result; `candidates` counts the primes = 1 (mod p) examined, the
// partial search state reported when nothing is found within the budget.
struct EllSearch {
    std::vector<EllWitness> found;
    std::int64_t limit = 0;
    std::int64_t candidates = 0;
};

// All primes ell <= limit passing conditions (1)-(3) for (p, F), in
// increasing order. Requires p an odd prime that splits in F (checked;
// PremiseError otherwise) and limit >= p.
EllSearch find_ell(std::int64_t p, const QuadField& f, std::int64_t limit);

// Re-derives every premise for the degree-2p composite field from
// (p, f, w.ell), compares against the stored residues, and only then
// produces the descriptor. PremiseError names the first broken condition.
FieldDescriptor describe_composite_field(std::int64_t p, const QuadField& f,
                                         const EllWitness& w);

// The imaginary quadratic base field used for a given odd p: the fixed
// field Q(sqrt(-47)) for p = 3 (split 3, h = 5 prime to 3, and its
// lambda_3 is on record), else the first of Q(sqrt(1-p)), Q(sqrt(4-p))
// in which p splits with h prime to p -- one of the two always works.
struct BaseFieldChoice {
    QuadField field;
    std::int64_t class_number = 0;
    std::string provenance;
};

BaseFieldChoice choose_base_field(std::int64_t p);

}  // namespace iwcert

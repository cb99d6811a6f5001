#include "iwcert/tower.hpp"

#include <stdexcept>
#include <string>

#include "iwcert/arith.hpp"
#include "iwcert/errors.hpp"

namespace iwcert {

namespace {

void require_odd_prime(std::int64_t p, const char* who) {
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::domain_error(std::string(who) + ": p must be an odd prime");
    // p^2 must stay in 64 bits for the first-layer residue.
    if (p > std::int64_t{3'000'000'000})
        throw std::domain_error(std::string(who) + ": p too large for exact p^2 arithmetic");
}

void require_prime_ell(std::int64_t p, std::int64_t ell, const char* who) {
    if (ell < 2 || !is_prime(static_cast<std::uint64_t>(ell)))
        throw std::domain_error(std::string(who) + ": ell must be prime");
    if (ell == p)
        throw std::domain_error(std::string(who) + ": ell = p is ramified, not admissible");
}

}  // namespace

ResidueCheck inert_in_first_layer(std::int64_t p, std::int64_t ell) {
    require_odd_prime(p, "inert_in_first_layer");
    require_prime_ell(p, ell, "inert_in_first_layer");
    const std::int64_t residue = mod_pow(ell, p - 1, p * p);
    return ResidueCheck{residue != 1, residue};
}

KummerCheck splits_completely_kummer(std::int64_t p, std::int64_t ell) {
    require_odd_prime(p, "splits_completely_kummer");
    require_prime_ell(p, ell, "splits_completely_kummer");
    const std::int64_t congruence = imod(ell, p);
    if (congruence != 1) return KummerCheck{false, congruence, 0};
    const std::int64_t residue = mod_pow(p, (ell - 1) / p, ell);
    return KummerCheck{residue == 1, congruence, residue};
}

EllWitness make_ell_witness(std::int64_t p, const QuadField& f, std::int64_t ell) {
    require_odd_prime(p, "make_ell_witness");
    require_prime_ell(p, ell, "make_ell_witness");
    EllWitness w;
    w.p = p;
    w.ell = ell;
    w.disc_f = f.disc;
    w.cond1_symbol = kronecker(f.disc, ell);
    w.cond2_residue = inert_in_first_layer(p, ell).residue;
    const KummerCheck kummer = splits_completely_kummer(p, ell);
    w.cond3_congruence = kummer.congruence;
    w.cond3_residue = kummer.residue;
    return w;
}

bool ell_witness_holds(const EllWitness& w) {
    return w.cond1_symbol == -1 && w.cond2_residue != 1 && w.cond3_congruence == 1 &&
           w.cond3_residue == 1;
}

EllSearch find_ell(std::int64_t p, const QuadField& f, std::int64_t limit) {
    require_odd_prime(p, "find_ell");
    if (limit < p) throw std::domain_error("find_ell: limit must be >= p");
    if (splitting_in_quad(f, p) != SplittingType::Split)
        throw PremiseError("p splits in F",
                           "kronecker(" + std::to_string(f.disc) + ", " + std::to_string(p) +
                               ") != 1, so the composite construction does not apply");
    EllSearch search;
    search.limit = limit;
    // Condition (3) forces ell = 1 (mod p); scan only that class.
    for (std::int64_t ell : primes_in_class(p, 1, limit)) {
        ++search.candidates;
        EllWitness w = make_ell_witness(p, f, ell);
        if (ell_witness_holds(w)) search.found.push_back(w);
    }
    return search;
}

FieldDescriptor describe_composite_field(std::int64_t p, const QuadField& f,
                                         const EllWitness& w) {
    require_odd_prime(p, "describe_composite_field");
    if (w.p != p)
        throw PremiseError("witness prime",
                           "witness was computed for p = " + std::to_string(w.p) +
                               ", not p = " + std::to_string(p));
    if (w.disc_f != f.disc)
        throw PremiseError("witness field",
                           "witness was computed for disc " + std::to_string(w.disc_f) +
                               ", not " + std::to_string(f.disc));
    require_prime_ell(p, w.ell, "describe_composite_field");
    // Recompute every residue; a stored value that does not match is a
    // forged or corrupted witness, reported by name.
    const EllWitness fresh = make_ell_witness(p, f, w.ell);
    if (fresh.cond1_symbol != w.cond1_symbol)
        throw PremiseError("condition (1) witness",
                           "stored symbol " + std::to_string(w.cond1_symbol) +
                               ", recomputed " + std::to_string(fresh.cond1_symbol));
    if (fresh.cond2_residue != w.cond2_residue)
        throw PremiseError("condition (2) witness",
                           "stored residue " + std::to_string(w.cond2_residue) +
                               ", recomputed " + std::to_string(fresh.cond2_residue));
    if (fresh.cond3_congruence != w.cond3_congruence || fresh.cond3_residue != w.cond3_residue)
        throw PremiseError("condition (3) witness", "stored residues do not recompute");
    if (fresh.cond1_symbol != -1)
        throw PremiseError("condition (1)",
                           "ell = " + std::to_string(w.ell) + " is not inert in F: kronecker(" +
                               std::to_string(f.disc) + ", " + std::to_string(w.ell) + ") = " +
                               std::to_string(fresh.cond1_symbol));
    if (fresh.cond2_residue == 1)
        throw PremiseError("condition (2)",
                           "ell = " + std::to_string(w.ell) +
                               " splits in the first layer: ell^(p-1) = 1 (mod p^2)");
    if (fresh.cond3_congruence != 1)
        throw PremiseError("condition (3)", "ell = " + std::to_string(w.ell) + " is " +
                                                std::to_string(fresh.cond3_congruence) +
                                                " (mod p), need 1");
    if (fresh.cond3_residue != 1)
        throw PremiseError("condition (3)",
                           "p is not a p-th power residue mod ell = " + std::to_string(w.ell));
    if (splitting_in_quad(f, p) != SplittingType::Split)
        throw PremiseError("p splits in F", "kronecker(" + std::to_string(f.disc) + ", " +
                                                std::to_string(p) + ") != 1");
    const std::int64_t h = class_number_checked(f);
    if (h % p == 0)
        throw PremiseError("p does not divide h_F",
                           "h = " + std::to_string(h) + " is divisible by p = " +
                               std::to_string(p));
    return FieldDescriptor{FieldKind::CompositeCm, f, w.ell, 2 * p};
}

BaseFieldChoice choose_base_field(std::int64_t p) {
    require_odd_prime(p, "choose_base_field");
    if (p == 3) {
        // Fixed choice: 3 splits in Q(sqrt(-47)) since -47 = 1 (mod 3),
        // h = 5 is prime to 3, and lambda_3 of this field is on record,
        // which the p = 3 pipeline needs for its Kida step.
        const QuadField f = quad_field_from_radicand(-47);
        if (splitting_in_quad(f, 3) != SplittingType::Split)
            throw ConsistencyError("choose_base_field: 3 no longer splits in Q(sqrt(-47))?");
        const std::int64_t h = class_number_checked(f);
        if (h != 5)
            throw ConsistencyError("choose_base_field: h(Q(sqrt(-47))) computed as " +
                                   std::to_string(h) + ", expected 5");
        return BaseFieldChoice{f, h,
                               "fixed base field Q(sqrt(-47)): 3 splits, h = 5 prime to 3, "
                               "lambda_3 = 2 on record"};
    }
    // For p >= 5 take Q(sqrt(m)) with m the squarefree kernel of 1-p or
    // 4-p. p splits in both by construction (the radicand is a nonzero
    // square mod p) and at least one has class number prime to p (Ito);
    // both facts are still verified here rather than assumed.
    for (std::int64_t candidate : {1 - p, 4 - p}) {
        const std::int64_t kernel = squarefree_kernel(candidate).kernel;
        const QuadField f = quad_field_from_radicand(kernel);
        if (splitting_in_quad(f, p) != SplittingType::Split) continue;
        const std::int64_t h = class_number_checked(f);
        if (h % p != 0)
            return BaseFieldChoice{
                f, h,
                "base field Q(sqrt(" + std::to_string(kernel) + ")), kernel of " +
                    std::to_string(candidate) + " = " +
                    (candidate == 1 - p ? std::string("1-p") : std::string("4-p")) +
                    ": p splits and h = " + std::to_string(h) + " is prime to p (Ito)"};
    }
    throw ConsistencyError("choose_base_field: neither Q(sqrt(1-p)) nor Q(sqrt(4-p)) "
                           "admissible for p = " + std::to_string(p) +
                           "; contradicts Ito's lemma");
}

}  // namespace iwcert

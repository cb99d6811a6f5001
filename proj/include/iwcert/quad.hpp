#pragma once

// Imaginary quadratic fields Q(sqrt(m)): fundamental discriminants, class
// numbers by two independent exact routes (reduced-form enumeration and
// the Dirichlet character sum), and how a rational prime decomposes.

#include <cstdint>
#include <vector>

namespace iwcert {

// An imaginary quadratic field, pinned down by its fundamental
// discriminant. radicand is the squarefree m with k = Q(sqrt(m)); the
// discriminant is m when m = 1 (mod 4) and 4m otherwise.
struct QuadField {
    std::int64_t disc = 0;
    std::int64_t radicand = 0;

    bool operator==(const QuadField&) const = default;
};

// A reduced positive definite binary quadratic form a*x^2 + b*xy + c*y^2,
// i.e. -a < b <= a <= c, with b >= 0 whenever a = c or a = |b|.
struct ReducedForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    bool operator==(const ReducedForm&) const = default;
};

enum class SplittingType { Split, Inert, Ramified };

// Builds the field from a squarefree negative radicand. Rejects
// non-squarefree or non-negative input.
QuadField quad_field_from_radicand(std::int64_t m);

// Builds the field from a negative fundamental discriminant. The error
// message names the violated congruence condition.
QuadField quad_field_from_disc(std::int64_t disc);

bool is_fundamental_discriminant(std::int64_t disc);

// All reduced forms of discriminant k.disc. Their count is the class
// number; the list is used directly by tests and kept deterministic.
std::vector<ReducedForm> reduced_forms(const QuadField& k);

// h(k) by exhaustive reduced-form enumeration. O(|disc|) per call.
std::int64_t class_number_forms(const QuadField& k);

// h(k) by the analytic class number formula collapsed to an exact finite
// character sum: h = w/(2|D|) * |sum_{a=1}^{|D|-1} (D|a) * a| with w = 6
// for D = -3, w = 4 for D = -4 and w = 2 otherwise.
std::int64_t class_number_dirichlet(const QuadField& k);

// Both routes, compared; disagreement throws ConsistencyError naming both
// values. This is the only class-number entry point the certifier uses.
std::int64_t class_number_checked(const QuadField& k);

// Decomposition of the rational prime p in k, read off the Kronecker
// symbol (disc | p): +1 split, -1 inert, 0 ramified.
SplittingType splitting_in_quad(const QuadField& k, std::int64_t p);

// True when genus theory forces the class number to be odd: discriminants
// -4, -8, and -q for a prime q = 3 (mod 4) have a single genus.
bool genus_parity_check(const QuadField& k);

}  // namespace iwcert

#pragma once

// Exact integer primitives shared by every layer above: modular
// exponentiation, deterministic primality, Kronecker symbols, squarefree
// decomposition and prime streams. Everything is integer arithmetic;
// nothing in this module touches floating point.

#include <cstdint>
#include <functional>
#include <vector>

namespace iwcert {

// Least non-negative residue of a mod m. Requires m >= 1.
std::int64_t imod(std::int64_t a, std::int64_t m);

// floor(sqrt(n)) for n >= 0, computed by integer Newton iteration.
std::int64_t isqrt(std::int64_t n);

// base^exponent mod modulus, reduced to [0, modulus). The base may be
// negative; exponent >= 0; modulus >= 2. Products are taken in 128 bits,
// so any modulus below 2^62 is safe.
std::int64_t mod_pow(std::int64_t base, std::int64_t exponent, std::int64_t modulus);

// Deterministic Miller-Rabin, correct for the whole 64-bit range (fixed
// witness set {2, 3, 5, ..., 37}; no probabilistic answers).
bool is_prime(std::uint64_t n);

// Kronecker symbol (a | n), extending the Jacobi symbol to all n with the
// usual conventions: (a | 2) depends on a mod 8, (a | -1) on the sign of
// a, (a | 0) = [|a| = 1]. (0 | 0) is rejected.
int kronecker(std::int64_t a, std::int64_t n);

// n = kernel * cofactor^2 with kernel squarefree and sign(kernel) =
// sign(n), cofactor > 0. Rejects n = 0, which has no such decomposition.
struct SquarefreeParts {
    std::int64_t kernel = 0;
    std::int64_t cofactor = 0;

    bool operator==(const SquarefreeParts&) const = default;
};
SquarefreeParts squarefree_kernel(std::int64_t n);

bool is_squarefree(std::int64_t n);

// Calls fn(p) for every prime p <= limit in increasing order. Segmented
// sieve of Eratosthenes; memory stays O(sqrt(limit) + segment).
void for_each_prime(std::int64_t limit, const std::function<void(std::int64_t)>& fn);

std::vector<std::int64_t> primes_up_to(std::int64_t limit);

// Primes p <= limit with p == residue (mod modulus), increasing. Requires
// gcd(residue, modulus) = 1: other classes contain at most one prime, and
// asking for them is always a caller bug in this code base.
std::vector<std::int64_t> primes_in_class(std::int64_t modulus, std::int64_t residue,
                                          std::int64_t limit);

}  // namespace iwcert

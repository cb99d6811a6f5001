#include "iwcert/arith.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "iwcert/errors.hpp"

namespace iwcert {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
    std::uint64_t acc = 1 % modulus;
    std::uint64_t b = base % modulus;
    while (exponent != 0) {
        if (exponent & 1) acc = mul_mod(acc, b, modulus);
        b = mul_mod(b, b, modulus);
        exponent >>= 1;
    }
    return acc;
}

}  // namespace

std::int64_t imod(std::int64_t a, std::int64_t m) {
    if (m < 1) throw std::domain_error("imod: modulus must be >= 1");
    std::int64_t r = a % m;
    if (r < 0) r += m;
    return r;
}

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    auto un = static_cast<std::uint64_t>(n);
    if (un < 2) return n;
    // Newton iteration on integers converges to floor(sqrt(n)) from above.
    std::uint64_t x = un;
    std::uint64_t y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + un / x) / 2;
    }
    return static_cast<std::int64_t>(x);
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exponent, std::int64_t modulus) {
    if (modulus < 2) throw std::domain_error("mod_pow: modulus must be >= 2");
    if (exponent < 0) throw std::domain_error("mod_pow: exponent must be >= 0");
    const auto m = static_cast<std::uint64_t>(modulus);
    const auto b = static_cast<std::uint64_t>(imod(base, modulus));
    return static_cast<std::int64_t>(pow_mod_u64(b, static_cast<std::uint64_t>(exponent), m));
}

bool is_prime(std::uint64_t n) {
    constexpr std::array<std::uint64_t, 12> witnesses = {2,  3,  5,  7,  11, 13,
                                                         17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (std::uint64_t p : witnesses) {
        if (n % p == 0) return n == p;
    }
    // n > 37 and coprime to all witnesses from here on. This witness set
    // is known to be deterministic below 2^64.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : witnesses) {
        std::uint64_t x = pow_mod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int round = 1; round < s; ++round) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int kronecker(std::int64_t a, std::int64_t n) {
    if (a == 0 && n == 0) throw std::domain_error("kronecker: (0 | 0) is undefined");
    if (a == std::numeric_limits<std::int64_t>::min() ||
        n == std::numeric_limits<std::int64_t>::min())
        throw std::domain_error("kronecker: |argument| overflows");
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int result = 1;
    // Pull the 2-part out of n; each factor of 2 contributes (a | 2),
    // which is +1 for a = +-1 (mod 8) and -1 for a = +-3 (mod 8).
    int two_exponent = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++two_exponent;
    }
    if (two_exponent % 2 == 1) {
        const std::int64_t a_mod_8 = imod(a, 8);
        if (a_mod_8 == 3 || a_mod_8 == 5) result = -result;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;  // (a | -1) = sign(a)
    }
    if (n == 1) return result;
    // Jacobi phase: n odd, n >= 3. Standard binary reduction with
    // quadratic reciprocity for the odd-odd swaps.
    std::int64_t r = imod(a, n);
    while (r != 0) {
        int v = 0;
        while (r % 2 == 0) {
            r /= 2;
            ++v;
        }
        if (v % 2 == 1) {
            const std::int64_t n_mod_8 = n % 8;
            if (n_mod_8 == 3 || n_mod_8 == 5) result = -result;
        }
        if (r % 4 == 3 && n % 4 == 3) result = -result;
        const std::int64_t next = n % r;
        n = r;
        r = next;
    }
    return n == 1 ? result : 0;
}

SquarefreeParts squarefree_kernel(std::int64_t n) {
    if (n == 0) throw std::domain_error("squarefree_kernel: 0 has no squarefree part");
    if (n == std::numeric_limits<std::int64_t>::min())
        throw std::domain_error("squarefree_kernel: |n| overflows");
    const std::int64_t sign = n < 0 ? -1 : 1;
    std::int64_t m = n * sign;
    std::int64_t kernel = 1;
    std::int64_t cofactor = 1;
    for (std::int64_t d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
        if (m % d != 0) continue;
        int e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        // cofactor^2 divides |n|, so cofactor fits comfortably in 64 bits.
        for (int i = 0; i < e / 2; ++i) cofactor *= d;
        if (e % 2 == 1) kernel *= d;
    }
    kernel *= m;  // residual factor is 1 or a prime > sqrt of what remained
    return SquarefreeParts{sign * kernel, cofactor};
}

bool is_squarefree(std::int64_t n) { return squarefree_kernel(n).cofactor == 1; }

void for_each_prime(std::int64_t limit, const std::function<void(std::int64_t)>& fn) {
    if (limit < 2) return;
    const std::int64_t root = isqrt(limit);
    // Plain sieve up to sqrt(limit) yields the base primes.
    std::vector<char> small_sieve(static_cast<std::size_t>(root) + 1, 1);
    for (std::int64_t i = 2; i * i <= root; ++i) {
        if (!small_sieve[static_cast<std::size_t>(i)]) continue;
        for (std::int64_t j = i * i; j <= root; j += i) small_sieve[static_cast<std::size_t>(j)] = 0;
    }
    std::vector<std::int64_t> base;
    for (std::int64_t i = 2; i <= root; ++i) {
        if (small_sieve[static_cast<std::size_t>(i)]) {
            base.push_back(i);
            fn(i);
        }
    }
    constexpr std::int64_t segment = std::int64_t{1} << 16;
    std::vector<char> mark;
    for (std::int64_t lo = root + 1; lo <= limit; lo += segment) {
        const std::int64_t hi = std::min(lo + segment - 1, limit);
        mark.assign(static_cast<std::size_t>(hi - lo + 1), 1);
        for (std::int64_t p : base) {
            std::int64_t start = ((lo + p - 1) / p) * p;
            start = std::max(start, p * p);
            for (std::int64_t j = start; j <= hi; j += p) mark[static_cast<std::size_t>(j - lo)] = 0;
        }
        for (std::int64_t j = lo; j <= hi; ++j) {
            if (mark[static_cast<std::size_t>(j - lo)]) fn(j);
        }
    }
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
    std::vector<std::int64_t> out;
    for_each_prime(limit, [&](std::int64_t p) { out.push_back(p); });
    return out;
}

std::vector<std::int64_t> primes_in_class(std::int64_t modulus, std::int64_t residue,
                                          std::int64_t limit) {
    if (modulus < 1) throw std::domain_error("primes_in_class: modulus must be >= 1");
    const std::int64_t r = imod(residue, modulus);
    if (std::gcd(r, modulus) != 1)
        throw std::domain_error(
            "primes_in_class: residue class shares a factor with the modulus and "
            "contains at most one prime");
    std::vector<std::int64_t> out;
    for_each_prime(limit, [&](std::int64_t p) {
        if (p % modulus == r) out.push_back(p);
    });
    return out;
}

}  // namespace iwcert

#include "iwcert/quad.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "iwcert/arith.hpp"
#include "iwcert/errors.hpp"

namespace iwcert {

QuadField quad_field_from_radicand(std::int64_t m) {
    if (m >= 0) throw std::domain_error("quad_field_from_radicand: radicand must be negative");
    const SquarefreeParts parts = squarefree_kernel(m);
    if (parts.cofactor != 1)
        throw std::domain_error("quad_field_from_radicand: radicand " + std::to_string(m) +
                                " is not squarefree (square factor " +
                                std::to_string(parts.cofactor) + "^2)");
    if (m < -(std::int64_t{1} << 61))
        throw std::domain_error("quad_field_from_radicand: |radicand| too large");
    const std::int64_t disc = imod(m, 4) == 1 ? m : 4 * m;
    return QuadField{disc, m};
}

bool is_fundamental_discriminant(std::int64_t disc) {
    if (disc == 0 || disc == 1) return false;
    const std::int64_t r = imod(disc, 4);
    if (r == 1) return is_squarefree(disc);
    if (r != 0) return false;
    const std::int64_t q = disc / 4;
    const std::int64_t s = imod(q, 4);
    return (s == 2 || s == 3) && is_squarefree(q);
}

QuadField quad_field_from_disc(std::int64_t disc) {
    if (disc >= 0) throw std::domain_error("quad_field_from_disc: discriminant must be negative");
    const std::int64_t r = imod(disc, 4);
    if (r == 2 || r == 3)
        throw std::domain_error("quad_field_from_disc: " + std::to_string(disc) + " = " +
                                std::to_string(r) +
                                " (mod 4); a fundamental discriminant is 0 or 1 (mod 4)");
    if (r == 1) {
        if (!is_squarefree(disc))
            throw std::domain_error("quad_field_from_disc: " + std::to_string(disc) +
                                    " = 1 (mod 4) but is not squarefree");
        return QuadField{disc, disc};
    }
    const std::int64_t q = disc / 4;
    const std::int64_t s = imod(q, 4);
    if (s != 2 && s != 3)
        throw std::domain_error("quad_field_from_disc: " + std::to_string(disc) +
                                " = 4m with m = " + std::to_string(s) +
                                " (mod 4); fundamental needs m = 2 or 3 (mod 4)");
    if (!is_squarefree(q))
        throw std::domain_error("quad_field_from_disc: " + std::to_string(disc) +
                                " = 4m with m not squarefree");
    return QuadField{disc, q};
}

std::vector<ReducedForm> reduced_forms(const QuadField& k) {
    const std::int64_t d = k.disc;
    if (d >= 0) throw std::domain_error("reduced_forms: imaginary field required");
    if (!is_fundamental_discriminant(d))
        throw std::domain_error("reduced_forms: discriminant is not fundamental");
    std::vector<ReducedForm> forms;
    // Reduction forces 3b^2 <= |d|, and b has the parity of d.
    const std::int64_t b_max = isqrt(-d / 3);
    for (std::int64_t b = (d % 2 != 0) ? 1 : 0; b <= b_max; b += 2) {
        const std::int64_t ac4 = b * b - d;  // = 4ac for any form (a, b, c)
        const std::int64_t ac = ac4 / 4;
        for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= ac; ++a) {
            if (ac % a != 0) continue;
            const std::int64_t c = ac / a;
            forms.push_back(ReducedForm{a, b, c});
            // The mirror (a, -b, c) is reduced exactly when neither
            // boundary case b = a nor a = c applies.
            if (b > 0 && b < a && a < c) forms.push_back(ReducedForm{a, -b, c});
        }
    }
    return forms;
}

std::int64_t class_number_forms(const QuadField& k) {
    return static_cast<std::int64_t>(reduced_forms(k).size());
}

std::int64_t class_number_dirichlet(const QuadField& k) {
    const std::int64_t d = k.disc;
    if (d >= 0) throw std::domain_error("class_number_dirichlet: imaginary field required");
    if (!is_fundamental_discriminant(d))
        throw std::domain_error("class_number_dirichlet: discriminant is not fundamental");
    const std::int64_t abs_d = -d;
    // |D| terms bounded by |D| each: the sum fits in 128 bits for any
    // 64-bit discriminant.
    __int128 sum = 0;
    for (std::int64_t a = 1; a < abs_d; ++a)
        sum += static_cast<__int128>(kronecker(d, a)) * a;
    if (sum < 0) sum = -sum;
    const std::int64_t w = (d == -3) ? 6 : (d == -4) ? 4 : 2;
    const __int128 numerator = static_cast<__int128>(w) * sum;
    const __int128 denominator = static_cast<__int128>(2) * abs_d;
    if (numerator % denominator != 0)
        throw ConsistencyError(
            "class_number_dirichlet: character sum for D = " + std::to_string(d) +
            " is not divisible by 2|D|");
    const __int128 h = numerator / denominator;
    if (h < 1 || h > std::numeric_limits<std::int64_t>::max())
        throw ConsistencyError("class_number_dirichlet: computed h out of range for D = " +
                               std::to_string(d));
    return static_cast<std::int64_t>(h);
}

std::int64_t class_number_checked(const QuadField& k) {
    const std::int64_t by_forms = class_number_forms(k);
    const std::int64_t by_sum = class_number_dirichlet(k);
    if (by_forms != by_sum)
        throw ConsistencyError("class number mismatch for D = " + std::to_string(k.disc) +
                               ": form count " + std::to_string(by_forms) +
                               ", character sum " + std::to_string(by_sum));
    return by_forms;
}

SplittingType splitting_in_quad(const QuadField& k, std::int64_t p) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::domain_error("splitting_in_quad: p must be prime");
    switch (kronecker(k.disc, p)) {
        case 1:
            return SplittingType::Split;
        case -1:
            return SplittingType::Inert;
        default:
            return SplittingType::Ramified;
    }
}

bool genus_parity_check(const QuadField& k) {
    if (k.disc == -4 || k.disc == -8) return true;
    return imod(k.disc, 4) == 1 && k.disc < 0 &&
           is_prime(static_cast<std::uint64_t>(-k.disc));
}

}  // namespace iwcert

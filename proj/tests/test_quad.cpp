#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "iwcert/arith.hpp"
#include "iwcert/errors.hpp"
#include "iwcert/quad.hpp"
#include "oracles.hpp"

using namespace iwcert;

TEST_CASE("field constructors normalize to fundamental discriminants") {
    CHECK(quad_field_from_radicand(-47) == QuadField{-47, -47});
    CHECK(quad_field_from_radicand(-1) == QuadField{-4, -1});
    CHECK(quad_field_from_radicand(-2) == QuadField{-8, -2});
    CHECK(quad_field_from_radicand(-6) == QuadField{-24, -6});
    CHECK(quad_field_from_radicand(-10) == QuadField{-40, -10});
    CHECK_THROWS_AS(quad_field_from_radicand(-12), std::domain_error);  // not squarefree
    CHECK_THROWS_AS(quad_field_from_radicand(5), std::domain_error);    // not imaginary
    CHECK_THROWS_AS(quad_field_from_radicand(0), std::domain_error);

    CHECK(quad_field_from_disc(-47) == QuadField{-47, -47});
    CHECK(quad_field_from_disc(-24) == QuadField{-24, -6});
    CHECK(quad_field_from_disc(-4) == QuadField{-4, -1});
    CHECK_THROWS_AS(quad_field_from_disc(-10), std::domain_error);  // 2 (mod 4)
    CHECK_THROWS_AS(quad_field_from_disc(-12), std::domain_error);  // 4m with m = 1 (mod 4)
    CHECK_THROWS_AS(quad_field_from_disc(-75), std::domain_error);  // 1 (mod 4), 25 | 75
    CHECK_THROWS_AS(quad_field_from_disc(4), std::domain_error);
}

TEST_CASE("discriminant rejection messages name the violated congruence") {
    try {
        quad_field_from_disc(-10);
        CHECK(false);
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("(mod 4)") != std::string::npos);
    }
}

TEST_CASE("fundamental discriminant predicate") {
    std::vector<std::int64_t> found;
    for (std::int64_t n = 3; n <= 24; ++n)
        if (is_fundamental_discriminant(-n)) found.push_back(n);
    CHECK(found == std::vector<std::int64_t>{3, 4, 7, 8, 11, 15, 19, 20, 23, 24});
    CHECK_FALSE(is_fundamental_discriminant(0));
    CHECK_FALSE(is_fundamental_discriminant(1));
    CHECK(is_fundamental_discriminant(5));  // real side, still well-defined
    CHECK_FALSE(is_fundamental_discriminant(-1));
}

TEST_CASE("reduced forms of disc -47: the pinned class number 5") {
    const std::vector<ReducedForm> forms = reduced_forms(quad_field_from_radicand(-47));
    const std::vector<ReducedForm> expected = {
        {1, 1, 12}, {2, 1, 6}, {2, -1, 6}, {3, 1, 4}, {3, -1, 4}};
    CHECK(forms == expected);
    CHECK(class_number_forms(quad_field_from_radicand(-47)) == 5);
}

TEST_CASE("reduced form sweep: invariants, uniqueness, oracle count") {
    for (std::int64_t n = 3; n <= 2000; ++n) {
        if (!is_fundamental_discriminant(-n)) continue;
        const QuadField k = quad_field_from_disc(-n);
        const std::vector<ReducedForm> forms = reduced_forms(k);
        CAPTURE(n);
        for (const ReducedForm& f : forms) {
            CHECK(f.b * f.b - 4 * f.a * f.c == -n);
            CHECK(-f.a < f.b);
            CHECK(f.b <= f.a);
            CHECK(f.a <= f.c);
            const std::int64_t abs_b = f.b < 0 ? -f.b : f.b;
            if (f.a == f.c || f.a == abs_b) CHECK(f.b >= 0);
        }
        for (std::size_t i = 0; i < forms.size(); ++i)
            for (std::size_t j = i + 1; j < forms.size(); ++j)
                CHECK(forms[i] != forms[j]);
        CHECK(static_cast<std::int64_t>(forms.size()) == oracle::form_count(-n));
    }
}

TEST_CASE("the two class number routes agree across a sweep") {
    for (std::int64_t n = 3; n <= 2000; ++n) {
        if (!is_fundamental_discriminant(-n)) continue;
        CAPTURE(n);
        CHECK(class_number_forms(quad_field_from_disc(-n)) ==
              class_number_dirichlet(quad_field_from_disc(-n)));
    }
}

TEST_CASE("pinned class numbers, both routes via the checked entry point") {
    const std::vector<std::pair<std::int64_t, std::int64_t>> table = {
        {-3, 1},   {-4, 1},   {-7, 1},  {-8, 1},   {-11, 1},  {-15, 2},
        {-20, 2},  {-23, 3},  {-24, 2}, {-31, 3},  {-40, 2},  {-47, 5},
        {-79, 5},  {-88, 2},  {-127, 5}, {-191, 13}, {-223, 7}, {-239, 15}};
    for (const auto& [disc, h] : table) {
        CAPTURE(disc);
        CHECK(class_number_checked(quad_field_from_disc(disc)) == h);
        CHECK(oracle::form_count(disc) == h);
    }
}

TEST_CASE("splitting_in_quad reads the discriminant symbol") {
    const QuadField f47 = quad_field_from_radicand(-47);
    CHECK(splitting_in_quad(f47, 3) == SplittingType::Split);
    CHECK(splitting_in_quad(f47, 61) == SplittingType::Split);
    CHECK(splitting_in_quad(f47, 67) == SplittingType::Inert);
    CHECK(splitting_in_quad(f47, 47) == SplittingType::Ramified);
    CHECK(splitting_in_quad(f47, 2) == SplittingType::Split);  // -47 = 1 (mod 8)
    CHECK(splitting_in_quad(quad_field_from_radicand(-1), 2) == SplittingType::Ramified);
    CHECK(splitting_in_quad(quad_field_from_radicand(-5), 2) == SplittingType::Ramified);
    CHECK(splitting_in_quad(quad_field_from_radicand(-7), 2) == SplittingType::Split);
    CHECK(splitting_in_quad(quad_field_from_radicand(-3), 2) == SplittingType::Inert);
    CHECK_THROWS_AS(splitting_in_quad(f47, 4), std::domain_error);
    CHECK_THROWS_AS(splitting_in_quad(f47, 1), std::domain_error);

    // odd p not dividing the discriminant: split iff disc is a square mod p
    for (std::int64_t p : oracle::simple_sieve(100)) {
        if (p == 2) continue;
        for (std::int64_t n : {-3, -4, -7, -8, -15, -20, -24, -47}) {
            if ((-n) % p == 0) continue;
            const SplittingType s = splitting_in_quad(quad_field_from_disc(n), p);
            const int symbol = oracle::legendre_by_squares(n, p);
            CAPTURE(p);
            CAPTURE(n);
            CHECK(s == (symbol == 1 ? SplittingType::Split : SplittingType::Inert));
        }
    }
}

TEST_CASE("genus parity: single-genus discriminants are exactly the odd-h ones") {
    for (std::int64_t n = 3; n <= 1500; ++n) {
        if (!is_fundamental_discriminant(-n)) continue;
        const QuadField k = quad_field_from_disc(-n);
        CAPTURE(n);
        CHECK(genus_parity_check(k) == (class_number_checked(k) % 2 == 1));
    }
}

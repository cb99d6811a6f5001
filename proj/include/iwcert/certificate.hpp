#pragma once

// The certificate data model: claims about one field, each backed by
// registry rules, named integer witnesses and (where a theorem is
// consumed wholesale) literature citations. Certificates are plain data;
// building and checking them lives in certifier.hpp.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iwcert/tower.hpp"

namespace iwcert {

enum class ClaimSubject {
    XTrivial,     // the unramified module of the full multiple tower vanishes
    XPseudoNull,  // ... is pseudo-null
    XNonzero,     // ... is nonzero (on top of pseudo-null)
    GNonabelian,  // the unramified pro-p group over the cyclotomic tower is non-abelian
    GNonfree,     // ... is not a non-abelian free pro-p group
};

std::string_view claim_subject_id(ClaimSubject s);
std::optional<ClaimSubject> claim_subject_from_id(std::string_view id);

// Witness names shared by the builders, the verifier and the tests.
// Values are exact integers; lambda data encode their kind in the name
// (lambda_exact vs lambda_lower_bound) and their source through the rule
// that cites them.
namespace witness {
inline constexpr const char* h_f = "h_f";
inline constexpr const char* splitting_p_in_f = "splitting_p_in_f";
inline constexpr const char* cond1_symbol = "cond1_symbol";
inline constexpr const char* cond2_residue = "cond2_residue";
inline constexpr const char* cond3_congruence = "cond3_congruence";
inline constexpr const char* cond3_residue = "cond3_residue";
inline constexpr const char* q_mod_16 = "q_mod_16";
inline constexpr const char* q_mod_32 = "q_mod_32";
inline constexpr const char* lambda_exact = "lambda_exact";
inline constexpr const char* lambda_lower_bound = "lambda_lower_bound";
inline constexpr const char* lambda_minus_f = "lambda_minus_f";
inline constexpr const char* r2 = "r2";
inline constexpr const char* quotient_rank = "quotient_rank";
inline constexpr const char* degree = "degree";
}  // namespace witness

struct Claim {
    ClaimSubject subject = ClaimSubject::XTrivial;
    std::vector<std::string> rules;  // registry ids; unknown ids fail verification
    std::vector<std::pair<std::string, std::int64_t>> witnesses;  // insertion-ordered
    std::vector<std::string> external;  // citations consumed without computation

    const std::int64_t* find_witness(std::string_view name) const {
        for (const auto& [key, value] : witnesses)
            if (key == name) return &value;
        return nullptr;
    }

    bool cites_rule(std::string_view id) const {
        for (const std::string& r : rules)
            if (r == id) return true;
        return false;
    }

    bool operator==(const Claim&) const = default;
};

struct Certificate {
    std::int64_t p = 0;
    FieldDescriptor field;
    std::vector<Claim> claims;
    std::int64_t search_limit = 0;

    const Claim* find_claim(ClaimSubject s) const {
        for (const Claim& c : claims)
            if (c.subject == s) return &c;
        return nullptr;
    }

    bool operator==(const Certificate&) const = default;
};

}  // namespace iwcert

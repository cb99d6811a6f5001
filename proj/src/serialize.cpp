#include "iwcert/serialize.hpp"

#include <charconv>
#include <sstream>
#include <system_error>

#include "json.hpp"

#include "iwcert/arith.hpp"
#include "iwcert/errors.hpp"
#include "iwcert/rules.hpp"

namespace iwcert {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dec(std::int64_t v) { return std::to_string(v); }

std::int64_t parse_int(const ordered_json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a decimal string");
    const auto& s = j.get_ref<const std::string&>();
    std::int64_t value = 0;
    const char* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError(where + ": '" + s + "' is not a 64-bit decimal integer");
    return value;
}

const ordered_json& member(const ordered_json& j, const char* key, const std::string& where) {
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing key '" + key + "'");
    return *it;
}

void reject_unknown_keys(const ordered_json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool known = false;
        for (const char* a : allowed)
            if (key == a) known = true;
        if (!known) throw ParseError(where + ": unknown key '" + key + "'");
    }
}

std::vector<std::string> string_array(const ordered_json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string())
            throw ParseError(where + "[" + std::to_string(i) + "]: expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

ordered_json claim_to_ojson(const Claim& c) {
    ordered_json j;
    j["subject"] = std::string(claim_subject_id(c.subject));
    j["rules"] = c.rules;
    ordered_json witnesses = ordered_json::object();
    for (const auto& [key, value] : c.witnesses) witnesses[key] = dec(value);
    j["witnesses"] = witnesses;
    j["external"] = c.external;
    return j;
}

Claim claim_from_ojson(const ordered_json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    reject_unknown_keys(j, {"subject", "rules", "witnesses", "external"}, where);
    Claim c;
    const ordered_json& subject = member(j, "subject", where);
    if (!subject.is_string()) throw ParseError(where + ".subject: expected a string");
    const auto parsed = claim_subject_from_id(subject.get_ref<const std::string&>());
    if (!parsed)
        throw ParseError(where + ".subject: unknown subject '" +
                         subject.get<std::string>() + "'");
    c.subject = *parsed;
    // Rule ids stay verbatim: an id outside the registry is a
    // *verification* failure, not a parse failure.
    c.rules = string_array(member(j, "rules", where), where + ".rules");
    const ordered_json& witnesses = member(j, "witnesses", where);
    if (!witnesses.is_object()) throw ParseError(where + ".witnesses: expected an object");
    for (const auto& [key, value] : witnesses.items())
        c.witnesses.emplace_back(key, parse_int(value, where + ".witnesses." + key));
    c.external = string_array(member(j, "external", where), where + ".external");
    return c;
}

ordered_json certificate_to_ojson(const Certificate& cert) {
    ordered_json j;
    j["version"] = 1;
    j["p"] = dec(cert.p);
    ordered_json field;
    field["kind"] = cert.field.kind == FieldKind::ImaginaryQuadratic ? "imaginary_quadratic"
                                                                     : "composite_cm";
    field["disc_f"] = dec(cert.field.base.disc);
    if (cert.field.kind == FieldKind::CompositeCm) field["ell"] = dec(cert.field.ell);
    field["degree"] = dec(cert.field.degree);
    j["field"] = field;
    ordered_json claims = ordered_json::array();
    for (const Claim& claim : cert.claims) claims.push_back(claim_to_ojson(claim));
    j["claims"] = claims;
    ordered_json search;
    search["limit"] = dec(cert.search_limit);
    j["search"] = search;
    return j;
}

Certificate certificate_from_ojson(const ordered_json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    reject_unknown_keys(j, {"version", "p", "field", "claims", "search"}, where);
    const ordered_json& version = member(j, "version", where);
    if (!version.is_number_integer() || version.get<std::int64_t>() != 1)
        throw ParseError(where + ".version: unsupported version (expected 1)");
    Certificate cert;
    cert.p = parse_int(member(j, "p", where), where + ".p");
    const ordered_json& field = member(j, "field", where);
    if (!field.is_object()) throw ParseError(where + ".field: expected an object");
    const ordered_json& kind = member(field, "kind", where + ".field");
    if (!kind.is_string()) throw ParseError(where + ".field.kind: expected a string");
    const auto& kind_name = kind.get_ref<const std::string&>();
    if (kind_name == "imaginary_quadratic") {
        cert.field.kind = FieldKind::ImaginaryQuadratic;
        reject_unknown_keys(field, {"kind", "disc_f", "degree"}, where + ".field");
    } else if (kind_name == "composite_cm") {
        cert.field.kind = FieldKind::CompositeCm;
        reject_unknown_keys(field, {"kind", "disc_f", "ell", "degree"}, where + ".field");
        cert.field.ell = parse_int(member(field, "ell", where + ".field"), where + ".field.ell");
    } else {
        throw ParseError(where + ".field.kind: unknown kind '" + kind_name + "'");
    }
    const std::int64_t disc = parse_int(member(field, "disc_f", where + ".field"),
                                        where + ".field.disc_f");
    // The radicand is redundant on the wire; rebuild it. Whether disc is
    // actually a fundamental discriminant is the verifier's question.
    cert.field.base.disc = disc;
    cert.field.base.radicand = imod(disc, 4) == 1 ? disc : disc / 4;
    cert.field.degree = parse_int(member(field, "degree", where + ".field"),
                                  where + ".field.degree");
    const ordered_json& claims = member(j, "claims", where);
    if (!claims.is_array()) throw ParseError(where + ".claims: expected an array");
    for (std::size_t i = 0; i < claims.size(); ++i)
        cert.claims.push_back(
            claim_from_ojson(claims[i], where + ".claims[" + std::to_string(i) + "]"));
    const ordered_json& search = member(j, "search", where);
    if (!search.is_object()) throw ParseError(where + ".search: expected an object");
    reject_unknown_keys(search, {"limit"}, where + ".search");
    cert.search_limit = parse_int(member(search, "limit", where + ".search"),
                                  where + ".search.limit");
    return cert;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
    return certificate_to_ojson(cert).dump();
}

Certificate certificate_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    }
    return certificate_from_ojson(j, "certificate");
}

std::vector<Certificate> read_certificates(const std::string& text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    std::vector<Certificate> out;
    if (text[first] == '[') {
        ordered_json j;
        try {
            j = ordered_json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("input: ") + e.what());
        }
        if (!j.is_array()) throw ParseError("input: expected an array of certificates");
        for (std::size_t i = 0; i < j.size(); ++i)
            out.push_back(
                certificate_from_ojson(j[i], "certificate[" + std::to_string(i) + "]"));
        return out;
    }
    std::istringstream lines(text);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(lines, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::string where = "line " + std::to_string(line_number);
        ordered_json j;
        try {
            j = ordered_json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(where + ": " + e.what());
        }
        out.push_back(certificate_from_ojson(j, where));
    }
    return out;
}

std::string certificate_to_text(const Certificate& cert) {
    std::ostringstream out;
    out << "certificate: p = " << cert.p;
    if (cert.field.kind == FieldKind::ImaginaryQuadratic) {
        out << ", k = Q(sqrt(" << cert.field.base.radicand << ")), disc "
            << cert.field.base.disc;
    } else {
        out << ", k = Q(sqrt(" << cert.field.base.radicand
            << ")) * (degree-" << cert.p << " subfield of Q(mu_" << cert.field.ell
            << ")), disc F = " << cert.field.base.disc << ", ell = " << cert.field.ell;
    }
    out << ", degree " << cert.field.degree << ", search limit " << cert.search_limit
        << "\n";
    for (const Claim& claim : cert.claims) {
        out << "  claim " << claim_subject_id(claim.subject) << "\n";
        for (const std::string& id : claim.rules) {
            out << "    rule " << id;
            if (const auto rule = rule_from_id(id)) out << ": " << rule_summary(*rule);
            out << "\n";
        }
        for (const auto& [key, value] : claim.witnesses)
            out << "    witness " << key << " = " << value << "\n";
        for (const std::string& citation : claim.external)
            out << "    external " << citation << "\n";
    }
    return out.str();
}

}  // namespace iwcert

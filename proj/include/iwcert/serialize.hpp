#pragma once

// Certificate (de)serialization. The wire format is a fixed JSON schema
// with every integer carried as a decimal string so nothing is at the
// mercy of a reader's number type; key order is fixed so equal
// certificates serialize to identical bytes. Malformed input raises
// ParseError with the offending location in the message.

#include <string>
#include <vector>

#include "iwcert/certificate.hpp"

namespace iwcert {

// One certificate as a single-line JSON object.
std::string certificate_to_json(const Certificate& cert);

// Inverse of certificate_to_json; strict about keys and value shapes.
// Unknown rule ids are NOT rejected here -- they are the verifier's
// business -- but unknown subjects, keys or non-decimal integers are.
Certificate certificate_from_json(const std::string& text);

// Multi-line human-readable rendering, rule summaries included.
std::string certificate_to_text(const Certificate& cert);

// Reads a whole input: a JSON array of certificates if the first
// non-space byte is '[', otherwise JSONL (one object per non-blank
// line). Empty input yields an empty vector.
std::vector<Certificate> read_certificates(const std::string& text);

}  // namespace iwcert

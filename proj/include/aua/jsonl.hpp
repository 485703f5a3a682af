#pragma once

#include <istream>
#include <string>

#include "aua/errors.hpp"
#include "aua/model.hpp"

namespace aua {

// Parses a JSON-lines corpus: an optional institution-table header line
// {"institutions": {"<id>": "<display name>"}} followed by one record
// object per line. Without a header, institution strings are
// auto-registered by display name (the name doubles as the id).
//
// Diagnostics (unknown fields, ...) are appended to `diags` when given.
// Throws ParseError (malformed JSON, with line number) or
// ValidationError (invariant violations, with line and field).
Corpus parse_jsonl(std::istream& input, Diagnostics* diags = nullptr);
Corpus parse_jsonl(const std::string& text, Diagnostics* diags = nullptr);

// Canonical serialization: institution header (ids sorted) followed by
// the records in corpus order, fixed key order, no extra whitespace.
// parse(serialize(c)) == c, and serialize(parse(serialize(c))) is
// byte-identical to serialize(c).
std::string serialize_jsonl(const Corpus& corpus);

} // namespace aua

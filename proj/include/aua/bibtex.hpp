#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>

#include "aua/errors.hpp"
#include "aua/model.hpp"

namespace aua {

// Author metadata that standard BibTeX cannot carry. Keyed by the
// canonical "forename|surname|institution-id" triple.
struct SidecarEntry {
    Gender gender = Gender::unknown;
    std::optional<CareerStart> career_start;
};
using Sidecar = std::map<std::string, SidecarEntry>;

// Loads the sidecar JSON object: { "<canonical key>": {"gender": ...,
// "career_start": {"day": D, "month": M}}, ... }.
Sidecar load_sidecar(std::istream& input);
Sidecar load_sidecar(const std::string& text);

// Parses a BibTeX subset: @<type>{key, field = {value}, ...} entries with
// fields author, title, year, institution (fallback school) and
// journal/booktitle (venue). LaTeX escapes are decoded before
// normalization; entries sharing an identical institution display name
// share one Institution. Gender and career start come from the sidecar,
// defaulting to unknown/absent.
Corpus parse_bibtex_subset(std::istream& input, const Sidecar& sidecar = {},
                           Diagnostics* diags = nullptr);
Corpus parse_bibtex_subset(const std::string& text, const Sidecar& sidecar = {},
                           Diagnostics* diags = nullptr);

// The sidecar lookup key for a parsed mention.
std::string sidecar_key(const AuthorMention& mention);

} // namespace aua

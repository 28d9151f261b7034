#pragma once

#include <iosfwd>

#include "goedel/creative.hpp"

namespace goedel {

// Line-delimited persistence, format "goedel-forge/1": one JSON header line
// (format, seed, psi_kind, fuel, sample_width, created, updated, complete),
// then one JSON line per step with fields step, input_index, psi_value,
// extended_index, evidence (array of [n, lhs, rhs]). Naturals are JSON
// numbers up to 2^53 - 1 and canonical numeral strings beyond. Serialization
// is deterministic; save(load(x)) == x byte for byte.
void save_transcript(const Transcript& t, std::ostream& out);
Transcript load_transcript(std::istream& in);

std::string transcript_to_string(const Transcript& t);
Transcript transcript_from_string(const std::string& text);

// Human-readable step table (one row per step plus a header).
std::string render_transcript_table(const Transcript& t);

}  // namespace goedel

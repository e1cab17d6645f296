#pragma once

#include <string>
#include <string_view>

#include "avgpart/assembler.hpp"

namespace avgpart {

/// What a witness file holds: the parameters it claims and the witness.
struct WitnessDocument {
  Rational s;
  Rational t;
  PartitionWitness witness;
};

/// Canonical JSON (sorted keys, ascending vertex arrays, "num/den" rationals,
/// two-space indent, trailing newline).
std::string render_witness(const PartitionWitness& w, const Rational& s, const Rational& t);
std::string render_witness(const WitnessDocument& doc);

/// ParseError on malformed JSON or schema violations.
WitnessDocument parse_witness_document(std::string_view text);

/// validate() plus the checks that only make sense for a stored document:
/// the peeled set must be in range and a certificate's T must equal the
/// surplus of G[peeled].
ValidationReport verify_document(const Graph& g, const WitnessDocument& doc);

}  // namespace avgpart

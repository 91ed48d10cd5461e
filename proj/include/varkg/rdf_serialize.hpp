#pragma once

#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "varkg/rdf_term.hpp"

namespace varkg {

using PrefixMap = std::vector<std::pair<std::string, std::string>>;  // name -> namespace IRI

/** N-Triples/N-Quads rendering of a single term, with escaping. */
std::string format_term_nt(const Term& term);

/**
 * Writes one "<s> <p> o <g> ." line per quad. Every quad must carry a named
 * graph (std::invalid_argument otherwise; nothing is written in that case).
 * Returns the number of lines written.
 */
std::size_t serialize_nquads(std::span<const Quad> quads, std::ostream& sink);

/**
 * Writes compact Turtle: @prefix header, then one block per subject in
 * first-appearance order. rdf:type comes first as "a", remaining predicates
 * are sorted by IRI and joined with ";". IRIs are abbreviated only when the
 * local part is a simple name. Returns the number of triples written.
 */
std::size_t serialize_turtle(std::span<const Quad> quads, const PrefixMap& prefixes, std::ostream& sink);

/**
 * The two halves of serialize_turtle, for streaming: the @prefix header, then
 * any number of block batches. Output matches a single serialize_turtle call
 * as long as no subject is split across batches.
 */
void write_turtle_prefixes(const PrefixMap& prefixes, std::ostream& sink);
std::size_t write_turtle_blocks(std::span<const Quad> quads, const PrefixMap& prefixes, std::ostream& sink);

}  // namespace varkg

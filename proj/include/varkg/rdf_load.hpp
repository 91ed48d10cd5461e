#pragma once

#include <filesystem>
#include <istream>
#include <string_view>
#include <vector>

#include "varkg/rdf_term.hpp"

namespace varkg {

/**
 * Parses N-Quads (N-Triples lines are accepted too and get no graph).
 * Throws ParseError with the offending line number.
 */
std::vector<Quad> parse_nquads(std::istream& in);

/**
 * Parses the Turtle subset this toolkit writes: @prefix/@base (and SPARQL
 * style PREFIX), IRIs, prefixed names, "a", blank node labels, quoted
 * literals with language tags or datatypes, bare numbers and booleans, and
 * the ";" / "," abbreviations. Collections and [] property lists are
 * rejected. Returned quads carry no graph.
 */
std::vector<Quad> parse_turtle(std::string_view text);
std::vector<Quad> parse_turtle(std::istream& in);

/** Dispatches on extension: .nq/.nt -> N-Quads, .ttl -> Turtle (".gz" allowed). */
std::vector<Quad> load_rdf_file(const std::filesystem::path& path);

}  // namespace varkg

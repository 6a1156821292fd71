#pragma once

#include "argus/store/graph.hpp"

#include <string>
#include <string_view>

namespace argus::store {

/// Parses the supported Turtle subset. Throws ParseError (line/column) on
/// syntax errors, undeclared prefixes, unknown datatypes, and unsupported
/// constructs (blank nodes, collections, language tags, @base, long strings).
Graph parse_turtle(std::string_view text);

/// Canonical text: sorted prefix block, blank line, then one triple per line
/// in canonical order with `a` for rdf:type.
std::string serialize_turtle(const Graph& graph);

/// Compact form of an IRI against the graph's prefixes (`:x`, `rdf:type`) or
/// `<iri>` when no prefix applies.
std::string compact_iri(const Graph::PrefixMap& prefixes, const Iri& iri);

std::string term_to_turtle(const Graph::PrefixMap& prefixes, const Term& term);

}  // namespace argus::store

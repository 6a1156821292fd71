#pragma once

#include "argus/store/term.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace argus::store {

/// A set of triples plus a presentation-only prefix table. Equality ignores
/// prefixes. Iteration follows canonical triple order.
class Graph {
public:
    using TripleSet = std::set<Triple>;
    using PrefixMap = std::map<std::string, std::string>;

    Graph() = default;

    /// Returns true when the triple was not already present.
    bool insert(Triple triple);
    bool erase(const Triple& triple);
    bool contains(const Triple& triple) const { return triples_.count(triple) != 0; }

    std::size_t size() const noexcept { return triples_.size(); }
    bool empty() const noexcept { return triples_.empty(); }
    const TripleSet& triples() const noexcept { return triples_; }
    auto begin() const { return triples_.begin(); }
    auto end() const { return triples_.end(); }

    const PrefixMap& prefixes() const noexcept { return prefixes_; }
    void set_prefix(std::string name, std::string base) { prefixes_[std::move(name)] = std::move(base); }

    /// Triples with the given subject, in canonical order.
    std::vector<Triple> about(const Iri& subject) const;

    bool operator==(const Graph& other) const { return triples_ == other.triples_; }

private:
    TripleSet triples_;
    PrefixMap prefixes_;
};

/// Value-returning insert; the input graph is left untouched.
Graph insert_triple(Graph graph, Triple triple);

struct Variable {
    std::string name;  // without the leading '?'
    auto operator<=>(const Variable&) const = default;
};

using PatternTerm = std::variant<Variable, Term>;

struct TriplePattern {
    PatternTerm subject;
    PatternTerm predicate;
    PatternTerm object;
};

using Bindings = std::map<std::string, Term, std::less<>>;

/// Every binding of the pattern's variables that yields a triple of the graph,
/// in canonical triple order. A variable repeated within the pattern must bind
/// consistently.
std::vector<Bindings> match_pattern(const Graph& graph, const TriplePattern& pattern);

/// Extends `seed` with one match of `pattern` against `triple`; false on conflict.
bool unify(const TriplePattern& pattern, const Triple& triple, Bindings& seed);

}  // namespace argus::store

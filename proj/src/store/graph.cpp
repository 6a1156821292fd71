#include "argus/store/graph.hpp"

namespace argus::store {

bool Graph::insert(Triple triple) { return triples_.insert(std::move(triple)).second; }

bool Graph::erase(const Triple& triple) { return triples_.erase(triple) != 0; }

std::vector<Triple> Graph::about(const Iri& subject) const {
    std::vector<Triple> out;
    for (const auto& t : triples_) {
        if (t.subject == subject) {
            out.push_back(t);
        }
    }
    return out;
}

Graph insert_triple(Graph graph, Triple triple) {
    graph.insert(std::move(triple));
    return graph;
}

namespace {

bool bind_slot(const PatternTerm& slot, const Term& value, Bindings& bindings) {
    if (const auto* var = std::get_if<Variable>(&slot)) {
        auto it = bindings.find(var->name);
        if (it == bindings.end()) {
            bindings.emplace(var->name, value);
            return true;
        }
        return it->second == value;
    }
    return std::get<Term>(slot) == value;
}

}  // namespace

bool unify(const TriplePattern& pattern, const Triple& triple, Bindings& seed) {
    return bind_slot(pattern.subject, Term(triple.subject), seed) &&
           bind_slot(pattern.predicate, Term(triple.predicate), seed) && bind_slot(pattern.object, triple.object, seed);
}

std::vector<Bindings> match_pattern(const Graph& graph, const TriplePattern& pattern) {
    std::vector<Bindings> out;
    for (const auto& triple : graph) {
        Bindings bindings;
        if (unify(pattern, triple, bindings)) {
            out.push_back(std::move(bindings));
        }
    }
    return out;
}

}  // namespace argus::store

#pragma once

#include "argus/common.hpp"
#include "argus/store/graph.hpp"

#include <map>
#include <set>
#include <vector>

namespace argus::store {

struct ObjectPropertyDecl {
    Iri domain;
    Iri range;
};

struct DataPropertyDecl {
    Iri domain;
    Datatype datatype;
};

/// Classes and typed properties of the ontology. Subclass links are used for
/// domain/range typing only; there is no further inference.
struct OntologySchema {
    std::set<Iri> classes;
    std::map<Iri, ObjectPropertyDecl> object_properties;
    std::map<Iri, DataPropertyDecl> data_properties;
    std::map<Iri, std::set<Iri>> superclasses;  // direct rdfs:subClassOf

    /// True if `cls` is `ancestor` or reaches it through subClassOf.
    bool is_subclass_of(const Iri& cls, const Iri& ancestor) const;
};

/// Reads a schema expressed with owl:Class, owl:ObjectProperty,
/// owl:DatatypeProperty, rdfs:domain, rdfs:range and rdfs:subClassOf.
/// Throws argus::Error when a property lacks a domain/range or refers to an
/// undeclared class.
OntologySchema schema_from_graph(const Graph& graph);

/// One diagnostic per violating triple and rule: undeclared property, domain
/// or range conflict, datatype mismatch.
std::vector<Diagnostic> validate_schema(const Graph& graph, const OntologySchema& schema);

}  // namespace argus::store

#include "argus/store/schema.hpp"


#include <string>

namespace argus::store {

namespace {

Iri v(std::string_view ns, std::string_view local) { return Iri(std::string(ns) + std::string(local)); }

std::string show(const Triple& t) {
    return canonical_form(t.subject) + " " + canonical_form(t.predicate) + " " + canonical_form(t.object);
}

const Iri* object_iri(const Graph& graph, const Iri& subject, const Iri& predicate) {
    for (const auto& t : graph) {
        if (t.subject == subject && t.predicate == predicate) {
            return std::get_if<Iri>(&t.object);
        }
    }
    return nullptr;
}

}  // namespace

bool OntologySchema::is_subclass_of(const Iri& cls, const Iri& ancestor) const {
    std::set<Iri> seen;
    std::vector<Iri> stack{cls};
    while (!stack.empty()) {
        Iri current = stack.back();
        stack.pop_back();
        if (current == ancestor) {
            return true;
        }
        if (!seen.insert(current).second) {
            continue;
        }
        auto it = superclasses.find(current);
        if (it != superclasses.end()) {
            stack.insert(stack.end(), it->second.begin(), it->second.end());
        }
    }
    return false;
}

OntologySchema schema_from_graph(const Graph& graph) {
    const Iri type = rdf_type();
    const Iri owl_class = v(vocab::kOwl, "Class");
    const Iri owl_object = v(vocab::kOwl, "ObjectProperty");
    const Iri owl_data = v(vocab::kOwl, "DatatypeProperty");
    const Iri domain = v(vocab::kRdfs, "domain");
    const Iri range = v(vocab::kRdfs, "range");
    const Iri sub_class = v(vocab::kRdfs, "subClassOf");

    OntologySchema schema;
    std::vector<Iri> object_props;
    std::vector<Iri> data_props;
    for (const auto& t : graph) {
        if (t.predicate == type && t.object == Term(owl_class)) {
            schema.classes.insert(t.subject);
        } else if (t.predicate == type && t.object == Term(owl_object)) {
            object_props.push_back(t.subject);
        } else if (t.predicate == type && t.object == Term(owl_data)) {
            data_props.push_back(t.subject);
        } else if (t.predicate == sub_class) {
            const auto* parent = std::get_if<Iri>(&t.object);
            if (parent == nullptr) {
                throw Error("rdfs:subClassOf needs a class IRI: " + show(t));
            }
            schema.superclasses[t.subject].insert(*parent);
        }
    }
    auto require_class = [&](const Iri& cls, const Iri& prop) {
        if (schema.classes.count(cls) == 0) {
            throw Error("property " + prop.str() + " refers to undeclared class " + cls.str());
        }
    };
    for (const auto& prop : object_props) {
        const Iri* d = object_iri(graph, prop, domain);
        const Iri* r = object_iri(graph, prop, range);
        if (d == nullptr || r == nullptr) {
            throw Error("object property " + prop.str() + " needs rdfs:domain and rdfs:range");
        }
        require_class(*d, prop);
        require_class(*r, prop);
        schema.object_properties.emplace(prop, ObjectPropertyDecl{*d, *r});
    }
    for (const auto& prop : data_props) {
        const Iri* d = object_iri(graph, prop, domain);
        const Iri* r = object_iri(graph, prop, range);
        if (d == nullptr || r == nullptr) {
            throw Error("datatype property " + prop.str() + " needs rdfs:domain and rdfs:range");
        }
        require_class(*d, prop);
        auto dt = datatype_from_iri(r->str());
        if (!dt) {
            throw Error("datatype property " + prop.str() + " has unsupported range " + r->str());
        }
        schema.data_properties.emplace(prop, DataPropertyDecl{*d, *dt});
    }
    for (const auto& [cls, parents] : schema.superclasses) {
        require_class(cls, cls);
        for (const auto& p : parents) {
            require_class(p, cls);
        }
    }
    return schema;
}

std::vector<Diagnostic> validate_schema(const Graph& graph, const OntologySchema& schema) {
    const Iri type = rdf_type();
    std::map<Iri, std::vector<Iri>> types;
    for (const auto& t : graph) {
        if (t.predicate == type) {
            if (const auto* cls = std::get_if<Iri>(&t.object)) {
                types[t.subject].push_back(*cls);
            }
        }
    }
    // Untyped resources never conflict.
    auto conflicts = [&](const Iri& resource, const Iri& expected) {
        auto it = types.find(resource);
        if (it == types.end()) {
            return false;
        }
        for (const auto& cls : it->second) {
            if (schema.is_subclass_of(cls, expected)) {
                return false;
            }
        }
        return true;
    };

    std::vector<Diagnostic> out;
    for (const auto& t : graph) {
        if (t.predicate == type) {
            if (std::holds_alternative<Literal>(t.object)) {
                out.push_back({"schema.type", "rdf:type needs a class IRI: " + show(t)});
            }
            continue;
        }
        if (auto op = schema.object_properties.find(t.predicate); op != schema.object_properties.end()) {
            if (conflicts(t.subject, op->second.domain)) {
                out.push_back({"schema.domain", "subject is not a " + op->second.domain.str() + ": " + show(t)});
            }
            const auto* object = std::get_if<Iri>(&t.object);
            if (object == nullptr) {
                out.push_back({"schema.range", "object property needs an IRI of class " +
                                                   op->second.range.str() + ": " + show(t)});
            } else if (conflicts(*object, op->second.range)) {
                out.push_back({"schema.range", "object is not a " + op->second.range.str() + ": " + show(t)});
            }
            continue;
        }
        if (auto dp = schema.data_properties.find(t.predicate); dp != schema.data_properties.end()) {
            if (conflicts(t.subject, dp->second.domain)) {
                out.push_back({"schema.domain", "subject is not a " + dp->second.domain.str() + ": " + show(t)});
            }
            const auto* lit = std::get_if<Literal>(&t.object);
            if (lit == nullptr || lit->datatype() != dp->second.datatype) {
                out.push_back({"schema.datatype",
                               "expects xsd:" + std::string(datatype_name(dp->second.datatype)) + ": " + show(t)});
            }
            continue;
        }
        out.push_back({"schema.undeclared-property", "undeclared property: " + show(t)});
    }
    return out;
}

}  // namespace argus::store

#include "argus/store/term.hpp"

#include "argus/common.hpp"

#include <tuple>

namespace argus::store {

Iri::Iri(std::string value) : value_(std::move(value)) {
    if (value_.empty()) {
        throw Error("IRI must not be empty");
    }
    for (char c : value_) {
        auto u = static_cast<unsigned char>(c);
        if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' ||
            c == '\\' || c == '^' || c == '`') {
            throw Error("IRI contains an illegal character: " + value_);
        }
    }
}

Iri rdf_type() { return Iri(std::string(vocab::kRdfType)); }

std::string_view datatype_name(Datatype datatype) {
    switch (datatype) {
        case Datatype::String: return "string";
        case Datatype::Integer: return "integer";
        case Datatype::Decimal: return "decimal";
        case Datatype::Boolean: return "boolean";
    }
    return "string";
}

std::string datatype_iri(Datatype datatype) {
    return std::string(vocab::kXsd) + std::string(datatype_name(datatype));
}

std::optional<Datatype> datatype_from_iri(std::string_view iri) {
    for (auto dt : {Datatype::String, Datatype::Integer, Datatype::Decimal, Datatype::Boolean}) {
        if (iri == datatype_iri(dt)) {
            return dt;
        }
    }
    return std::nullopt;
}

Literal Literal::string(std::string value) { return Literal(std::move(value), Datatype::String); }

Literal Literal::integer(long long value) { return Literal(std::to_string(value), Datatype::Integer); }

Literal Literal::decimal(const Decimal& value) { return Literal(value.to_decimal_string(), Datatype::Decimal); }

Literal Literal::boolean(bool value) { return Literal(value ? "true" : "false", Datatype::Boolean); }

Literal Literal::parse(std::string_view lexical, Datatype datatype) {
    switch (datatype) {
        case Datatype::String:
            return string(std::string(lexical));
        case Datatype::Boolean:
            if (lexical == "true" || lexical == "1") {
                return boolean(true);
            }
            if (lexical == "false" || lexical == "0") {
                return boolean(false);
            }
            break;
        case Datatype::Integer:
            if (lexical.find('.') == std::string_view::npos) {
                if (auto value = Decimal::parse(lexical)) {
                    return Literal(value->to_integer_string(), Datatype::Integer);
                }
            }
            break;
        case Datatype::Decimal:
            if (auto value = Decimal::parse(lexical)) {
                return decimal(*value);
            }
            break;
    }
    throw Error("invalid lexical form \"" + std::string(lexical) + "\" for xsd:" +
                std::string(datatype_name(datatype)));
}

Decimal Literal::numeric() const {
    if (!is_numeric()) {
        throw EvaluationError("literal \"" + lexical_ + "\" is not numeric");
    }
    return *Decimal::parse(lexical_);
}

std::optional<std::partial_ordering> compare_values(const Literal& lhs, const Literal& rhs) {
    if (lhs.is_numeric() && rhs.is_numeric()) {
        return lhs.numeric() <=> rhs.numeric();
    }
    if (lhs.datatype() != rhs.datatype()) {
        return std::nullopt;
    }
    if (lhs.datatype() == Datatype::Boolean) {
        bool a = lhs.lexical() == "true";
        bool b = rhs.lexical() == "true";
        return a <=> b;
    }
    return lhs.lexical() <=> rhs.lexical();
}

std::string_view comparator_symbol(Comparator cmp) {
    switch (cmp) {
        case Comparator::Eq: return "=";
        case Comparator::Ne: return "!=";
        case Comparator::Lt: return "<";
        case Comparator::Le: return "<=";
        case Comparator::Gt: return ">";
        case Comparator::Ge: return ">=";
    }
    return "=";
}

std::optional<Comparator> comparator_from_symbol(std::string_view symbol) {
    for (auto cmp : {Comparator::Eq, Comparator::Ne, Comparator::Lt, Comparator::Le, Comparator::Gt,
                     Comparator::Ge}) {
        if (symbol == comparator_symbol(cmp)) {
            return cmp;
        }
    }
    return std::nullopt;
}

bool holds(Comparator cmp, const std::optional<std::partial_ordering>& ordering) {
    if (!ordering) {
        return cmp == Comparator::Ne;
    }
    switch (cmp) {
        case Comparator::Eq: return *ordering == 0;
        case Comparator::Ne: return *ordering != 0;
        case Comparator::Lt: return *ordering < 0;
        case Comparator::Le: return *ordering <= 0;
        case Comparator::Gt: return *ordering > 0;
        case Comparator::Ge: return *ordering >= 0;
    }
    return false;
}

std::string escape_string(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string canonical_form(const Term& term) {
    if (const auto* iri = std::get_if<Iri>(&term)) {
        return "<" + iri->str() + ">";
    }
    const auto& lit = std::get<Literal>(term);
    return "\"" + escape_string(lit.lexical()) + "\"^^<" + datatype_iri(lit.datatype()) + ">";
}

bool operator<(const Triple& a, const Triple& b) {
    if (a.subject != b.subject) {
        return a.subject.str() < b.subject.str();
    }
    if (a.predicate != b.predicate) {
        return a.predicate.str() < b.predicate.str();
    }
    return canonical_form(a.object) < canonical_form(b.object);
}

Triple make_triple(const Term& subject, const Term& predicate, Term object) {
    const auto* s = std::get_if<Iri>(&subject);
    if (s == nullptr) {
        throw Error("triple subject must be an IRI, got literal " + canonical_form(subject));
    }
    const auto* p = std::get_if<Iri>(&predicate);
    if (p == nullptr) {
        throw Error("triple predicate must be an IRI, got literal " + canonical_form(predicate));
    }
    return Triple{*s, *p, std::move(object)};
}

}  // namespace argus::store

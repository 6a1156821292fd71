#pragma once

#include "argus/store/decimal.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace argus::store {

namespace vocab {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
}  // namespace vocab

/// Absolute IRI. Construction validates: non-empty, no whitespace, no `<>"`.
class Iri {
public:
    explicit Iri(std::string value);

    const std::string& str() const noexcept { return value_; }

    auto operator<=>(const Iri&) const = default;
    bool operator==(const Iri&) const = default;

private:
    std::string value_;
};

Iri rdf_type();

enum class Datatype { String, Integer, Decimal, Boolean };

std::string_view datatype_name(Datatype datatype);  // "string", "integer", ...
std::string datatype_iri(Datatype datatype);
std::optional<Datatype> datatype_from_iri(std::string_view iri);

/// Typed literal holding its canonical lexical form.
class Literal {
public:
    static Literal string(std::string value);
    static Literal integer(long long value);
    static Literal decimal(const Decimal& value);
    static Literal boolean(bool value);
    /// Validates and canonicalizes `lexical` for `datatype`; throws argus::Error.
    static Literal parse(std::string_view lexical, Datatype datatype);

    const std::string& lexical() const noexcept { return lexical_; }
    Datatype datatype() const noexcept { return datatype_; }

    bool is_numeric() const noexcept {
        return datatype_ == Datatype::Integer || datatype_ == Datatype::Decimal;
    }
    /// Numeric value of an integer/decimal literal.
    Decimal numeric() const;

    bool operator==(const Literal&) const = default;

private:
    Literal(std::string lexical, Datatype datatype) : lexical_(std::move(lexical)), datatype_(datatype) {}

    std::string lexical_;
    Datatype datatype_;
};

/// Three-way comparison of two literals for FILTER / evidence predicates:
/// numbers compare numerically, strings by code unit, booleans false < true.
/// nullopt when the kinds are not comparable.
std::optional<std::partial_ordering> compare_values(const Literal& lhs, const Literal& rhs);

enum class Comparator { Eq, Ne, Lt, Le, Gt, Ge };

std::string_view comparator_symbol(Comparator cmp);
std::optional<Comparator> comparator_from_symbol(std::string_view symbol);
/// Incomparable operands satisfy only `!=`.
bool holds(Comparator cmp, const std::optional<std::partial_ordering>& ordering);

using Term = std::variant<Iri, Literal>;

/// N-Triples style canonical form: `<iri>` or `"lex"^^<datatype>`.
std::string canonical_form(const Term& term);
std::string escape_string(std::string_view raw);

struct TermLess {
    bool operator()(const Term& a, const Term& b) const { return canonical_form(a) < canonical_form(b); }
};

struct Triple {
    Iri subject;
    Iri predicate;
    Term object;

    bool operator==(const Triple&) const = default;
};

bool operator<(const Triple& a, const Triple& b);

/// Builds a triple from terms, rejecting literal subjects or predicates.
Triple make_triple(const Term& subject, const Term& predicate, Term object);

}  // namespace argus::store

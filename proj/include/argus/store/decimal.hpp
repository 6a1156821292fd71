#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace argus::store {

/// Exact base-10 number: unscaled / 10^scale, kept normalized (no trailing
/// fractional zeros, zero is never negative).
class Decimal {
public:
    using BigInt = boost::multiprecision::cpp_int;

    Decimal() = default;
    Decimal(BigInt unscaled, unsigned scale);

    static Decimal from_integer(long long value) { return Decimal(BigInt(value), 0); }

    /// Accepts `[+-]?digits` and `[+-]?digits?.digits`; nullopt otherwise.
    static std::optional<Decimal> parse(std::string_view text);

    /// Exact quotient rounded half-even to `digits` fractional digits when the
    /// expansion does not terminate.
    static Decimal divide(const Decimal& numerator, const BigInt& denominator, unsigned digits);

    const BigInt& unscaled() const noexcept { return unscaled_; }
    unsigned scale() const noexcept { return scale_; }

    /// Canonical xsd:decimal form, always with at least one fractional digit.
    std::string to_decimal_string() const;
    /// Integral form; only meaningful when scale() == 0.
    std::string to_integer_string() const;
    double to_double() const;

    Decimal operator+(const Decimal& other) const;
    std::strong_ordering operator<=>(const Decimal& other) const;
    bool operator==(const Decimal& other) const = default;

private:
    void normalize();

    BigInt unscaled_ = 0;
    unsigned scale_ = 0;
};

}  // namespace argus::store

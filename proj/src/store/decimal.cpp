#include "argus/store/decimal.hpp"

#include <cstdlib>

namespace argus::store {

namespace {

Decimal::BigInt pow10(unsigned n) {
    Decimal::BigInt result = 1;
    for (unsigned i = 0; i < n; ++i) {
        result *= 10;
    }
    return result;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Decimal::Decimal(BigInt unscaled, unsigned scale) : unscaled_(std::move(unscaled)), scale_(scale) {
    normalize();
}

void Decimal::normalize() {
    if (unscaled_ == 0) {
        scale_ = 0;
        return;
    }
    while (scale_ > 0 && unscaled_ % 10 == 0) {
        unscaled_ /= 10;
        --scale_;
    }
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    std::size_t int_digits = 0;
    while (i < text.size() && is_digit(text[i])) {
        digits.push_back(text[i++]);
        ++int_digits;
    }
    unsigned scale = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && is_digit(text[i])) {
            digits.push_back(text[i++]);
            ++scale;
        }
        if (scale == 0) {
            return std::nullopt;
        }
    } else if (int_digits == 0) {
        return std::nullopt;
    }
    if (i != text.size() || digits.empty()) {
        return std::nullopt;
    }
    // cpp_int reads a leading '0' as an octal prefix.
    std::size_t first = digits.find_first_not_of('0');
    BigInt value(first == std::string::npos ? std::string("0") : digits.substr(first));
    if (negative) {
        value = -value;
    }
    return Decimal(std::move(value), scale);
}

Decimal Decimal::divide(const Decimal& numerator, const BigInt& denominator, unsigned digits) {
    // value = numerator.unscaled / (denominator * 10^scale)
    BigInt num = numerator.unscaled_;
    BigInt den = denominator * pow10(numerator.scale_);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    // Terminating iff den has no prime factors other than 2 and 5.
    BigInt rest = den;
    unsigned twos = 0;
    unsigned fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest == 1) {
        unsigned scale = twos > fives ? twos : fives;
        BigInt scaled = num * pow10(scale) / den;
        return Decimal(std::move(scaled), scale);
    }
    BigInt scaled_num = num * pow10(digits);
    bool negative = scaled_num < 0;
    BigInt magnitude = negative ? BigInt(-scaled_num) : scaled_num;
    BigInt quotient = magnitude / den;
    BigInt remainder = magnitude % den;
    BigInt twice = remainder * 2;
    if (twice > den || (twice == den && quotient % 2 != 0)) {
        quotient += 1;
    }
    return Decimal(negative ? BigInt(-quotient) : quotient, digits);
}

std::string Decimal::to_decimal_string() const {
    BigInt magnitude = unscaled_ < 0 ? BigInt(-unscaled_) : unscaled_;
    std::string digits = magnitude.str();
    std::string out;
    if (unscaled_ < 0) {
        out.push_back('-');
    }
    if (scale_ == 0) {
        out += digits;
        out += ".0";
        return out;
    }
    if (digits.size() <= scale_) {
        digits.insert(0, scale_ - digits.size() + 1, '0');
    }
    out.append(digits, 0, digits.size() - scale_);
    out.push_back('.');
    out.append(digits, digits.size() - scale_, std::string::npos);
    return out;
}

std::string Decimal::to_integer_string() const {
    return unscaled_.str();
}

double Decimal::to_double() const {
    return std::strtod(to_decimal_string().c_str(), nullptr);
}

Decimal Decimal::operator+(const Decimal& other) const {
    unsigned scale = scale_ > other.scale_ ? scale_ : other.scale_;
    BigInt a = unscaled_ * pow10(scale - scale_);
    BigInt b = other.unscaled_ * pow10(scale - other.scale_);
    return Decimal(a + b, scale);
}

std::strong_ordering Decimal::operator<=>(const Decimal& other) const {
    unsigned scale = scale_ > other.scale_ ? scale_ : other.scale_;
    BigInt a = unscaled_ * pow10(scale - scale_);
    BigInt b = other.unscaled_ * pow10(scale - other.scale_);
    if (a < b) {
        return std::strong_ordering::less;
    }
    if (a > b) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

}  // namespace argus::store

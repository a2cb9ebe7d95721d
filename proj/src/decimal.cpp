#include "dqr/decimal.hpp"

#include "dqr/error.hpp"

#include <cctype>
#include <limits>
#include <numeric>

namespace dqr {

namespace {

using wide = __int128;

std::string quote(std::string_view text) {
    std::string out = "\"";
    out.append(text);
    out += '"';
    return out;
}

} // namespace

Decimal Decimal::parse(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    const auto dot = rest.find('.');
    std::string_view whole = rest.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);

    if (whole.empty() || (dot != std::string_view::npos && frac.empty()))
        throw ParseError("malformed decimal " + quote(text));
    if (frac.size() > static_cast<std::size_t>(kDigits))
        throw ParseError("decimal " + quote(text) + " has more than 6 fractional digits");

    constexpr std::int64_t limit = std::numeric_limits<std::int64_t>::max() / kScale - 1;
    std::int64_t w = 0;
    for (char c : whole) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("malformed decimal " + quote(text));
        w = w * 10 + (c - '0');
        if (w > limit)
            throw ParseError("decimal " + quote(text) + " is out of range");
    }
    std::int64_t f = 0;
    for (char c : frac) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("malformed decimal " + quote(text));
        f = f * 10 + (c - '0');
    }
    for (std::size_t i = frac.size(); i < static_cast<std::size_t>(kDigits); ++i)
        f *= 10;

    const std::int64_t micros = w * kScale + f;
    return from_micros(negative ? -micros : micros);
}

std::string Decimal::to_string() const {
    std::int64_t v = micros_;
    std::string out;
    if (v < 0) {
        out += '-';
        v = -v;
    }
    out += std::to_string(v / kScale);
    std::int64_t frac = v % kScale;
    if (frac != 0) {
        std::string digits = std::to_string(frac);
        digits.insert(0, static_cast<std::size_t>(kDigits) - digits.size(), '0');
        while (digits.back() == '0')
            digits.pop_back();
        out += '.';
        out += digits;
    }
    return out;
}

Degree::Degree(Decimal value) : value_(value) {
    if (value < Decimal{} || value > Decimal::from_int(1))
        throw ParameterError("degree " + value.to_string() + " is outside [0,1]");
}

Degree Degree::parse(std::string_view text) {
    const Decimal d = Decimal::parse(text);
    if (d < Decimal{} || d > Decimal::from_int(1))
        throw ParseError("degree " + quote(text) + " is outside [0,1]");
    return Degree{d};
}

Degree Degree::complement() const {
    return Degree{Decimal::from_int(1) - value_};
}

std::string Ratio::to_string() const {
    std::int64_t n = num.micros();
    std::int64_t d = den.micros();
    const std::int64_t g = std::gcd(n, d);
    if (g != 0) {
        n /= g;
        d /= g;
    }
    if (d == 1)
        return std::to_string(n);
    return std::to_string(n) + "/" + std::to_string(d);
}

// num/den >= t  <=>  num * scale >= t * den   (den > 0)
bool Ratio::at_least(Decimal t) const {
    return wide{num.micros()} * Decimal::kScale >= wide{t.micros()} * den.micros();
}

bool Ratio::greater_than(Decimal t) const {
    return wide{num.micros()} * Decimal::kScale > wide{t.micros()} * den.micros();
}

bool operator==(const Ratio& a, const Ratio& b) {
    return wide{a.num.micros()} * b.den.micros() == wide{b.num.micros()} * a.den.micros();
}

} // namespace dqr

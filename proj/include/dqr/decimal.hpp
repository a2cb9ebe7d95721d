#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dqr {

/// Signed fixed-point decimal on a 10^-6 grid.
///
/// Every membership degree, threshold and grade is one of these, so sums and
/// comparisons are exact integer arithmetic. Parsing rejects literals with
/// more than six fractional digits instead of rounding them.
class Decimal {
public:
    static constexpr std::int64_t kScale = 1'000'000;
    static constexpr int kDigits = 6;

    constexpr Decimal() = default;

    static constexpr Decimal from_micros(std::int64_t micros) { return Decimal{micros}; }
    static constexpr Decimal from_int(std::int64_t whole) { return Decimal{whole * kScale}; }

    // Accepts [-]digits[.digits] with at most six fractional digits.
    // Throws ParseError otherwise.
    static Decimal parse(std::string_view text);

    constexpr std::int64_t micros() const { return micros_; }

    // Shortest exact representation: "0", "1", "0.75", "-2", "5.2".
    std::string to_string() const;

    constexpr Decimal operator+(Decimal o) const { return Decimal{micros_ + o.micros_}; }
    constexpr Decimal operator-(Decimal o) const { return Decimal{micros_ - o.micros_}; }
    constexpr Decimal operator-() const { return Decimal{-micros_}; }
    constexpr Decimal& operator+=(Decimal o) { micros_ += o.micros_; return *this; }
    constexpr Decimal& operator-=(Decimal o) { micros_ -= o.micros_; return *this; }

    constexpr auto operator<=>(const Decimal&) const = default;

private:
    constexpr explicit Decimal(std::int64_t micros) : micros_(micros) {}

    std::int64_t micros_ = 0;
};

/// Membership degree: a Decimal constrained to [0, 1].
class Degree {
public:
    constexpr Degree() = default;

    // Throws ParameterError when the value leaves [0, 1].
    explicit Degree(Decimal value);

    // Throws ParseError for bad syntax or values outside [0, 1].
    static Degree parse(std::string_view text);

    static constexpr Degree zero() { return Degree{}; }
    static Degree one() { return Degree{Decimal::from_int(1)}; }

    constexpr Decimal value() const { return value_; }
    constexpr std::int64_t micros() const { return value_.micros(); }
    std::string to_string() const { return value_.to_string(); }

    // 1 - value.
    Degree complement() const;

    constexpr auto operator<=>(const Degree&) const = default;

private:
    Decimal value_;
};

/// Exact non-negative ratio of two Decimal quantities, num / den with den > 0.
/// Used for conditional probabilities; never converted to floating point.
struct Ratio {
    Decimal num;
    Decimal den;

    // Reduced fraction of the underlying integers, or a plain integer when the
    // denominator divides out: "1/2", "25/33", "1", "0".
    std::string to_string() const;

    // Comparisons against a Decimal threshold by cross-multiplication.
    bool at_least(Decimal t) const;
    bool greater_than(Decimal t) const;

    friend bool operator==(const Ratio& a, const Ratio& b);
};

} // namespace dqr

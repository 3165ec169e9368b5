#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qfano {

using Integer = boost::multiprecision::cpp_int;

class InvalidModulus : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NoInverse : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/*
 * Exact rational number in lowest terms with a positive denominator.
 *
 * Every quantity the library produces (volumes, Chern numbers, Euler
 * characteristics, bounds) is a Rational; nothing is ever rounded. The
 * canonical text form is "p/q", or "p" when q = 1.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : value_(n) {} // NOLINT(google-explicit-constructor)
    Rational(const Integer &n) : value_(n) {} // NOLINT(google-explicit-constructor)
    Rational(const Integer &num, const Integer &den);

    Integer numerator() const { return boost::multiprecision::numerator(value_); }
    Integer denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_integer() const { return denominator() == 1; }
    bool is_nonnegative_integer() const { return is_integer() && sign() >= 0; }
    int sign() const { return value_.sign(); }

    /// Largest integer not exceeding the value.
    Integer floor() const;

    /// Display only; never used in a comparison.
    double approx() const { return value_.convert_to<double>(); }

    std::string str() const;
    static Rational parse(std::string_view text);

    Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
    Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
    Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { Rational r; r.value_ = -a.value_; return r; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

private:
    boost::multiprecision::cpp_rational value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &x);

/// a mod r, in [0, r).
std::int64_t smallest_residue(std::int64_t a, std::int64_t r);

/// i in [1, r) with a*i = 1 (mod r).
std::int64_t mod_inverse(std::int64_t a, std::int64_t r);

Integer lcm(const Integer &a, const Integer &b);

} // namespace qfano

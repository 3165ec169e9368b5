#include "qfano/arith.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

namespace qfano {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole)
{
    auto fail = [&] { return ParseError("not a rational: '" + std::string(whole) + "'"); };
    if (text.empty())
        throw fail();
    std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (start == text.size())
        throw fail();
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw fail();
    Integer value{std::string(text.substr(start))};
    return text.front() == '-' ? Integer(-value) : value;
}

} // namespace

Rational::Rational(const Integer &num, const Integer &den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    if (den < 0)
        value_ = boost::multiprecision::cpp_rational(Integer(-num), Integer(-den));
    else
        value_ = boost::multiprecision::cpp_rational(num, den);
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.sign() == 0)
        throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b)
{
    int c = a.value_.compare(b.value_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Integer Rational::floor() const
{
    Integer q = numerator() / denominator();
    // cpp_int division truncates toward zero.
    if (sign() < 0 && q * denominator() != numerator())
        q -= 1;
    return q;
}

std::string Rational::str() const
{
    if (is_integer())
        return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw ParseError("not a rational: '" + std::string(text) + "'");
    Integer den = parse_integer(den_text, text);
    if (den == 0)
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
}

std::ostream &operator<<(std::ostream &os, const Rational &x)
{
    return os << x.str();
}

std::int64_t smallest_residue(std::int64_t a, std::int64_t r)
{
    if (r <= 0)
        throw InvalidModulus("modulus must be positive, got " + std::to_string(r));
    std::int64_t m = a % r;
    return m < 0 ? m + r : m;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t r)
{
    if (r < 2)
        throw InvalidModulus("modulus must be at least 2, got " + std::to_string(r));
    // extended Euclid on (a mod r, r)
    std::int64_t old_r = smallest_residue(a, r), cur_r = r;
    std::int64_t old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        std::int64_t quot = old_r / cur_r;
        std::int64_t tmp = old_r - quot * cur_r;
        old_r = cur_r;
        cur_r = tmp;
        tmp = old_s - quot * cur_s;
        old_s = cur_s;
        cur_s = tmp;
    }
    if (old_r != 1)
        throw NoInverse(std::to_string(a) + " is not invertible mod " + std::to_string(r));
    return smallest_residue(old_s, r);
}

Integer lcm(const Integer &a, const Integer &b)
{
    if (a == 0 || b == 0)
        return 0;
    return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

} // namespace qfano

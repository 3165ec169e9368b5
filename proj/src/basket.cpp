#include "qfano/basket.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace qfano {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view context)
{
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
    return value;
}

template <typename F>
void split_commas(std::string_view text, F &&each)
{
    while (true) {
        auto comma = text.find(',');
        each(trim(text.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
}

} // namespace

OrbifoldPoint::OrbifoldPoint(int b, int r)
{
    if (r < 2)
        throw std::invalid_argument("orbifold point needs r >= 2, got r=" + std::to_string(r));
    if (b <= 0 || b >= r)
        throw std::invalid_argument("orbifold point needs 0 < b < r, got " + std::to_string(b) + "/" +
                                    std::to_string(r));
    if (std::gcd(b, r) != 1)
        throw std::invalid_argument("orbifold point needs gcd(b, r) = 1, got " + std::to_string(b) + "/" +
                                    std::to_string(r));
    b_ = 2 * b > r ? r - b : b;
    r_ = r;
}

Rational OrbifoldPoint::cost() const
{
    return Rational(r_) - Rational(1, r_);
}

std::string OrbifoldPoint::str() const
{
    return std::to_string(b_) + "/" + std::to_string(r_);
}

Basket::Basket(std::vector<OrbifoldPoint> points) : points_(std::move(points))
{
    std::sort(points_.begin(), points_.end());
}

Basket Basket::parse(std::string_view text)
{
    text = trim(text);
    std::vector<OrbifoldPoint> points;
    if (text.empty())
        return Basket{};
    split_commas(text, [&](std::string_view item) {
        auto slash = item.find('/');
        if (slash == std::string_view::npos)
            throw ParseError("basket entry '" + std::string(item) + "' is not of the form b/r");
        int b = parse_int(item.substr(0, slash), item);
        int r = parse_int(item.substr(slash + 1), item);
        try {
            points.emplace_back(b, r);
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what());
        }
    });
    return Basket(std::move(points));
}

std::vector<int> Basket::r_values() const
{
    std::vector<int> rs;
    rs.reserve(points_.size());
    for (const auto &p : points_)
        rs.push_back(p.r());
    return rs;
}

std::string Basket::str() const
{
    std::string out;
    for (const auto &p : points_) {
        if (!out.empty())
            out += ',';
        out += p.str();
    }
    return out;
}

std::string Basket::r_set_str() const
{
    return format_r_set(r_values());
}

Integer gorenstein_index(const Basket &basket)
{
    Integer result = 1;
    for (const auto &p : basket.points())
        result = lcm(result, Integer(p.r()));
    return result;
}

Rational singularity_sum(const Basket &basket)
{
    Rational sum;
    for (const auto &p : basket.points())
        sum += p.cost();
    return sum;
}

Rational c2c1_from_basket(const Basket &basket)
{
    return Rational(24) - singularity_sum(basket);
}

std::string format_r_set(const std::vector<int> &rs)
{
    std::string out;
    for (std::size_t i = 0; i < rs.size();) {
        std::size_t j = i;
        while (j < rs.size() && rs[j] == rs[i])
            ++j;
        if (!out.empty())
            out += ',';
        out += std::to_string(rs[i]);
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::vector<int> parse_r_set(std::string_view text)
{
    text = trim(text);
    std::vector<int> rs;
    if (text.empty())
        return rs;
    split_commas(text, [&](std::string_view item) {
        auto caret = item.find('^');
        int r = parse_int(item.substr(0, caret), item);
        int k = caret == std::string_view::npos ? 1 : parse_int(item.substr(caret + 1), item);
        if (r < 2 || k < 1)
            throw ParseError("bad r-set entry '" + std::string(item) + "'");
        rs.insert(rs.end(), k, r);
    });
    std::sort(rs.begin(), rs.end());
    return rs;
}

} // namespace qfano

#include "qfano/fano_constraints.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qfano/riemann_roch.hpp"

namespace qfano {

namespace {

void require_coprime(int q, const Basket &basket)
{
    for (const auto &p : basket.points())
        if (std::gcd(q, p.r()) != 1)
            throw Incompatible("index q=" + std::to_string(q) + " shares a factor with r=" + std::to_string(p.r()));
}

Rational local_sum_tA(int q, const Basket &basket, int t)
{
    Rational sum;
    for (const auto &p : basket.points())
        sum += local_term(LocalDatum(p, local_index_tA(q, t, p.r())));
    return sum;
}

void validate_r_subset(const std::vector<int> &allowed_r)
{
    for (int r : allowed_r)
        if (r < 2)
            throw std::invalid_argument("allowed r values must be >= 2");
}

} // namespace

std::string to_string(IndexMode mode)
{
    return mode == IndexMode::Weil ? "qW" : "qQ";
}

IndexMode parse_index_mode(std::string_view text)
{
    if (text == "qW")
        return IndexMode::Weil;
    if (text == "qQ")
        return IndexMode::QLinear;
    throw ParseError("unknown index mode '" + std::string(text) + "' (expected qW or qQ)");
}

int local_index_tA(int q, int t, int r)
{
    if (t <= -q || t >= 0)
        throw std::invalid_argument("t=" + std::to_string(t) + " outside (-q, 0) for q=" + std::to_string(q));
    if (std::gcd(q, r) != 1)
        throw Incompatible("index q=" + std::to_string(q) + " shares a factor with r=" + std::to_string(r));
    return static_cast<int>(smallest_residue(mod_inverse(q, r) * static_cast<std::int64_t>(-t), r));
}

Rational primitive_volume(int q, const Basket &basket)
{
    if (q < 3)
        throw std::domain_error("primitive volume formula needs q >= 3, got q=" + std::to_string(q));
    require_coprime(q, basket);
    Rational inner = Rational(1) - c2c1_from_basket(basket) / Rational(12 * q) + local_sum_tA(q, basket, -1);
    return Rational(12, Integer(q - 1) * (q - 2)) * inner;
}

Rational chi_tA(int q, const Basket &basket, const Rational &A3, int t)
{
    require_coprime(q, basket);
    Integer weight = Integer(t) * (q + t) * (q + 2 * t);
    return Rational(1) + Rational(weight, 12) * A3 + Rational(t, Integer(12) * q) * c2c1_from_basket(basket) +
           local_sum_tA(q, basket, t);
}

CompatResult compat_check(int q, const Basket &basket, const Rational &A3, IndexMode mode)
{
    Integer rx = gorenstein_index(basket);
    if (mode == IndexMode::Weil && boost::multiprecision::gcd(rx, Integer(q)) != 1)
        return {false, "gcd(r_X=" + rx.str() + ", q=" + std::to_string(q) + ") != 1"};
    Rational scaled = Rational(rx) * A3;
    if (!scaled.is_nonnegative_integer())
        return {false, "r_X*A^3 = " + scaled.str() + " is not a nonnegative integer"};
    return {};
}

std::vector<int> possible_q(const Integer &gorenstein, const Rational &c13, IndexMode mode)
{
    if (c13.sign() <= 0)
        throw std::invalid_argument("possible_q needs c1^3 > 0");
    std::vector<int> result;
    const Rational scaled = Rational(gorenstein) * c13;
    for (int q = 1; Rational(Integer(q) * q * q) <= scaled; ++q) {
        if (mode == IndexMode::Weil && boost::multiprecision::gcd(gorenstein, Integer(q)) != 1)
            continue;
        if ((scaled / Rational(Integer(q) * q * q)).is_nonnegative_integer())
            result.push_back(q);
    }
    return result;
}

Rational FanoCandidate::h0() const
{
    return h0_neg_K(basket, c13);
}

FanoCandidate FanoCandidate::from_basket(int q, const Basket &basket, IndexMode mode)
{
    FanoCandidate c;
    c.q = q;
    c.basket = basket;
    c.A3 = primitive_volume(q, basket);
    c.c13 = Rational(Integer(q) * q * q) * c.A3;
    c.c2c1 = c2c1_from_basket(basket);
    c.mode = mode;
    return c;
}

bool canonical_less(const FanoCandidate &a, const FanoCandidate &b)
{
    if (a.q != b.q)
        return a.q < b.q;
    return a.basket < b.basket;
}

bool canonical_less(const SmallC2C1Candidate &a, const SmallC2C1Candidate &b)
{
    if (a.basket != b.basket)
        return a.basket < b.basket;
    return a.c13 < b.c13;
}

Rational SearchConfig::upper_for(int q) const
{
    for (const auto &[key, value] : upper_by_q)
        if (key == q)
            return value;
    return ratio_hi;
}

void SearchConfig::validate() const
{
    if (q_range.empty())
        throw std::invalid_argument("empty q range");
    for (int q : q_range) {
        if (q < 3)
            throw std::invalid_argument("windowed search needs q >= 3, got q=" + std::to_string(q));
        if (!(ratio_lo < upper_for(q)))
            throw std::invalid_argument("empty ratio window (" + ratio_lo.str() + ", " + upper_for(q).str() +
                                        "] for q=" + std::to_string(q));
    }
    if (c2c1_min.sign() < 0)
        throw std::invalid_argument("c2c1_min must be >= 0");
    if (max_points < 0)
        throw std::invalid_argument("max_points must be >= 0");
    validate_r_subset(allowed_r);
}

void SmallC2C1Config::validate() const
{
    if (threshold.sign() <= 0)
        throw std::invalid_argument("threshold must be > 0");
    if (ratio_bound.sign() <= 0)
        throw std::invalid_argument("ratio bound must be > 0");
    if (h_depth < 1)
        throw std::invalid_argument("h_depth must be >= 1");
    if (max_points < 0)
        throw std::invalid_argument("max_points must be >= 0");
    validate_r_subset(allowed_r);
}

} // namespace qfano

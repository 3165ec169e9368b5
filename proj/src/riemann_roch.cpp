#include "qfano/riemann_roch.hpp"

#include <stdexcept>

namespace qfano {

namespace {

// sum_{j=0}^{count-1} (jb mod r)(r - (jb mod r)), without the 1/(2r) factor
std::int64_t residue_product_sum(int b, int r, int count)
{
    std::int64_t total = 0;
    for (int j = 0; j < count; ++j) {
        std::int64_t x = smallest_residue(static_cast<std::int64_t>(j) * b, r);
        total += x * (r - x);
    }
    return total;
}

} // namespace

LocalDatum::LocalDatum(OrbifoldPoint point, int index) : point_(point), index_(index)
{
    if (index < 0 || index >= point.r())
        throw std::invalid_argument("local index " + std::to_string(index) + " outside [0, " +
                                    std::to_string(point.r()) + ")");
}

Rational local_term(const LocalDatum &datum)
{
    const int b = datum.point().b();
    const int r = datum.point().r();
    const int i = datum.index();
    Rational term(Integer(-i) * (r * r - 1), Integer(12) * r);
    term += Rational(residue_product_sum(b, r, i), Integer(2) * r);
    return term;
}

Rational l_value(const Basket &basket, int m)
{
    if (m < 1)
        throw std::invalid_argument("l_value needs m >= 1, got " + std::to_string(m));
    Rational sum;
    for (const auto &p : basket.points())
        sum += Rational(residue_product_sum(p.b(), p.r(), m), Integer(2) * p.r());
    return sum;
}

Rational chi_neg_nK(const Basket &basket, const Rational &c13, int n)
{
    if (n < 0)
        throw std::invalid_argument("chi_neg_nK needs n >= 0, got " + std::to_string(n));
    Integer weight = Integer(n) * (n + 1) * (2 * n + 1);
    return Rational(weight, 12) * c13 + Rational(2 * n + 1) - l_value(basket, n + 1);
}

Rational h0_neg_K(const Basket &basket, const Rational &c13)
{
    return c13 / Rational(2) + Rational(3) - l_value(basket, 2);
}

std::vector<Rational> hilbert_coeffs(const Basket &basket, const Rational &c13, int N)
{
    if (N < 0)
        throw std::invalid_argument("hilbert_coeffs needs N >= 0, got " + std::to_string(N));
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        coeffs.push_back(chi_neg_nK(basket, c13, n));
    return coeffs;
}

Rational chi_weil(std::span<const LocalDatum> locals, const Rational &ddk, const Rational &c2d)
{
    Rational chi = Rational(1) + ddk / Rational(12) + c2d / Rational(12);
    for (const auto &datum : locals)
        chi += local_term(datum);
    return chi;
}

} // namespace qfano

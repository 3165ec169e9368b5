#include <random>

#include <doctest.h>

#include "oracle.hpp"
#include "qfano/riemann_roch.hpp"

using qfano::Basket;
using qfano::Integer;
using qfano::LocalDatum;
using qfano::OrbifoldPoint;
using qfano::Rational;

namespace {
Rational frac(long n, long d) { return Rational(Integer(n), Integer(d)); }
const Basket kMinimal = Basket::parse("1/2,1/3,3/7,6/13");
} // namespace

TEST_CASE("local_term")
{
    CHECK(qfano::local_term(LocalDatum(OrbifoldPoint(1, 2), 1)) == frac(-1, 8));
    CHECK(qfano::local_term(LocalDatum(OrbifoldPoint(1, 3), 2)) == frac(-1, 9));
    CHECK(qfano::local_term(LocalDatum(OrbifoldPoint(2, 7), 3)) == frac(-1, 7));
    for (int r = 2; r <= 13; ++r)
        CHECK(qfano::local_term(LocalDatum(OrbifoldPoint(1, r), 0)) == Rational(0));
    CHECK_THROWS_AS(LocalDatum(OrbifoldPoint(1, 5), 5), std::invalid_argument);
    CHECK_THROWS_AS(LocalDatum(OrbifoldPoint(1, 5), -1), std::invalid_argument);
}

TEST_CASE("local_term is invariant under b -> r - b")
{
    for (int r = 2; r <= 30; ++r)
        for (int b = 1; b < r; ++b) {
            if (std::gcd(b, r) != 1)
                continue;
            for (int i = 0; i < r; ++i) {
                const Rational lib = qfano::local_term(LocalDatum(OrbifoldPoint(b, r), i));
                REQUIRE(lib == oracle::local_term_raw(b, r, i));
                REQUIRE(lib == oracle::local_term_raw(r - b, r, i));
            }
        }
}

TEST_CASE("l_value")
{
    CHECK(qfano::l_value(Basket::parse("1/2"), 2) == frac(1, 4));
    CHECK(qfano::l_value(kMinimal, 1) == Rational(0));
    CHECK(qfano::l_value(kMinimal, 3) == frac(4673, 1092));
    CHECK(oracle::l_sum(kMinimal, 3) == frac(4673, 1092));
    CHECK_THROWS_AS(qfano::l_value(kMinimal, 0), std::invalid_argument);
}

TEST_CASE("l_value is additive and vanishes at m = 1")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        Basket a = oracle::random_basket(rng), b = oracle::random_basket(rng);
        auto pts = a.points();
        pts.insert(pts.end(), b.points().begin(), b.points().end());
        Basket ab(pts);
        REQUIRE(qfano::l_value(a, 1) == Rational(0));
        for (int m = 1; m <= 6; ++m) {
            REQUIRE(qfano::l_value(ab, m) == qfano::l_value(a, m) + qfano::l_value(b, m));
            REQUIRE(qfano::l_value(a, m) == oracle::l_sum(a, m));
        }
    }
}

TEST_CASE("chi_neg_nK")
{
    CHECK(qfano::chi_neg_nK(kMinimal, frac(61, 546), 0) == Rational(1));
    // P^3: chi(-2K) = chi(O(8)) = number of degree-8 monomials in 4 variables
    CHECK(oracle::count_monomials(4, 8) == 165);
    CHECK(qfano::chi_neg_nK(Basket{}, Rational(64), 2) == Rational(165));
    CHECK(qfano::chi_neg_nK(kMinimal, frac(61, 546), 2) == Rational(1));
    CHECK_THROWS_AS(qfano::chi_neg_nK(kMinimal, Rational(1), -1), std::invalid_argument);
}

TEST_CASE("P^3 plurigenera match monomial counts")
{
    for (int n = 0; n <= 6; ++n)
        CHECK(qfano::chi_neg_nK(Basket{}, Rational(64), n) == Rational(oracle::count_monomials(4, 4 * n)));
}

TEST_CASE("h0_neg_K")
{
    CHECK(oracle::count_monomials(4, 4) == 35);
    CHECK(qfano::h0_neg_K(Basket{}, Rational(64)) == Rational(35));
    CHECK(qfano::h0_neg_K(Basket::parse("1/2"), frac(1, 2)) == Rational(3));
    CHECK(qfano::h0_neg_K(kMinimal, frac(61, 546)) == Rational(0));
}

TEST_CASE("R={2,3,7,13}, c13=61/546: exactly one b-assignment has integral h0")
{
    std::vector<Basket> integral;
    for (int b7 = 1; b7 <= 3; ++b7)
        for (int b13 = 1; b13 <= 6; ++b13) {
            Basket b({OrbifoldPoint(1, 2), OrbifoldPoint(1, 3), OrbifoldPoint(b7, 7), OrbifoldPoint(b13, 13)});
            Rational h0 = frac(61, 1092) + Rational(3) - oracle::l_sum(b, 2);
            if (h0.is_integer())
                integral.push_back(b);
        }
    REQUIRE(integral.size() == 1);
    CHECK(integral.front() == kMinimal);
    CHECK(qfano::h0_neg_K(integral.front(), frac(61, 546)) == Rational(0));
}

TEST_CASE("hilbert_coeffs")
{
    CHECK(qfano::hilbert_coeffs(kMinimal, frac(61, 546), 0) == std::vector<Rational>{Rational(1)});
    CHECK(qfano::hilbert_coeffs(kMinimal, frac(61, 546), 2) ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    CHECK(qfano::hilbert_coeffs(Basket{}, Rational(64), 1) == std::vector<Rational>{Rational(1), Rational(35)});
    CHECK_THROWS_AS(qfano::hilbert_coeffs(Basket{}, Rational(64), -1), std::invalid_argument);
}

TEST_CASE("chi(-0K) = 1 for every basket and volume")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Basket b = oracle::random_basket(rng);
        Rational c13(Integer(std::uniform_int_distribution<int>(-50, 500)(rng)),
                     Integer(std::uniform_int_distribution<int>(1, 600)(rng)));
        REQUIRE(qfano::chi_neg_nK(b, c13, 0) == Rational(1));
    }
}

TEST_CASE("chi_weil")
{
    CHECK(qfano::chi_weil({}, Rational(0), Rational(0)) == Rational(1));

    // D = -A on the q=5 survivor: local indices solve 5i = 1 mod r
    const Basket survivor = Basket::parse("1/3,2/7,3/7");
    std::vector<LocalDatum> locals;
    for (const auto &p : survivor.points())
        locals.emplace_back(p, oracle::index_by_search(5, -1, p.r()));
    const Rational A3 = frac(4, 21);
    const Rational ddk = Rational(-1 * 4 * 3) * A3;
    const Rational c2d = frac(-1, 5) * frac(160, 21);
    CHECK(qfano::chi_weil(locals, ddk, c2d) == Rational(0));
}

TEST_CASE("chi_weil specializes to chi_neg_nK")
{
    for (int n = 0; n <= 5; ++n) {
        const Rational c13(64);
        const Rational ddk = Rational(n * (n + 1) * (2 * n + 1)) * c13;
        CHECK(qfano::chi_weil({}, ddk, Rational(24 * n)) == qfano::chi_neg_nK(Basket{}, c13, n));
    }
    // -nK has local index -n mod r at every point
    std::mt19937 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        Basket b = oracle::random_basket(rng);
        const int n = std::uniform_int_distribution<int>(0, 6)(rng);
        const Rational c13(Integer(std::uniform_int_distribution<int>(1, 400)(rng)),
                           Integer(std::uniform_int_distribution<int>(1, 90)(rng)));
        std::vector<LocalDatum> locals;
        for (const auto &p : b.points())
            locals.emplace_back(p, oracle::residue(-n, p.r()));
        const Rational ddk = Rational(n * (n + 1) * (2 * n + 1)) * c13;
        const Rational c2d = Rational(n) * qfano::c2c1_from_basket(b);
        REQUIRE(qfano::chi_weil(locals, ddk, c2d) == qfano::chi_neg_nK(b, c13, n));
    }
}

// One PASS/FAIL line per acceptance criterion, exact comparisons, wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "oracle.hpp"
#include "qfano/exclusions.hpp"
#include "qfano/hn_slopes.hpp"
#include "qfano/riemann_roch.hpp"

using namespace qfano;

namespace {

Rational frac(long n, long d) { return Rational(Integer(n), Integer(d)); }

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what)
    {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

int failures = 0;

void criterion(int id, const char *title, double limit_seconds, const std::function<Outcome()> &body)
{
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception &e) {
        outcome.ok = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= limit_seconds) {
        outcome.ok = false;
        outcome.detail += (outcome.detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    failures += !outcome.ok;
    std::printf("%s %d %s (%.3f s, limit %.0f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", id, title, seconds,
                limit_seconds, outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
    std::fflush(stdout);
}

using Pairs = std::vector<std::pair<int, int>>;
using Classes = std::set<std::tuple<int, std::string, std::string, std::string>>;

Classes classes_of(const std::vector<FanoCandidate> &found)
{
    Classes out;
    for (const auto &c : found)
        out.insert({c.q, c.basket.r_set_str(), c.c2c1.str(), c.c13.str()});
    return out;
}

} // namespace

int main()
{
    criterion(1, "destabilizing pairs for q <= 8", 1, [] {
        Outcome o;
        const std::map<int, Pairs> want = {{4, {{3, 2}}},
                                           {5, {{2, 1}, {4, 2}}},
                                           {6, {{5, 2}}},
                                           {7, {{3, 1}, {5, 2}, {6, 2}}},
                                           {8, {{3, 1}, {6, 2}, {7, 2}}}};
        for (int q = 1; q <= 8; ++q) {
            auto types = hn_types(q);
            auto pairs = destabilizing_pairs(types);
            o.require(q <= 3 ? types.empty() : pairs == want.at(q), "pairs differ at q=" + std::to_string(q));
            for (const auto &t : types)
                o.require(t.pieces.size() == 2, "length-3 type " + t.str());
        }
        return o;
    });

    criterion(2, "effective bounds b for 4 <= q <= 8", 1, [] {
        Outcome o;
        using Cells = std::map<int, Rational>;
        const std::map<int, Cells> want = {{4, {{2, frac(64, 21)}}},
                                           {5, {{1, frac(100, 33)}, {2, frac(25, 8)}}},
                                           {6, {{2, frac(16, 5)}}},
                                           {7, {{1, frac(49, 16)}, {2, frac(49, 15)}}},
                                           {8, {{1, frac(256, 85)}, {2, frac(256, 77)}}}};
        for (const auto &[q, cells] : want)
            o.require(table2(q) == cells, "cells differ at q=" + std::to_string(q));
        return o;
    });

    criterion(3, "windowed search q=5..8 and exclusions", 300, [] {
        Outcome o;
        SearchConfig config;
        config.q_range = {5, 6, 7, 8};
        cli::apply_window(config, "paper");
        auto found = enumerate_windowed(config);
        std::set<std::pair<std::string, std::string>> got;
        for (const auto &c : found)
            got.insert({c.c2c1.str(), c.c13.str()});
        o.require(got == std::set<std::pair<std::string, std::string>>{
                             {"375/28", "1125/28"}, {"160/21", "500/21"}, {"105/8", "343/8"}},
                  "survivor classes differ");
        auto kept = apply_exclusions(found, load_exclusions(cli::default_verify_options().exclusions)).kept;
        std::set<std::pair<std::string, std::string>> left;
        for (const auto &c : kept)
            left.insert({c.c2c1.str(), c.c13.str()});
        o.require(left == std::set<std::pair<std::string, std::string>>{{"160/21", "500/21"}},
                  "exclusions leave the wrong set");
        return o;
    });

    criterion(4, "q=4 window (121/41, 64/21]", 300, [] {
        Outcome o;
        SearchConfig config;
        config.q_range = {4};
        cli::apply_window(config, "remark");
        auto found = enumerate_windowed(config);
        o.require(classes_of(found) == Classes{{4, "7,13", "384/91", "1152/91"}}, "classes differ");
        for (const auto &c : found)
            o.require(c.ratio() == Rational(3), "ratio " + c.ratio().str());
        return o;
    });

    criterion(5, "small c2c1 search", 600, [] {
        Outcome o;
        SmallC2C1Config config;
        config.threshold = frac(1, 10);
        config.ratio_bound = frac(25, 8);
        config.h_depth = 1;
        std::set<std::tuple<std::string, std::string, std::string, std::vector<int>>> got;
        for (const auto &c : enumerate_small_c2c1(config))
            got.insert({c.basket.r_set_str(), c.c2c1.str(), c.c13.str(), c.possible_q});
        std::set<std::tuple<std::string, std::string, std::string, std::vector<int>>> want = {
            {"2^2,3^3,13", "1/13", "1/13", {1}},
            {"2^2,3^3,13", "1/13", "3/13", {1}},
            {"2,3,7,13", "29/546", "61/546", {1}}};
        o.require(got == want, "classes differ");
        return o;
    });

    criterion(6, "P(1,2,3,5) cross-check", 1, [] {
        Outcome o;
        const Basket basket = Basket::parse("1/2,1/3,2/5");
        auto c = FanoCandidate::from_basket(11, basket, IndexMode::Weil);
        int vanishing = 0;
        for (int t = -1; t > -11; --t)
            vanishing += chi_tA(11, basket, c.A3, t).sign() == 0;
        o.require(vanishing == 10, std::to_string(vanishing) + " vanishings");
        o.require(c.A3 == frac(1, 30), "A3 " + c.A3.str());
        o.require(c.c13 == frac(1331, 30), "c13 " + c.c13.str());
        o.require(c.c2c1 == frac(451, 30), "c2c1 " + c.c2c1.str());
        o.require(c.ratio() == frac(121, 41), "ratio " + c.ratio().str());
        return o;
    });

    criterion(7, "property suite", 120, [] {
        Outcome o;
        std::mt19937 rng(20240607);
        for (int k = 0; k < 1000; ++k) {
            Basket b = oracle::random_basket(rng);
            o.require(c2c1_from_basket(b) + singularity_sum(b) == Rational(24), "singularity sum " + b.str());
            o.require(chi_neg_nK(b, Rational(k % 7), 0) == Rational(1), "chi(0) " + b.str());
        }
        for (int r = 2; r <= 30; ++r)
            for (int b = 1; b < r; ++b) {
                if (std::gcd(b, r) != 1)
                    continue;
                for (int i = 0; i < r; ++i) {
                    auto direct = oracle::local_term_raw(b, r, i);
                    auto flipped = oracle::local_term_raw(r - b, r, i);
                    o.require(direct == flipped, "flip at " + std::to_string(b) + "/" + std::to_string(r));
                    o.require(local_term(LocalDatum(OrbifoldPoint(b, r), i)) == direct,
                              "local_term at " + std::to_string(b) + "/" + std::to_string(r));
                }
            }

        SearchConfig wide;
        wide.q_range = {4, 5, 6, 7, 8};
        wide.ratio_lo = Rational(0);
        wide.ratio_hi = Rational(100);
        for (const auto &c : enumerate_windowed(wide)) {
            o.require(c.h0().is_nonnegative_integer(), "h0 of " + c.basket.str());
            for (const auto &h : hilbert_coeffs(c.basket, c.c13, 1))
                o.require(h.is_nonnegative_integer(), "hilbert of " + c.basket.str());
        }
        SmallC2C1Config small;
        small.threshold = frac(1, 10);
        small.ratio_bound = frac(25, 8);
        for (const auto &c : enumerate_small_c2c1(small))
            for (const auto &h : c.hilbert)
                o.require(h.is_nonnegative_integer(), "small hilbert of " + c.basket.str());

        for (int q = 1; q <= 8; ++q)
            for (const auto &[q1, r1] : destabilizing_pairs(hn_types(q)))
                o.require(langer_bound(q, q1, r1) > Rational(3), "langer at q=" + std::to_string(q));

        for (const auto &[lo, hi] : {std::pair{Rational(0), Rational(100)}, std::pair{frac(121, 41), frac(49, 15)}}) {
            SearchConfig config;
            config.q_range = {5, 7};
            config.ratio_lo = lo;
            config.ratio_hi = hi;
            config.max_points = 3;
            config.allowed_r = {2, 3, 4, 5, 6, 7, 8};
            std::set<std::tuple<int, std::string, std::string>> mine, theirs;
            for (const auto &c : enumerate_windowed(config))
                mine.insert({c.q, c.basket.str(), c.A3.str()});
            for (const auto &h : oracle::brute_force_windowed({5, 7}, 8, 3, lo, hi))
                theirs.insert({h.q, h.basket.str(), h.A3.str()});
            o.require(!theirs.empty(), "brute force found nothing in (" + lo.str() + ", " + hi.str() + "]");
            o.require(mine == theirs, "brute force mismatch in window (" + lo.str() + ", " + hi.str() + "]");
        }
        return o;
    });

    criterion(8, "Hilbert fingerprint", 1, [] {
        Outcome o;
        auto coeffs = hilbert_coeffs(Basket::parse("1/2,1/3,3/7,6/13"), frac(61, 546), 2);
        o.require(coeffs == std::vector<Rational>{Rational(1), Rational(0), Rational(1)}, "coefficients differ");
        return o;
    });

    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

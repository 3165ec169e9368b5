#include "qfano/hn_slopes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qfano {

namespace {

bool passes_rank_one_cap(int q, int q1, const SlopeCapRule &cap)
{
    if (2 * q1 >= q)
        return false;
    if (cap.kind == SlopeCapRule::Kind::Terminal) {
        const int r = cap.gorenstein_index;
        if (static_cast<long long>(2 * r + 1) * q1 > static_cast<long long>(r) * q)
            return false;
    }
    return true;
}

// slope a/b > c/d for positive ranks
bool steeper(const SlopePiece &x, const SlopePiece &y)
{
    return x.degree * y.rank > y.degree * x.rank;
}

} // namespace

std::string HNType::str() const
{
    std::string out;
    for (const auto &p : pieces)
        out += "(" + std::to_string(p.degree) + "," + std::to_string(p.rank) + ")";
    return out;
}

std::vector<HNType> hn_types(int q, SlopeCapRule cap)
{
    if (q < 1)
        throw std::invalid_argument("hn_types needs q >= 1");
    if (cap.gorenstein_index < 1)
        throw std::invalid_argument("Gorenstein index must be >= 1");

    static const std::vector<std::vector<int>> rank_splits = {{1, 2}, {2, 1}, {1, 1, 1}};
    std::vector<HNType> result;
    for (const auto &ranks : rank_splits) {
        const std::size_t len = ranks.size();
        std::vector<int> degrees(len, 1);
        // all compositions of q into len positive parts
        auto emit = [&] {
            HNType type{q, {}};
            for (std::size_t i = 0; i < len; ++i)
                type.pieces.push_back({degrees[i], ranks[i]});
            const auto &first = type.pieces.front();
            if (3 * first.degree <= q * first.rank)
                return;
            for (std::size_t i = 0; i + 1 < len; ++i)
                if (!steeper(type.pieces[i], type.pieces[i + 1]))
                    return;
            if (first.rank == 1 && !passes_rank_one_cap(q, first.degree, cap))
                return;
            result.push_back(std::move(type));
        };
        if (len == 2) {
            for (int a = 1; a < q; ++a) {
                degrees = {a, q - a};
                emit();
            }
        } else {
            for (int a = 1; a < q; ++a)
                for (int b = 1; a + b < q; ++b) {
                    degrees = {a, b, q - a - b};
                    emit();
                }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<std::pair<int, int>> destabilizing_pairs(const std::vector<HNType> &types)
{
    std::set<std::pair<int, int>> seen; // (r1, q1)
    for (const auto &t : types)
        seen.insert({t.destabilizing().rank, t.destabilizing().degree});
    std::vector<std::pair<int, int>> out;
    for (const auto &[r1, q1] : seen)
        out.emplace_back(q1, r1);
    return out;
}

Rational langer_bound(int q, int q1, int r1)
{
    if (q < 1 || q1 < 1)
        throw std::domain_error("langer_bound needs q, q1 >= 1");
    if (r1 != 1 && r1 != 2)
        throw std::domain_error("langer_bound needs r1 in {1, 2}, got " + std::to_string(r1));
    if (3 * q1 <= q * r1)
        throw std::domain_error("(" + std::to_string(q1) + "," + std::to_string(r1) +
                                ") does not destabilize for q=" + std::to_string(q));
    const Integer gap = Integer(3 * q1 - q * r1);
    const Rational defect(gap * gap, Integer(r1) * (3 - r1) * q * q);
    const Rational denom = Rational(2) - defect;
    if (denom.sign() <= 0)
        throw std::domain_error("langer_bound: no positive bound for this pair");
    return Rational(6) / denom;
}

std::map<int, Rational> table2(int q)
{
    if (q < 4 || q > 8)
        throw std::domain_error("table2 is defined for 4 <= q <= 8, got q=" + std::to_string(q));
    std::map<int, Rational> cells;
    for (const auto &[q1, r1] : destabilizing_pairs(hn_types(q))) {
        Rational b = langer_bound(q, q1, r1);
        auto it = cells.find(r1);
        if (it == cells.end())
            cells.emplace(r1, b);
        else if (it->second < b)
            it->second = b;
    }
    return cells;
}

KMBound km_bound(int q)
{
    if (q < 1)
        throw std::invalid_argument("km_bound needs q >= 1");
    if (q <= 3)
        return {Rational(3), "semistable: Bogomolov-Gieseker"};
    if (q <= 8) {
        Rational best(3);
        for (const auto &[r1, b] : table2(q))
            if (best < b)
                best = b;
        return {best, "destabilized: effective Langer bound"};
    }
    return {Rational(121, 41), "external: [Prokhorov2010, Prop 3.6]"};
}

ConeData cone_data(int i, int m)
{
    if (i < 1 || m < 1)
        throw std::invalid_argument("cone_data needs i, m >= 1");
    ConeData d;
    d.qL = m;
    d.qX = m + i;
    d.canonical = m <= i;
    d.terminal = m < i;
    d.cap_ratio = Rational(m, m + i);
    return d;
}

SlopeCaps slope_caps(int gorenstein_index)
{
    if (gorenstein_index < 1)
        throw std::invalid_argument("slope_caps needs a Gorenstein index >= 1");
    return {Rational(1, 2), Rational(gorenstein_index, 2 * gorenstein_index + 1)};
}

} // namespace qfano

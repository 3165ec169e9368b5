// Basket enumeration kernels.
//
// Baskets are multisets over an alphabet of points sorted by (r, b). Since
// r - 1/r grows with r, alphabet costs are non-decreasing, so a DFS that
// only appends points at or after the last one visits every multiset once
// and can stop a level as soon as the running singularity sum reaches the
// budget. The parallel kernels split the tree by the first point; the
// serial ones walk it from the root.

#include <algorithm>
#include <numeric>

#include <omp.h>

#include "qfano/fano_constraints.hpp"
#include "qfano/riemann_roch.hpp"

namespace qfano {

namespace {

// r - 1/r >= 24 once r >= 25, so no larger r fits a positive c2c1.
constexpr int kMaxR = 24;

struct Letter {
    OrbifoldPoint point;
    Rational cost;
    std::vector<Rational> terms; // c_Q(tA) for t = -1, -2, ..., -(q-1)
};

std::vector<Letter> make_alphabet(const std::vector<int> &allowed_r, int coprime_to, const Rational &budget)
{
    std::vector<Letter> alphabet;
    for (int r = 2; r <= kMaxR; ++r) {
        if (!allowed_r.empty() && std::find(allowed_r.begin(), allowed_r.end(), r) == allowed_r.end())
            continue;
        if (coprime_to > 0 && std::gcd(r, coprime_to) != 1)
            continue;
        for (int b = 1; 2 * b <= r; ++b) {
            if (std::gcd(b, r) != 1)
                continue;
            OrbifoldPoint p(b, r);
            Rational cost = p.cost();
            if (cost >= budget)
                continue;
            std::vector<Rational> terms;
            for (int t = -1; coprime_to > 0 && t > -coprime_to; --t)
                terms.push_back(local_term(LocalDatum(p, local_index_tA(coprime_to, t, r))));
            alphabet.push_back({p, std::move(cost), std::move(terms)});
        }
    }
    return alphabet;
}

class Walker {
public:
    Walker(const std::vector<Letter> &alphabet, Rational budget, int max_points)
        : alphabet_(alphabet), budget_(std::move(budget)), max_points_(max_points)
    {
        // Work units: the empty basket, each single point, and each subtree
        // below a two-point prefix.
        prefixes_.push_back({});
        for (std::size_t i = 0; i < alphabet_.size() && max_points_ >= 1; ++i) {
            if (alphabet_[i].cost >= budget_)
                break;
            prefixes_.push_back({i});
            for (std::size_t j = i; j < alphabet_.size() && max_points_ >= 2; ++j) {
                if (alphabet_[i].cost + alphabet_[j].cost >= budget_)
                    break;
                prefixes_.push_back({i, j});
            }
        }
    }

    // Every basket in canonical order, starting at the empty one.
    template <typename Visit>
    void walk_all(Visit &visit)
    {
        path_.clear();
        descend(0, Rational(0), visit);
    }

    // Work unit `part`: a prefix of length 0 or 1 alone, or every basket
    // extending a two-point prefix.
    template <typename Visit>
    void walk_part(std::size_t part, Visit &visit)
    {
        path_ = prefixes_[part];
        Rational spent;
        for (auto k : path_)
            spent += alphabet_[k].cost;
        if (path_.size() < 2)
            visit(path_, spent);
        else
            descend(path_.back(), spent, visit);
    }

    std::size_t parts() const { return prefixes_.size(); }

private:
    template <typename Visit>
    void descend(std::size_t start, const Rational &spent, Visit &visit)
    {
        visit(path_, spent);
        if (static_cast<int>(path_.size()) >= max_points_)
            return;
        for (std::size_t k = start; k < alphabet_.size(); ++k) {
            Rational next = spent + alphabet_[k].cost;
            if (next >= budget_)
                break;
            path_.push_back(k);
            descend(k, next, visit);
            path_.pop_back();
        }
    }

    const std::vector<Letter> &alphabet_;
    Rational budget_;
    int max_points_;
    std::vector<std::size_t> path_;
    std::vector<std::vector<std::size_t>> prefixes_;
};

Basket basket_of(const std::vector<Letter> &alphabet, const std::vector<std::size_t> &path)
{
    std::vector<OrbifoldPoint> points;
    points.reserve(path.size());
    for (auto k : path)
        points.push_back(alphabet[k].point);
    return Basket(std::move(points));
}

// Leaf test for the index-q search; appends survivors to `out`.
class WindowedFilter {
public:
    WindowedFilter(const SearchConfig &config, int q, const std::vector<Letter> &alphabet,
                   std::vector<FanoCandidate> &out)
        : config_(config), q_(q), upper_(config.upper_for(q)), alphabet_(alphabet), out_(out)
    {
    }

    void operator()(const std::vector<std::size_t> &path, const Rational &spent)
    {
        const Rational c2c1 = Rational(24) - spent;
        if (c2c1 <= config_.c2c1_min)
            return;
        std::vector<Rational> local(static_cast<std::size_t>(q_ - 1));
        for (auto k : path)
            for (std::size_t j = 0; j < local.size(); ++j)
                local[j] += alphabet_[k].terms[j];

        const Rational A3 =
            Rational(12, Integer(q_ - 1) * (q_ - 2)) * (Rational(1) - c2c1 / Rational(12 * q_) + local[0]);
        if (A3.sign() <= 0)
            return;
        Basket basket = basket_of(alphabet_, path);
        if (!compat_check(q_, basket, A3, config_.mode))
            return;
        for (int t = -1; t > -q_; --t) {
            Rational residual = Rational(1) + Rational(Integer(t) * (q_ + t) * (q_ + 2 * t), 12) * A3 +
                                Rational(t, Integer(12) * q_) * c2c1 + local[static_cast<std::size_t>(-t - 1)];
            if (residual.sign() != 0)
                return;
        }
        const Rational c13 = Rational(Integer(q_) * q_ * q_) * A3;
        const Rational ratio = c13 / c2c1;
        if (!(config_.ratio_lo < ratio && ratio <= upper_))
            return;
        out_.push_back({q_, std::move(basket), A3, c13, c2c1, config_.mode});
    }

private:
    const SearchConfig &config_;
    int q_;
    Rational upper_;
    const std::vector<Letter> &alphabet_;
    std::vector<FanoCandidate> &out_;
};

class SmallFilter {
public:
    SmallFilter(const SmallC2C1Config &config, const std::vector<Letter> &alphabet,
                std::vector<SmallC2C1Candidate> &out)
        : config_(config), alphabet_(alphabet), out_(out)
    {
    }

    void operator()(const std::vector<std::size_t> &path, const Rational &spent)
    {
        const Rational c2c1 = Rational(24) - spent;
        if (c2c1.sign() <= 0 || !(c2c1 < config_.threshold))
            return;
        Basket basket = basket_of(alphabet_, path);
        const Integer rx = gorenstein_index(basket);
        const Rational l2 = l_value(basket, 2);
        const Integer k_max = (config_.ratio_bound * c2c1 * Rational(rx)).floor();
        for (Integer k = 1; k <= k_max; ++k) {
            Rational c13(k, rx);
            if (!(c13 / Rational(2) + Rational(3) - l2).is_nonnegative_integer())
                continue;
            std::vector<Rational> coeffs = hilbert_coeffs(basket, c13, config_.h_depth);
            if (!std::all_of(coeffs.begin(), coeffs.end(), [](const Rational &x) { return x.is_nonnegative_integer(); }))
                continue;
            out_.push_back({basket, c13, c2c1, std::move(coeffs), possible_q(rx, c13, config_.mode)});
        }
    }

private:
    const SmallC2C1Config &config_;
    const std::vector<Letter> &alphabet_;
    std::vector<SmallC2C1Candidate> &out_;
};

template <typename T>
void sort_canonical(std::vector<T> &items)
{
    std::sort(items.begin(), items.end(), [](const T &a, const T &b) { return canonical_less(a, b); });
}

template <typename T, typename MakeFilter>
std::vector<T> run_parallel(Walker &proto_walker, MakeFilter make_filter)
{
    std::vector<T> merged;
    const auto parts = static_cast<std::int64_t>(proto_walker.parts());
#pragma omp parallel
    {
        std::vector<T> local;
        Walker walker = proto_walker;
        auto filter = make_filter(local);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t part = 0; part < parts; ++part)
            walker.walk_part(static_cast<std::size_t>(part), filter);
#pragma omp critical(qfano_merge)
        merged.insert(merged.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
    }
    return merged;
}

} // namespace

std::vector<FanoCandidate> enumerate_windowed(const SearchConfig &config)
{
    config.validate();
    std::vector<FanoCandidate> result;
    const Rational budget = Rational(24) - config.c2c1_min;
    for (int q : config.q_range) {
        const auto alphabet = make_alphabet(config.allowed_r, q, budget);
        Walker walker(alphabet, budget, config.max_points);
        auto found = run_parallel<FanoCandidate>(
            walker, [&](std::vector<FanoCandidate> &out) { return WindowedFilter(config, q, alphabet, out); });
        result.insert(result.end(), found.begin(), found.end());
    }
    sort_canonical(result);
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

std::vector<FanoCandidate> enumerate_windowed_serial(const SearchConfig &config)
{
    config.validate();
    std::vector<FanoCandidate> result;
    const Rational budget = Rational(24) - config.c2c1_min;
    for (int q : config.q_range) {
        const auto alphabet = make_alphabet(config.allowed_r, q, budget);
        Walker walker(alphabet, budget, config.max_points);
        WindowedFilter filter(config, q, alphabet, result);
        walker.walk_all(filter);
    }
    sort_canonical(result);
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

std::vector<SmallC2C1Candidate> enumerate_small_c2c1(const SmallC2C1Config &config)
{
    config.validate();
    const Rational budget(24);
    const auto alphabet = make_alphabet(config.allowed_r, 0, budget);
    Walker walker(alphabet, budget, config.max_points);
    auto result = run_parallel<SmallC2C1Candidate>(
        walker, [&](std::vector<SmallC2C1Candidate> &out) { return SmallFilter(config, alphabet, out); });
    sort_canonical(result);
    return result;
}

std::vector<SmallC2C1Candidate> enumerate_small_c2c1_serial(const SmallC2C1Config &config)
{
    config.validate();
    const Rational budget(24);
    const auto alphabet = make_alphabet(config.allowed_r, 0, budget);
    Walker walker(alphabet, budget, config.max_points);
    std::vector<SmallC2C1Candidate> result;
    SmallFilter filter(config, alphabet, result);
    walker.walk_all(filter);
    sort_canonical(result);
    return result;
}

} // namespace qfano

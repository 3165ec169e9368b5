#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfano/exclusions.hpp"
#include "qfano/hn_slopes.hpp"
#include "qfano/io.hpp"
#include "qfano/riemann_roch.hpp"

namespace qfano::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string &text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int value = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            out.push_back(value);
        } catch (const std::exception &) {
            throw UsageError("bad integer list '" + text + "'");
        }
    }
    return out;
}

// Writes through `fn` to `path`, or to `fallback` when path is "-".
template <typename F>
void emit(const std::string &path, std::ostream &fallback, F &&fn)
{
    if (path == "-") {
        fn(fallback);
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw UsageError("cannot write to " + path);
    fn(file);
    if (!file)
        throw UsageError("write failed for " + path);
}

json report_base(const std::vector<std::string> &args)
{
    std::string echo = "qfano";
    for (const auto &a : args)
        echo += " " + a;
    return json{{"command", echo}};
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

json window_echo(const SearchConfig &config)
{
    json windows = json::object();
    for (int q : config.q_range)
        windows[std::to_string(q)] = {config.ratio_lo.str(), config.upper_for(q).str()};
    return windows;
}

std::size_t class_count(const std::vector<FanoCandidate> &candidates)
{
    std::vector<std::pair<int, std::vector<int>>> classes;
    for (const auto &c : candidates)
        classes.emplace_back(c.q, c.basket.r_values());
    std::sort(classes.begin(), classes.end());
    return static_cast<std::size_t>(std::unique(classes.begin(), classes.end()) - classes.begin());
}

struct EnumerateArgs {
    std::string q = "5..8";
    std::string window = "paper";
    std::string mode = "qW";
    int max_points = 16;
    std::string c2c1_min = "0";
    std::string r_subset;
    std::string exclude;
    std::string out = "-";
    bool serial = false;
    int threads = 0;
};

void add_enumerate_flags(CLI::App *cmd, EnumerateArgs &a)
{
    cmd->add_option("--q", a.q, "index range, e.g. 5..8, 4 or 5,7")->capture_default_str();
    cmd->add_option("--window", a.window, "paper | remark | LO:HI (LO exclusive, HI inclusive)")
        ->capture_default_str();
    cmd->add_option("--mode", a.mode, "qW | qQ")->capture_default_str();
    cmd->add_option("--max-points", a.max_points, "maximum basket size")->capture_default_str();
    cmd->add_option("--c2c1-min", a.c2c1_min, "exclusive lower bound on c2c1")->capture_default_str();
    cmd->add_option("--r-subset", a.r_subset, "restrict r to this comma list");
    cmd->add_option("--exclude", a.exclude, "exclusion file");
    cmd->add_flag("--serial", a.serial, "use the serial reference kernel");
    cmd->add_option("--threads", a.threads, "OpenMP worker count (0 = runtime default)");
}

SearchConfig search_config(const EnumerateArgs &a)
{
    SearchConfig config;
    config.q_range = parse_q_range(a.q);
    config.mode = parse_index_mode(a.mode);
    config.max_points = a.max_points;
    config.c2c1_min = Rational::parse(a.c2c1_min);
    if (!a.r_subset.empty())
        config.allowed_r = parse_int_list(a.r_subset);
    apply_window(config, a.window);
    config.validate();
    return config;
}

struct EnumerateResult {
    std::vector<FanoCandidate> kept;
    std::vector<RemovedCandidate> removed;
    json report;
};

EnumerateResult run_enumeration(const EnumerateArgs &a)
{
    SearchConfig config = search_config(a);
    if (a.threads > 0)
        omp_set_num_threads(a.threads);
    const auto start = std::chrono::steady_clock::now();
    auto candidates = a.serial ? enumerate_windowed_serial(config) : enumerate_windowed(config);
    EnumerateResult result;
    result.report["config"] = {{"q", config.q_range},
                               {"window", window_echo(config)},
                               {"mode", to_string(config.mode)},
                               {"max_points", config.max_points},
                               {"c2c1_min", config.c2c1_min.str()},
                               {"r_subset", config.allowed_r},
                               {"kernel", a.serial ? "serial" : "openmp"}};
    result.report["enumerated"] = candidates.size();
    if (!a.exclude.empty()) {
        auto outcome = apply_exclusions(candidates, load_exclusions(a.exclude));
        json removed = json::array();
        for (const auto &r : outcome.removed)
            removed.push_back({{"q", r.candidate.q}, {"R", r.candidate.basket.r_set_str()}, {"reason", r.reason}});
        result.report["excluded"] = removed;
        result.kept = std::move(outcome.kept);
        result.removed = std::move(outcome.removed);
    } else {
        result.kept = std::move(candidates);
    }
    result.report["candidates"] = result.kept.size();
    result.report["classes"] = class_count(result.kept);
    result.report["wall_seconds"] = seconds_since(start);
    return result;
}

int cmd_rr(const std::string &basket_text, const std::string &c13_text, int n, std::ostream &out)
{
    Basket basket = Basket::parse(basket_text);
    Rational c13 = Rational::parse(c13_text);
    if (c13.sign() < 0)
        throw UsageError("--c13 must be nonnegative");
    if (n < 0)
        throw UsageError("--n must be nonnegative");
    Rational h0 = h0_neg_K(basket, c13);
    json j;
    j["basket"] = basket.str();
    j["c13"] = c13.str();
    j["coeffs"] = io::rational_array(hilbert_coeffs(basket, c13, n));
    j["h0"] = h0.str();
    j["h0_integral"] = h0.is_nonnegative_integer();
    out << j.dump() << '\n';
    return kOk;
}

int cmd_hn(int q, bool as_json, int terminal_index, std::ostream &out)
{
    SlopeCapRule rule = terminal_index > 0 ? SlopeCapRule::terminal(terminal_index) : SlopeCapRule::canonical();
    auto types = hn_types(q, rule);
    out << (as_json ? io::hn_table_json(q, types) : io::hn_table_text(q, types));
    return kOk;
}

int cmd_langer(int q, bool as_json, std::ostream &out)
{
    auto cells = table2(q);
    out << (as_json ? io::langer_table_json(q, cells) : io::langer_table_text(q, cells));
    return kOk;
}

int cmd_verify(const VerifyOptions &options, std::ostream &out)
{
    const auto start = std::chrono::steady_clock::now();
    auto checks = run_verification(options);
    int failed = 0, skipped = 0;
    for (const auto &c : checks) {
        const char *tag = c.verdict == Check::Verdict::Pass   ? "PASS"
                          : c.verdict == Check::Verdict::Fail ? "FAIL"
                                                              : "SKIP";
        out << "[" << tag << "] " << c.name;
        if (c.verdict == Check::Verdict::Fail)
            out << "\n    expected: " << c.expected << "\n    actual:   " << c.actual;
        else if (c.verdict == Check::Verdict::Skipped)
            out << " (" << c.actual << ")";
        out << '\n';
        failed += c.verdict == Check::Verdict::Fail;
        skipped += c.verdict == Check::Verdict::Skipped;
    }
    out << checks.size() << " checks, " << failed << " failed, " << skipped << " skipped, "
        << seconds_since(start) << " s\n";
    return failed == 0 ? kOk : kMismatch;
}

} // namespace

std::vector<int> parse_q_range(const std::string &text)
{
    std::vector<int> qs;
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        auto lo = parse_int_list(text.substr(0, dots));
        auto hi = parse_int_list(text.substr(dots + 2));
        if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0])
            throw UsageError("bad q range '" + text + "'");
        for (int q = lo[0]; q <= hi[0]; ++q)
            qs.push_back(q);
    } else {
        qs = parse_int_list(text);
    }
    if (qs.empty())
        throw UsageError("empty q range");
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    return qs;
}

void apply_window(SearchConfig &config, const std::string &window)
{
    config.upper_by_q.clear();
    if (window == "paper") {
        config.ratio_lo = Rational(121, 41);
        for (int q : config.q_range)
            config.upper_by_q.emplace_back(q, km_bound(q).value);
        config.ratio_hi = config.upper_by_q.empty() ? Rational(3) : config.upper_by_q.front().second;
        return;
    }
    if (window == "remark") {
        config.ratio_lo = Rational(121, 41);
        config.ratio_hi = Rational(64, 21);
        return;
    }
    auto colon = window.find(':');
    if (colon == std::string::npos)
        throw UsageError("unknown window '" + window + "' (expected paper, remark or LO:HI)");
    config.ratio_lo = Rational::parse(window.substr(0, colon));
    config.ratio_hi = Rational::parse(window.substr(colon + 1));
    if (!(config.ratio_lo < config.ratio_hi))
        throw UsageError("empty window: need LO < HI, got " + window);
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Orbifold Riemann-Roch and Kawamata-Miyaoka case analysis for Q-Fano threefolds", "qfano"};
    app.require_subcommand(1);

    std::string basket_text, c13_text = "0";
    int rr_n = 2;
    auto *rr = app.add_subcommand("rr", "Hilbert coefficients chi(-mK), m = 0..n, and h0(-K)");
    rr->add_option("--basket", basket_text, "basket, e.g. 1/2,1/3,3/7,6/13 (empty = Gorenstein)")->required();
    rr->add_option("--c13", c13_text, "c1^3 as a rational")->required();
    rr->add_option("--n", rr_n, "highest multiple")->capture_default_str();

    EnumerateArgs en;
    auto *enumerate = app.add_subcommand("enumerate", "windowed basket search for index q >= 3");
    add_enumerate_flags(enumerate, en);
    enumerate->add_option("--out", en.out, "JSON-lines output ('-' = stdout)")->capture_default_str();

    std::string threshold = "1/10", bound = "25/8", small_mode = "qW", small_subset, small_out = "-";
    int depth = 1, small_max_points = 16;
    bool small_serial = false;
    auto *small = app.add_subcommand("small-c2c1", "baskets with 0 < c2c1 < threshold");
    small->add_option("--threshold", threshold, "exclusive upper bound on c2c1")->capture_default_str();
    small->add_option("--bound", bound, "c1^3 <= bound * c2c1")->capture_default_str();
    small->add_option("--depth", depth, "require chi(-mK) in Z>=0 for m <= depth")->capture_default_str();
    small->add_option("--mode", small_mode, "qW | qQ (for possible_q)")->capture_default_str();
    small->add_option("--max-points", small_max_points, "maximum basket size")->capture_default_str();
    small->add_option("--r-subset", small_subset, "restrict r to this comma list");
    small->add_flag("--serial", small_serial, "use the serial reference kernel");
    small->add_option("--out", small_out, "JSON-lines output ('-' = stdout)")->capture_default_str();

    int hn_q = 0, terminal_index = 0;
    bool hn_json = false;
    auto *hn = app.add_subcommand("hn", "Harder-Narasimhan types of the tangent sheaf for index q");
    hn->add_option("--q", hn_q, "Fano index")->required();
    hn->add_flag("--json", hn_json, "JSON instead of text");
    hn->add_option("--terminal-cap", terminal_index, "apply the terminal rank-one cap for this Gorenstein index");

    int langer_q = 0;
    bool langer_json = false;
    auto *langer = app.add_subcommand("langer", "effective bound b per destabilizing rank, 4 <= q <= 8");
    langer->add_option("--q", langer_q, "Fano index")->required();
    langer->add_flag("--json", langer_json, "JSON instead of text");

    EnumerateArgs geo;
    std::string geo_input, geo_out = "-";
    auto *geography = app.add_subcommand("geography", "CSV of (R, q, c2c1, c1^3, ratio)");
    add_enumerate_flags(geography, geo);
    geography->add_option("--input", geo_input, "read candidates from a JSON-lines file instead of searching");
    geography->add_option("--out", geo_out, "CSV output ('-' = stdout)")->capture_default_str();

    VerifyOptions verify_options = default_verify_options();
    std::string exclusions_path = verify_options.exclusions.string();
    std::string golden_path = verify_options.golden_dir.string();
    auto *verify = app.add_subcommand("verify", "run every reproduction check");
    verify->add_option("--exclusions", exclusions_path, "exclusion file")->capture_default_str();
    verify->add_option("--golden-dir", golden_path, "golden table directory")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*rr)
            return cmd_rr(basket_text, c13_text, rr_n, out);

        if (*enumerate) {
            auto result = run_enumeration(en);
            emit(en.out, out, [&](std::ostream &os) { io::write_jsonl(os, result.kept); });
            result.report.update(report_base(args));
            result.report["output"] = en.out;
            err << result.report.dump() << '\n';
            return kOk;
        }

        if (*small) {
            SmallC2C1Config config;
            config.threshold = Rational::parse(threshold);
            config.ratio_bound = Rational::parse(bound);
            config.h_depth = depth;
            config.mode = parse_index_mode(small_mode);
            config.max_points = small_max_points;
            if (!small_subset.empty())
                config.allowed_r = parse_int_list(small_subset);
            const auto start = std::chrono::steady_clock::now();
            auto found = small_serial ? enumerate_small_c2c1_serial(config) : enumerate_small_c2c1(config);
            emit(small_out, out, [&](std::ostream &os) { io::write_jsonl(os, found); });
            json report = report_base(args);
            report["config"] = {{"threshold", config.threshold.str()},
                                {"bound", config.ratio_bound.str()},
                                {"depth", config.h_depth},
                                {"mode", to_string(config.mode)}};
            report["candidates"] = found.size();
            report["wall_seconds"] = seconds_since(start);
            report["output"] = small_out;
            err << report.dump() << '\n';
            return kOk;
        }

        if (*hn)
            return cmd_hn(hn_q, hn_json, terminal_index, out);

        if (*langer)
            return cmd_langer(langer_q, langer_json, out);

        if (*geography) {
            std::vector<FanoCandidate> candidates;
            if (!geo_input.empty()) {
                std::ifstream in(geo_input);
                if (!in)
                    throw UsageError("cannot read " + geo_input);
                candidates = io::read_jsonl(in);
            } else {
                candidates = run_enumeration(geo).kept;
            }
            std::vector<io::GeographyRow> rows;
            for (const auto &c : candidates)
                rows.push_back({c.basket.r_set_str(), c.q, c.c2c1, c.c13});
            emit(geo_out, out, [&](std::ostream &os) { io::write_geography_csv(os, rows); });
            return kOk;
        }

        if (*verify)
            return cmd_verify({exclusions_path, golden_path}, out);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace qfano::cli

#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "qfano/exclusions.hpp"
#include "qfano/hn_slopes.hpp"
#include "qfano/io.hpp"
#include "qfano/riemann_roch.hpp"

#ifndef QFANO_DATA_DIR
#define QFANO_DATA_DIR "data"
#endif
#ifndef QFANO_GOLDEN_DIR
#define QFANO_GOLDEN_DIR "tests/data/golden/v1"
#endif

namespace qfano::cli {

namespace {

// (R_X string, c2c1, c1^3) triples, one per distinct class.
using ClassKey = std::tuple<int, std::string, std::string, std::string>;

std::string describe(const std::set<ClassKey> &classes)
{
    std::string out = "{";
    for (const auto &[q, r, c2c1, c13] : classes) {
        if (out.size() > 1)
            out += "; ";
        out += "q=" + std::to_string(q) + " R={" + r + "} c2c1=" + c2c1 + " c13=" + c13;
    }
    return out + "}";
}

std::set<ClassKey> classes_of(const std::vector<FanoCandidate> &candidates)
{
    std::set<ClassKey> out;
    for (const auto &c : candidates)
        out.insert({c.q, c.basket.r_set_str(), c.c2c1.str(), c.c13.str()});
    return out;
}

Check compare(std::string name, const std::string &expected, const std::string &actual)
{
    return {std::move(name), expected == actual ? Check::Verdict::Pass : Check::Verdict::Fail, expected, actual};
}

std::string pairs_str(const std::vector<std::pair<int, int>> &pairs)
{
    std::string out;
    for (const auto &[q1, r1] : pairs)
        out += "(" + std::to_string(q1) + "," + std::to_string(r1) + ")";
    return out;
}

std::string cells_str(const std::map<int, Rational> &cells)
{
    std::string out;
    for (int r1 = 1; r1 <= 2; ++r1) {
        auto it = cells.find(r1);
        out += (out.empty() ? "" : " ") + std::to_string(r1) + ":" + (it == cells.end() ? "/" : it->second.str());
    }
    return out;
}

std::optional<std::string> slurp(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SearchConfig paper_window(std::vector<int> qs)
{
    SearchConfig config;
    config.q_range = std::move(qs);
    apply_window(config, "paper");
    return config;
}

bool pipeline_consistent(const FanoCandidate &c)
{
    if (c.c13 != Rational(Integer(c.q) * c.q * c.q) * c.A3 || c.c2c1 != c2c1_from_basket(c.basket))
        return false;
    if (!compat_check(c.q, c.basket, c.A3, c.mode))
        return false;
    for (int t = -1; t > -c.q; --t)
        if (chi_tA(c.q, c.basket, c.A3, t).sign() != 0)
            return false;
    return true;
}

} // namespace

VerifyOptions default_verify_options()
{
    return {std::filesystem::path(QFANO_DATA_DIR) / "exclusions.txt", std::filesystem::path(QFANO_GOLDEN_DIR)};
}

std::vector<Check> run_verification(const VerifyOptions &options)
{
    std::vector<Check> checks;

    // destabilizing pairs
    {
        static const std::map<int, std::string> expected = {
            {4, "(3,2)"}, {5, "(2,1)(4,2)"}, {6, "(5,2)"}, {7, "(3,1)(5,2)(6,2)"}, {8, "(3,1)(6,2)(7,2)"}};
        std::string want, got;
        for (int q = 1; q <= 8; ++q) {
            auto types = hn_types(q);
            want += "q" + std::to_string(q) + ":" + (q >= 4 ? expected.at(q) : "") + " ";
            got += "q" + std::to_string(q) + ":" + pairs_str(destabilizing_pairs(types)) + " ";
            for (const auto &t : types)
                if (t.pieces.size() != 2)
                    got += "[length " + std::to_string(t.pieces.size()) + " " + t.str() + "] ";
        }
        checks.push_back(compare("destabilizing pairs for q <= 8, all of length two", want, got));
    }

    // effective bounds
    {
        std::string want = "q4 1:/ 2:64/21 | q5 1:100/33 2:25/8 | q6 1:/ 2:16/5 | q7 1:49/16 2:49/15 | q8 1:256/85 2:256/77";
        std::string got;
        for (int q = 4; q <= 8; ++q)
            got += (got.empty() ? "" : " | ") + std::string("q") + std::to_string(q) + " " + cells_str(table2(q));
        checks.push_back(compare("effective bounds b for 4 <= q <= 8", want, got));
    }

    // golden renderings
    for (int q = 4; q <= 8; ++q) {
        const auto types = hn_types(q);
        const auto cells = table2(q);
        const std::pair<std::string, std::string> renders[] = {
            {"hn_q" + std::to_string(q) + ".txt", io::hn_table_text(q, types)},
            {"hn_q" + std::to_string(q) + ".json", io::hn_table_json(q, types)},
            {"langer_q" + std::to_string(q) + ".txt", io::langer_table_text(q, cells)},
            {"langer_q" + std::to_string(q) + ".json", io::langer_table_json(q, cells)},
        };
        for (const auto &[file, rendered] : renders) {
            auto golden = slurp(options.golden_dir / file);
            checks.push_back(compare("golden " + file, golden ? *golden : "<missing " + file + ">", rendered));
        }
    }

    // windowed search, q = 5..8
    {
        auto found = enumerate_windowed(paper_window({5, 6, 7, 8}));
        std::set<ClassKey> want = {{5, "3,7^2", "160/21", "500/21"},
                                   {5, "4,7", "375/28", "1125/28"},
                                   {7, "2^2,8", "105/8", "343/8"}};
        checks.push_back(compare("windowed search q=5..8 leaves three classes", describe(want), describe(classes_of(found))));

        std::string ratios;
        for (const auto &c : found)
            ratios += c.ratio().str() + " ";
        checks.push_back(compare("survivor ratios", "25/8 3 49/15 ", ratios));

        bool consistent = std::all_of(found.begin(), found.end(), pipeline_consistent);
        checks.push_back(compare("survivors satisfy every vanishing and compatibility", "true", consistent ? "true" : "false"));

        if (!std::filesystem::exists(options.exclusions)) {
            checks.push_back({"exclusions leave only q=5 R={3,7^2}", Check::Verdict::Skipped, "",
                              "no exclusion file at " + options.exclusions.string()});
        } else {
            auto outcome = apply_exclusions(found, load_exclusions(options.exclusions));
            checks.push_back(compare("exclusions leave only q=5 R={3,7^2}", describe({{5, "3,7^2", "160/21", "500/21"}}),
                                     describe(classes_of(outcome.kept))));
        }

        auto serial = enumerate_windowed_serial(paper_window({5, 6, 7, 8}));
        checks.push_back(compare("serial and parallel kernels agree", std::to_string(serial.size()) + " identical",
                                 std::to_string(found.size()) + (serial == found ? " identical" : " differing")));
    }

    // q = 4
    {
        SearchConfig config;
        config.q_range = {4};
        apply_window(config, "remark");
        auto found = enumerate_windowed(config);
        checks.push_back(compare("q=4 window (121/41, 64/21] leaves R={7,13}", describe({{4, "7,13", "384/91", "1152/91"}}),
                                 describe(classes_of(found))));
        std::string ratios;
        for (const auto &c : found)
            ratios += c.ratio().str() + " ";
        checks.push_back(compare("q=4 ratio", "3 ", ratios));
    }

    // small c2c1
    {
        SmallC2C1Config config;
        config.threshold = Rational(1, 10);
        config.ratio_bound = Rational(25, 8);
        auto found = enumerate_small_c2c1(config);
        std::set<std::string> got;
        for (const auto &c : found) {
            std::string qs;
            for (int q : c.possible_q)
                qs += (qs.empty() ? "" : ",") + std::to_string(q);
            got.insert("R={" + c.basket.r_set_str() + "} c2c1=" + c.c2c1.str() + " c13=" + c.c13.str() + " q={" + qs + "}");
        }
        std::string want_text = "R={2,3,7,13} c2c1=29/546 c13=61/546 q={1}; R={2^2,3^3,13} c2c1=1/13 c13=1/13 q={1}; "
                                "R={2^2,3^3,13} c2c1=1/13 c13=3/13 q={1}; ";
        std::string got_text;
        for (const auto &s : got)
            got_text += s + "; ";
        checks.push_back(compare("c2c1 < 1/10 leaves two classes", want_text, got_text));
    }

    // P(1,2,3,5)
    {
        const Basket basket = Basket::parse("1/2,1/3,2/5");
        auto c = FanoCandidate::from_basket(11, basket, IndexMode::Weil);
        int vanishing = 0;
        for (int t = -1; t > -11; --t)
            vanishing += chi_tA(11, basket, c.A3, t).sign() == 0;
        checks.push_back(compare("P(1,2,3,5): A3 c13 c2c1 ratio vanishings", "1/30 1331/30 451/30 121/41 10",
                                 c.A3.str() + " " + c.c13.str() + " " + c.c2c1.str() + " " + c.ratio().str() + " " +
                                     std::to_string(vanishing)));
    }

    // Hilbert fingerprint
    {
        auto coeffs = hilbert_coeffs(Basket::parse("1/2,1/3,3/7,6/13"), Rational(61, 546), 2);
        checks.push_back(compare("Hilbert coefficients for R={2,3,7,13}, c13=61/546", "[\"1\",\"0\",\"1\"]",
                                 io::rational_array(coeffs).dump()));
    }

    return checks;
}

} // namespace qfano::cli

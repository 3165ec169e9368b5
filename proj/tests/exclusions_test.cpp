#include <fstream>
#include <sstream>

#include <doctest.h>

#include "qfano/exclusions.hpp"

using qfano::Basket;
using qfano::FanoCandidate;
using qfano::IndexMode;

namespace {

std::vector<FanoCandidate> survivors()
{
    return {FanoCandidate::from_basket(5, Basket::parse("1/3,2/7,3/7"), IndexMode::Weil),
            FanoCandidate::from_basket(5, Basket::parse("1/4,2/7"), IndexMode::Weil),
            FanoCandidate::from_basket(7, Basket::parse("1/2,1/2,3/8"), IndexMode::Weil)};
}

} // namespace

TEST_CASE("shipped exclusion file leaves the q=5 R={3,7^2} class")
{
    auto list = qfano::load_exclusions(std::string(QFANO_DATA_DIR) + "/exclusions.txt");
    CHECK(list.entries.size() == 2);
    CHECK(std::find(list.sections.begin(), list.sections.end(), "torsion-cl") != list.sections.end());
    auto outcome = qfano::apply_exclusions(survivors(), list);
    REQUIRE(outcome.kept.size() == 1);
    CHECK(outcome.kept[0].q == 5);
    CHECK(outcome.kept[0].basket.r_set_str() == "3,7^2");
    REQUIRE(outcome.removed.size() == 2);
    CHECK(outcome.removed[0].reason.find("7.5") != std::string::npos);
    CHECK(outcome.removed[1].reason.find("Claim 6.5") != std::string::npos);
}

TEST_CASE("empty exclusion list is the identity")
{
    std::istringstream in("# nothing\n\n[empty]\n");
    auto outcome = qfano::apply_exclusions(survivors(), qfano::parse_exclusions(in));
    CHECK(outcome.kept == survivors());
    CHECK(outcome.removed.empty());
}

TEST_CASE("unlisted candidates pass through")
{
    std::istringstream in("q=6; R=5,7; reason=made up\nq=5; R=3,7; reason=wrong multiplicity\n");
    auto outcome = qfano::apply_exclusions(survivors(), qfano::parse_exclusions(in));
    CHECK(outcome.kept == survivors());
}

TEST_CASE("entries match on both q and R")
{
    std::istringstream in("q=7; R=4,7; reason=wrong q\n");
    CHECK(qfano::apply_exclusions(survivors(), qfano::parse_exclusions(in)).kept.size() == 3);
}

TEST_CASE("reason text may contain separators")
{
    std::istringstream in("q=5 ; R = 4,7 ;reason= see [X, 7.5]; also q=3\n");
    auto list = qfano::parse_exclusions(in);
    REQUIRE(list.entries.size() == 1);
    CHECK(list.entries[0].reason == "see [X, 7.5]; also q=3");
    CHECK(list.entries[0].r_set == std::vector<int>{4, 7});
}

TEST_CASE("malformed exclusion files report the line")
{
    auto line_of = [](const std::string &text) -> std::string {
        std::istringstream in(text);
        try {
            qfano::parse_exclusions(in);
        } catch (const qfano::ParseError &e) {
            return e.what();
        }
        return "no error";
    };
    CHECK(line_of("# ok\nq=5; R=4,7\n").find("line 2") != std::string::npos);
    CHECK(line_of("q=x; R=4,7; reason=r\n").find("line 1") != std::string::npos);
    CHECK(line_of("\n\nq=5; R=1,7; reason=r\n").find("line 3") != std::string::npos);
    CHECK(line_of("q=5; S=4; reason=r\n").find("unknown key") != std::string::npos);
    CHECK(line_of("[broken\n").find("line 1") != std::string::npos);
    CHECK(line_of("garbage\n").find("line 1") != std::string::npos);
    CHECK_THROWS_AS(qfano::load_exclusions("/nonexistent/exclusions.txt"), qfano::ParseError);
}

#include "qfano/exclusions.hpp"

#include <cctype>
#include <charconv>
#include <fstream>

namespace qfano {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(int line, const std::string &what)
{
    throw ParseError("exclusion file line " + std::to_string(line) + ": " + what);
}

Exclusion parse_entry(std::string_view text, int line)
{
    Exclusion e;
    e.line = line;
    bool have_q = false, have_r = false, have_reason = false;
    while (!text.empty()) {
        auto eq = text.find('=');
        if (eq == std::string_view::npos)
            fail(line, "expected key=value, got '" + std::string(trim(text)) + "'");
        auto key = trim(text.substr(0, eq));
        text.remove_prefix(eq + 1);
        std::string_view value;
        if (key == "reason") {
            // free text runs to end of line
            value = trim(text);
            text = {};
        } else {
            auto semi = text.find(';');
            value = trim(text.substr(0, semi));
            text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
        }
        if (key == "q") {
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), e.q);
            if (value.empty() || ec != std::errc() || ptr != value.data() + value.size() || e.q < 1)
                fail(line, "bad q '" + std::string(value) + "'");
            have_q = true;
        } else if (key == "R") {
            try {
                e.r_set = parse_r_set(value);
            } catch (const ParseError &err) {
                fail(line, err.what());
            }
            have_r = true;
        } else if (key == "reason") {
            e.reason = std::string(value);
            have_reason = true;
        } else {
            fail(line, "unknown key '" + std::string(key) + "'");
        }
    }
    if (!have_q || !have_r || !have_reason)
        fail(line, "entry needs q, R and reason");
    return e;
}

} // namespace

ExclusionList parse_exclusions(std::istream &in)
{
    ExclusionList list;
    std::string current_section;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto text = trim(raw);
        if (text.empty() || text.front() == '#')
            continue;
        if (text.front() == '[') {
            if (text.back() != ']' || text.size() < 3)
                fail(line, "bad section header '" + std::string(text) + "'");
            current_section = std::string(trim(text.substr(1, text.size() - 2)));
            list.sections.push_back(current_section);
            continue;
        }
        Exclusion e = parse_entry(text, line);
        e.section = current_section;
        list.entries.push_back(std::move(e));
    }
    return list;
}

ExclusionList load_exclusions(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open exclusion file " + path.string());
    return parse_exclusions(in);
}

ExclusionOutcome apply_exclusions(const std::vector<FanoCandidate> &candidates, const ExclusionList &exclusions)
{
    ExclusionOutcome outcome;
    for (const auto &c : candidates) {
        const auto rs = c.basket.r_values();
        const Exclusion *hit = nullptr;
        for (const auto &e : exclusions.entries) {
            if (e.q == c.q && e.r_set == rs) {
                hit = &e;
                break;
            }
        }
        if (hit)
            outcome.removed.push_back({c, hit->reason});
        else
            outcome.kept.push_back(c);
    }
    return outcome;
}

} // namespace qfano

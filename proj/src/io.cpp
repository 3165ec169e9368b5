#include "qfano/io.hpp"

#include <cstdio>
#include <sstream>

namespace qfano::io {

namespace {

Rational canonical_rational(const json &j, const char *key)
{
    const std::string text = j.at(key).get<std::string>();
    Rational value = Rational::parse(text);
    if (value.str() != text)
        throw ParseError(std::string("field '") + key + "' is not in canonical form: '" + text + "'");
    return value;
}

std::string approx(const Rational &x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x.approx());
    return buf;
}

} // namespace

json rational_array(const std::vector<Rational> &values)
{
    json arr = json::array();
    for (const auto &v : values)
        arr.push_back(v.str());
    return arr;
}

json to_json(const FanoCandidate &c)
{
    json basket = json::array();
    for (const auto &p : c.basket.points())
        basket.push_back(p.str());
    json j;
    j["q"] = c.q;
    j["basket"] = basket;
    j["R"] = c.basket.r_set_str();
    j["A3"] = c.A3.str();
    j["c13"] = c.c13.str();
    j["c2c1"] = c.c2c1.str();
    j["ratio"] = c.ratio().str();
    j["h0"] = c.h0().str();
    j["mode"] = to_string(c.mode);
    return j;
}

FanoCandidate candidate_from_json(const json &j)
{
    FanoCandidate c;
    c.q = j.at("q").get<int>();
    std::vector<OrbifoldPoint> points;
    for (const auto &item : j.at("basket")) {
        auto parsed = Basket::parse(item.get<std::string>());
        if (parsed.size() != 1)
            throw ParseError("basket entry must be a single b/r pair");
        points.push_back(parsed.points().front());
    }
    c.basket = Basket(std::move(points));
    c.A3 = canonical_rational(j, "A3");
    c.c13 = canonical_rational(j, "c13");
    c.c2c1 = canonical_rational(j, "c2c1");
    if (j.contains("mode"))
        c.mode = parse_index_mode(j.at("mode").get<std::string>());
    return c;
}

json to_json(const SmallC2C1Candidate &c)
{
    json basket = json::array();
    for (const auto &p : c.basket.points())
        basket.push_back(p.str());
    json j;
    j["basket"] = basket;
    j["R"] = c.basket.r_set_str();
    j["c13"] = c.c13.str();
    j["c2c1"] = c.c2c1.str();
    j["ratio"] = (c.c13 / c.c2c1).str();
    j["h0"] = c.hilbert.size() > 1 ? c.hilbert[1].str() : std::string("1");
    j["hilbert"] = rational_array(c.hilbert);
    j["possible_q"] = c.possible_q;
    return j;
}

void write_jsonl(std::ostream &os, const std::vector<FanoCandidate> &candidates)
{
    for (const auto &c : candidates)
        os << to_json(c).dump() << '\n';
}

void write_jsonl(std::ostream &os, const std::vector<SmallC2C1Candidate> &candidates)
{
    for (const auto &c : candidates)
        os << to_json(c).dump() << '\n';
}

std::vector<FanoCandidate> read_jsonl(std::istream &is)
{
    std::vector<FanoCandidate> out;
    std::string line;
    int n = 0;
    while (std::getline(is, line)) {
        ++n;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            out.push_back(candidate_from_json(json::parse(line)));
        } catch (const std::exception &e) {
            throw ParseError("candidate line " + std::to_string(n) + ": " + e.what());
        }
    }
    return out;
}

void write_geography_csv(std::ostream &os, const std::vector<GeographyRow> &rows)
{
    os << "R,q,c2c1,c13,ratio,c2c1_approx,c13_approx,ratio_approx\n";
    for (const auto &row : rows) {
        const Rational ratio = row.c13 / row.c2c1;
        os << '"' << row.r_set << "\"," << row.q << ',' << row.c2c1 << ',' << row.c13 << ',' << ratio << ','
           << approx(row.c2c1) << ',' << approx(row.c13) << ',' << approx(ratio) << '\n';
    }
}

std::string hn_table_text(int q, const std::vector<HNType> &types)
{
    std::ostringstream os;
    os << "# maximal destabilising subsheaves, q=" << q << '\n';
    os << "q1 r1 hn_type\n";
    for (const auto &t : types)
        os << t.destabilizing().degree << ' ' << t.destabilizing().rank << ' ' << t.str() << '\n';
    return os.str();
}

std::string hn_table_json(int q, const std::vector<HNType> &types)
{
    json pairs = json::array();
    for (const auto &[q1, r1] : destabilizing_pairs(types))
        pairs.push_back({q1, r1});
    json shapes = json::array();
    for (const auto &t : types) {
        json pieces = json::array();
        for (const auto &p : t.pieces)
            pieces.push_back({p.degree, p.rank});
        shapes.push_back(pieces);
    }
    json j;
    j["q"] = q;
    j["pairs"] = pairs;
    j["types"] = shapes;
    return j.dump() + "\n";
}

std::string langer_table_text(int q, const std::map<int, Rational> &cells)
{
    std::ostringstream os;
    os << "# effective bound b, q=" << q << '\n';
    os << "r1 b\n";
    for (int r1 = 1; r1 <= 2; ++r1) {
        auto it = cells.find(r1);
        os << r1 << ' ' << (it == cells.end() ? std::string("/") : it->second.str()) << '\n';
    }
    return os.str();
}

std::string langer_table_json(int q, const std::map<int, Rational> &cells)
{
    json b = json::object();
    for (const auto &[r1, value] : cells)
        b[std::to_string(r1)] = value.str();
    json j;
    j["q"] = q;
    j["b"] = b;
    return j.dump() + "\n";
}

} // namespace qfano::io

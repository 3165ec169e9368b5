#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qfano/fano_constraints.hpp"
#include "qfano/hn_slopes.hpp"

namespace qfano::io {

using nlohmann::json;

json rational_array(const std::vector<Rational> &values);

/// {"q","basket","R","A3","c13","c2c1","ratio","h0"}; all rationals as canonical strings.
json to_json(const FanoCandidate &c);
/// Inverse of to_json; recomputes nothing, validates canonical forms.
FanoCandidate candidate_from_json(const json &j);

json to_json(const SmallC2C1Candidate &c);

void write_jsonl(std::ostream &os, const std::vector<FanoCandidate> &candidates);
void write_jsonl(std::ostream &os, const std::vector<SmallC2C1Candidate> &candidates);
std::vector<FanoCandidate> read_jsonl(std::istream &is);

struct GeographyRow {
    std::string r_set;
    int q = 0;
    Rational c2c1;
    Rational c13;
};

/// Header plus one row per candidate. The *_approx columns are for display.
void write_geography_csv(std::ostream &os, const std::vector<GeographyRow> &rows);

std::string hn_table_text(int q, const std::vector<HNType> &types);
std::string hn_table_json(int q, const std::vector<HNType> &types);
std::string langer_table_text(int q, const std::map<int, Rational> &cells);
std::string langer_table_json(int q, const std::map<int, Rational> &cells);

} // namespace qfano::io

#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "qfano/fano_constraints.hpp"

namespace qfano {

/*
 * One curated exclusion: the class (q, R_X) is ruled out by an external
 * classification result quoted in `reason`.
 *
 * File grammar, one entry per line:
 *
 *   q=<int>; R=<r-set>; reason=<free text>
 *
 * Blank lines and lines starting with '#' are ignored. A line "[name]"
 * opens a section; entries remember the section they appear in. Sections
 * may be empty.
 */
struct Exclusion {
    int q = 0;
    std::vector<int> r_set;
    std::string reason;
    std::string section;
    int line = 0;
};

struct ExclusionList {
    std::vector<Exclusion> entries;
    std::vector<std::string> sections;
};

/// Throws ParseError carrying "line N" on malformed input.
ExclusionList parse_exclusions(std::istream &in);
ExclusionList load_exclusions(const std::filesystem::path &path);

struct RemovedCandidate {
    FanoCandidate candidate;
    std::string reason;
};

struct ExclusionOutcome {
    std::vector<FanoCandidate> kept;
    std::vector<RemovedCandidate> removed;
};

ExclusionOutcome apply_exclusions(const std::vector<FanoCandidate> &candidates, const ExclusionList &exclusions);

} // namespace qfano

#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "qfano/arith.hpp"
#include "qfano/fano_constraints.hpp"

namespace qfano::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kMismatch = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// "5..8", "4", "5,7" -> sorted distinct list.
std::vector<int> parse_q_range(const std::string &text);

/// Applies a window preset ("paper", "remark") or "lo:hi" to the config.
void apply_window(SearchConfig &config, const std::string &window);

struct Check {
    std::string name;
    enum class Verdict { Pass, Fail, Skipped } verdict = Verdict::Pass;
    std::string expected;
    std::string actual;
};

struct VerifyOptions {
    std::filesystem::path exclusions;
    std::filesystem::path golden_dir;
};

VerifyOptions default_verify_options();

std::vector<Check> run_verification(const VerifyOptions &options);

} // namespace qfano::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bertsa/polarity.hpp"

namespace bertsa::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kDivergence = 3 };

inline constexpr const char* kVocabEnv = "BERTSA_VOCAB";

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Counts the labels of a prediction file (index<TAB>label per line).
PolarityCounts read_prediction_counts(const std::string& path);

}  // namespace bertsa::cli

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace peq::cli {

struct Options {
  std::optional<long> order;               ///< working cyclotomic order for the output
  std::optional<std::uint64_t> scale_bound;  ///< overrides the search cap
  std::optional<std::string> twist;        ///< local check only
};

struct Outcome {
  int exit_code = 0;  ///< 0 success, 1 domain error, 2 malformed input, 3 internal
  nlohmann::json output;
};

/// Every command path, e.g. {"local", "descend"}.
std::vector<std::vector<std::string>> command_paths();

Outcome execute(const std::vector<std::string>& command, const nlohmann::json& input,
                const Options& options);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string render(const nlohmann::json& j);

struct CorpusResult {
  std::string file;
  bool passed = false;
  std::string detail;
};

/// Replays every *.json golden file in dir (sorted by name). Each file holds
/// {"command": [...], "input": ..., "flags": {...}, "expected": ..., "expected_exit": n}.
/// A file passes when two runs render identically and match the expectation.
/// With bless set, expectations are rewritten from the first run.
std::vector<CorpusResult> run_corpus(const std::string& dir, bool bless = false);

int main_entry(int argc, char** argv);

}  // namespace peq::cli

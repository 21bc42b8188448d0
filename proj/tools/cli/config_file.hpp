#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace cfps::cli {

/// Reads `key = value` lines; `#` starts a comment, blank lines are skipped.
/// Keys are option names without the leading dashes. Throws cfps::Error
/// naming the line on malformed input.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path);

/// Rewrites argv so that config-file entries act as defaults:
///   prog sub --k=... (from file) <original args after sub>
/// Command-line flags come later and win (options take the last value).
/// Returns the args unchanged when no --config is present.
std::vector<std::string> expand_config(const std::vector<std::string>& args);

}  // namespace cfps::cli

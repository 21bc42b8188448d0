#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cfps::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr const char* kSeedEnvVar = "CFPS_SEED";

/// Entry point shared by the `cfps` binary and the tests. Machine-readable
/// output (JSON lines) goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Sidecar path written next to every output artifact.
std::string sidecar_path(const std::string& artifact);

}  // namespace cfps::cli

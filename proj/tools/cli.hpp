#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "asc/codes.hpp"
#include "json.hpp"

namespace asc::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitNumerical = 4;

/// Error carrying the process exit code it should map to.
class CommandError : public std::runtime_error {
 public:
  CommandError(int code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  int exit_code() const noexcept { return code_; }

 private:
  int code_;
};

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> trials;
  std::optional<std::string> out;
};

/// Config with the command-line overrides folded in.
json effective_config(json config, const Overrides& overrides);

std::uint64_t fnv1a(std::string_view bytes);

/// "# asc-csv v1 command=<cmd> config_hash=<hex> seed=<seed|none>"
std::string csv_header(std::string_view command, const json& config);

/// Builds the code described by a "code" object. Random ensembles draw from
/// a stream derived from `seed`, which must then be present.
SubspaceCode build_code(const json& spec, std::optional<std::uint64_t> seed);

struct ConstructResult {
  std::string report;     // CSV parameter report
  std::string code_json;  // code file contents
};

ConstructResult construct(const json& config);
std::string simulate(const json& config);
std::string bounds(const json& config);
std::string figure3(const json& config);
std::string distance(const json& config);

/// Exit code for an exception escaping one of the commands.
int exit_code_for(const std::exception& e);

/// Full command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace asc::cli

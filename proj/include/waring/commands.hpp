#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "waring/point_file.hpp"

namespace waring::cli {

enum class OutputFormat { Human, Structured };

inline constexpr std::uint64_t kDefaultSeed = 1;

struct GlobalOptions {
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
  OutputFormat format = OutputFormat::Human;
};

/// Exit codes. certify maps its verdict onto 0 / 2 / 3.
enum ExitCode : int {
  kOk = 0,
  kIdentifiable = 0,
  kInputError = 1,
  kInconclusive = 2,
  kNotMinimal = 3,
};

struct CommandResult {
  int exit_code = kOk;
  std::string output;
};

CommandResult run_hilbert(const PointSetDocument& doc, std::optional<unsigned> max_degree, const GlobalOptions& opts,
                          const std::string& source = "-");
CommandResult run_kruskal(const PointSetDocument& doc, std::optional<unsigned> degree, const GlobalOptions& opts,
                          const std::string& source = "-");
CommandResult run_terracini(const PointSetDocument& doc, unsigned degree, const GlobalOptions& opts,
                            const std::string& source = "-");
CommandResult run_certify(const PointSetDocument& doc, unsigned degree, const GlobalOptions& opts,
                          const std::string& source = "-");
CommandResult run_generic(std::size_t n, unsigned d, std::size_t trials, const GlobalOptions& opts);

/// Full command line front end. Reads point files from the given path or
/// from `in` when the path is "-" or omitted.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace waring::cli

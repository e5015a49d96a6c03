// Subcommand implementations behind the frobius executable. Each returns the
// process exit status; domain errors propagate as frobius::Error.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "frobius/error.hpp"
#include "frobius/matrix.hpp"

namespace frobius::cli {

enum class Format { Text, Json };

struct Config {
  Format format = Format::Text;
  std::uint64_t sizeGuard = SizeGuard{}.maxEntries;
  std::uint64_t seed = 1;

  SizeGuard guard() const { return SizeGuard{sizeGuard}; }
  bool json() const { return format == Format::Json; }
};

/// Terms and diagrams given as "-" are read from stdin.
std::string readArg(const std::string& arg);

int runCheck(const Config& cfg, const std::string& text);
int runNormalize(const Config& cfg, const std::string& text);
int runEq(const Config& cfg, const std::string& a, const std::string& b);
int runSkeleton(const Config& cfg, const std::string& text);
int runCompose(const Config& cfg, const std::string& g, const std::string& f);
int runBrauer(const Config& cfg, std::uint32_t p, const std::string& diagram, bool parts);
int runEval(const Config& cfg, const std::string& algebraPath, const std::string& termText, const std::string& via);
int runFuzz(const Config& cfg, std::size_t scale);

/// Reports an error on stdout (json) or stderr (text).
void reportError(const Config& cfg, const Error& e);

}  // namespace frobius::cli

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "qsphere/engine.hpp"

namespace qsphere::cli {

enum class Command { rules, reduce, basis, metrics, count, check };
enum class OutputFormat { text, json };

struct Invocation {
  Command command = Command::rules;
  unsigned n = 1;
  std::optional<std::string> word;
  unsigned jobs = 1;
  std::uint64_t max_steps = kDefaultMaxSteps;
  OutputFormat format = OutputFormat::text;
  Strategy strategy = Strategy::leftmost;
  bool trace = false;
  bool progress = false;
};

/// Exit codes: 0 success; 1 "reducible" for basis, "unresolved" for check,
/// mismatch for count; 2 usage or configuration error.
int run(const Invocation& invocation, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsphere::cli

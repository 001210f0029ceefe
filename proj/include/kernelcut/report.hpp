#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kernelcut/numbers.hpp"

namespace kernelcut {

/// Audit record emitted by every kernelization.
struct KernelReport {
  std::string problem;
  std::size_t original_bits = 0;
  std::size_t kernel_bits = 0;
  std::size_t rule_firings = 0;
  std::vector<std::string> trace;
  /// Compression parameters; r == 0 when no compression ran.
  std::size_t r = 0;
  Integer N = 0;
  /// Set when an oracle compared input and kernel.
  std::optional<bool> equivalent;
  /// Measured sizes against the formula bounds, exact arithmetic.
  bool bound_ok = true;
  /// Problem-specific extras (size constants, targets, verdicts).
  std::map<std::string, std::string> extra;

  void note(std::string line) { trace.push_back(std::move(line)); }
};

/// key=value lines, one per field; trace entries are numbered.
inline std::string to_key_value(const KernelReport& report) {
  std::ostringstream out;
  out << "problem=" << report.problem << '\n';
  out << "original_bits=" << report.original_bits << '\n';
  out << "kernel_bits=" << report.kernel_bits << '\n';
  out << "rule_firings=" << report.rule_firings << '\n';
  out << "r=" << report.r << '\n';
  out << "N=" << report.N.get_str() << '\n';
  out << "verdict="
      << (report.equivalent ? (*report.equivalent ? "equivalent" : "not-equivalent") : "not-run")
      << '\n';
  out << "bound_ok=" << (report.bound_ok ? "true" : "false") << '\n';
  for (const auto& [key, value] : report.extra) out << key << '=' << value << '\n';
  for (std::size_t i = 0; i < report.trace.size(); ++i)
    out << "trace." << i << '=' << report.trace[i] << '\n';
  return out.str();
}

/// Instance plus its report; the common return shape of the kernelizers.
template <typename Instance>
struct Kernel {
  Instance instance;
  KernelReport report;
};

inline std::size_t bits_of(const RationalVector& xs) {
  std::size_t total = 0;
  for (const auto& x : xs) total += bit_length(x);
  return total;
}

inline std::size_t bits_of(const IntegerVector& xs) {
  std::size_t total = 0;
  for (const auto& x : xs) total += bit_length(x);
  return total;
}

}  // namespace kernelcut

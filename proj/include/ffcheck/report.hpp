#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffcheck/rational.hpp"

namespace ffcheck {

enum class Verdict { Holds, Violated, Inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

/// Ordered name/value list; values are exact and already printed.
using Fields = std::vector<std::pair<std::string, std::string>>;

/// lhs^3 <= constant * product, the exact form of a cube-root bound.
struct CubedComparison {
  BigInt lhs_cubed;
  BigInt constant;
  BigInt product;
};

/// Evaluated inequality or identity: both sides, the verdict and how it was
/// reached.
struct BoundReport {
  std::string check;
  Fields inputs;
  std::string lhs;
  std::string rhs;
  Verdict verdict = Verdict::Inconclusive;
  std::string branch;
  std::vector<std::string> notes;
  Fields context;
  std::optional<CubedComparison> cubed;
  std::vector<BoundReport> parts;

  bool holds() const noexcept { return verdict == Verdict::Holds; }
  bool violated() const noexcept { return verdict == Verdict::Violated; }
  void set(bool ok) { verdict = ok ? Verdict::Holds : Verdict::Violated; }
};

}  // namespace ffcheck

#pragma once

#include <string_view>

namespace pascalfib {

/// Outcome of a single theorem check. Conditional theorems whose hypothesis
/// does not hold report hypothesis_not_met rather than pass or fail.
enum class Verdict { pass, fail, hypothesis_not_met };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::hypothesis_not_met: return "hypothesis-not-met";
  }
  return "fail";
}

constexpr Verdict verdict_of(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

}  // namespace pascalfib

#ifndef REPCHECK_ERRORS_HPP
#define REPCHECK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace repcheck {

// Failure categories surfaced by the verification engine.  Infrastructure
// errors (bad configs, bound violations) are distinct from theorem failures,
// which are reported as verdicts, never as exceptions.

struct OrderBoundExceeded : std::runtime_error {
  explicit OrderBoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SizeBoundExceeded : std::runtime_error {
  explicit SizeBoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SearchExhausted : std::runtime_error {
  explicit SearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct SplitFailure : std::runtime_error {
  explicit SplitFailure(const std::string& what) : std::runtime_error(what) {}
};

// A lifted value fell outside its a-priori integer bound.  This signals a
// correctness failure somewhere upstream and is always worth surfacing.
struct LiftOutOfRange : std::runtime_error {
  explicit LiftOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct BasisBoundExceeded : std::runtime_error {
  explicit BasisBoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotNilpotent : std::runtime_error {
  explicit NotNilpotent(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace repcheck

#endif

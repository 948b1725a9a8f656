// Error taxonomy. The CLI maps these onto exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace jc {

// caller broke a precondition (mismatched spaces, bad indices)
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// a mathematical identity the code relies on did not hold
struct TheoremViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RankDeficiency : std::runtime_error {
  int rank;
  RankDeficiency(const std::string& what, int r) : std::runtime_error(what), rank(r) {}
};

struct SingularElement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedKind : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace jc

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mla {

using Elem = std::uint32_t;

enum class ErrorKind {
  NotClosed,
  NotAssociative,
  NoIdentity,
  MissingInverse,
  InvalidParameters,
  NotNormal,
  NotAnIdeal,
  NotWellDefined,
  PreconditionFailed,
  ConstructionInvalid,
  TheoremViolated,
  QuotientMismatch,
  NotCentralType,
  ConditionFailed,
  BudgetExceeded,
  Format,
};

std::string_view to_string(ErrorKind kind);

// Every failure carries the first witness tuple found in row-major order.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string label, std::vector<Elem> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& label() const noexcept { return label_; }
  const std::vector<Elem>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string label_;
  std::vector<Elem> witness_;
};

}  // namespace mla

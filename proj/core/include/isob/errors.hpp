#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isob {

/// Failure categories raised by the engine. The CLI maps these onto exit
/// codes, so new kinds must be added to `isob_cli` as well.
enum class ErrorKind {
  InvalidArgument,   // unparsable or malformed input
  IllegalType,       // (family, rank) outside the classification
  IllegalParameter,  // symmetric-pair parameter out of range
  BasisMismatch,     // weight not expressed over the expected space
  NotIntegral,       // weight outside the weight lattice
  NotDominant,
  NotAWeightOf,
  OrbitTooLarge,
  CapExceeded,
  NoRestrictionMap,
  NoWeightModel,
  CountMismatch,
  ConsistencyFault,  // two independent computations disagreed
  OutOfTable,
  NonPositiveVolume,
  EmptyProduct,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace isob

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace layered {

enum class Errc {
  ZeroHasNoLayer,
  BottomValue,
  NonPositiveLayer,
  ParseError,
  InvalidPresentation,
  InconsistentRelations,
  NotASubextension,
  NoSignChange,
  NotMonic,
  Reducible,
  NoPositiveRoot,
  IntervalNotIsolating,
  AllPositiveCoefficients,
  TrivialExtension,
  GeneratorMismatch,
  ZeroElement,
  NonPositiveCoefficient,
  EmptyPolynomial,
  DivisionByZero,
  DimensionMismatch,
  InvalidPolynomial,
  ValueNotInBase,
  LayerNotInBase,
  UnsupportedTower,
  NonNumericValue,
  DescriptorMismatch,
  UnknownBinding,
  DuplicateBinding,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace layered

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace edsn {

enum class Errc {
  InvalidArgument,
  EvenCharacteristic,
  NotPrime,
  FieldTooLarge,
  DivisionByZero,
  DimensionMismatch,
  SizeMismatch,
  InvalidProfile,
  NotOnVariety,
  OnDiscriminant,
  NoPointFound,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace edsn

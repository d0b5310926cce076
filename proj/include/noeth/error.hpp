#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace noeth {

enum class Errc {
  ParseError,
  CapabilityMissing,
  PigeonholeViolated,
  DishonestWitness,
  FuelExhausted,
  TagScanFailed,
  EvidenceDemotionFailed,
  IndexOutOfRange,
  UnknownName,
  NotAMember,
  NotReflexive,
  SizeLimitExceeded,
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::CapabilityMissing: return "CapabilityMissing";
    case Errc::PigeonholeViolated: return "PigeonholeViolated";
    case Errc::DishonestWitness: return "DishonestWitness";
    case Errc::FuelExhausted: return "FuelExhausted";
    case Errc::TagScanFailed: return "TagScanFailed";
    case Errc::EvidenceDemotionFailed: return "EvidenceDemotionFailed";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::UnknownName: return "UnknownName";
    case Errc::NotAMember: return "NotAMember";
    case Errc::NotReflexive: return "NotReflexive";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(Errc::ParseError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Default evaluation budget, counted in witness node visits.
inline constexpr std::size_t kDefaultFuel = 10000;

}  // namespace noeth

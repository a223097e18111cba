#include "redpow/error.hpp"

namespace redpow {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::InsufficientElements: return "InsufficientElements";
  case ErrorCode::CarrierMismatch: return "CarrierMismatch";
  case ErrorCode::DegenerateCarrier: return "DegenerateCarrier";
  case ErrorCode::OutOfCarrier: return "OutOfCarrier";
  case ErrorCode::RestrictionInvalid: return "RestrictionInvalid";
  case ErrorCode::DegenerateFilter: return "DegenerateFilter";
  case ErrorCode::GeneratorNotInCarrier: return "GeneratorNotInCarrier";
  case ErrorCode::NotInCarrier: return "NotInCarrier";
  case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
  case ErrorCode::EmptyIdeal: return "EmptyIdeal";
  case ErrorCode::NotSubfilter: return "NotSubfilter";
  case ErrorCode::CompositionMismatch: return "CompositionMismatch";
  case ErrorCode::UnsupportedHomKind: return "UnsupportedHomKind";
  case ErrorCode::PathMismatch: return "PathMismatch";
  case ErrorCode::NotNonnegative: return "NotNonnegative";
  case ErrorCode::HorizonTooSmall: return "HorizonTooSmall";
  case ErrorCode::InvalidModel: return "InvalidModel";
  case ErrorCode::SyntaxError: return "SyntaxError";
  case ErrorCode::NameError: return "NameError";
  case ErrorCode::TypeError: return "TypeError";
  }
  return "Unknown";
}

} // namespace redpow

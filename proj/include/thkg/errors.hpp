#pragma once
#include <stdexcept>
#include <string>

namespace thkg {

// Error taxonomy shared across the toolkit. Conditions a caller can
// reasonably dispatch on get their own type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidTimeTriplet : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct UnknownIdentifier : Error { using Error::Error; };
struct ModalityMismatch : Error { using Error::Error; };
struct NoFiniteTimes : Error { using Error::Error; };
struct NonFiniteLoss : Error { using Error::Error; };
struct VocabularyMismatch : Error { using Error::Error; };
struct TruthFiltered : Error { using Error::Error; };
struct UnknownVariant : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace thkg

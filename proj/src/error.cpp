#include "drg/error.hpp"

namespace drg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::OddPairCount: return "OddPairCount";
    case ErrorCode::NonIntegralDegree: return "NonIntegralDegree";
    case ErrorCode::NonIntegralCount: return "NonIntegralCount";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ToleranceTooSmall: return "ToleranceTooSmall";
    case ErrorCode::NotAnEigenvalue: return "NotAnEigenvalue";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::MultiplicityNotIntegral: return "MultiplicityNotIntegral";
    case ErrorCode::KernelMismatch: return "KernelMismatch";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace drg

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsmod {

enum class ErrorCode {
  InvalidWord,
  InvalidType,
  MissingLabel,
  LabelClash,
  InvalidCut,
  NotGeometric,
  InvalidGraph,
  NotALeg,
  InvalidGlue,
  NoSuchEdge,
  LoopEdge,
  NotALoop,
  NotRibbon,
  Unsupported,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::MissingLabel: return "MissingLabel";
    case ErrorCode::LabelClash: return "LabelClash";
    case ErrorCode::InvalidCut: return "InvalidCut";
    case ErrorCode::NotGeometric: return "NotGeometric";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::NotALeg: return "NotALeg";
    case ErrorCode::InvalidGlue: return "InvalidGlue";
    case ErrorCode::NoSuchEdge: return "NoSuchEdge";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::NotALoop: return "NotALoop";
    case ErrorCode::NotRibbon: return "NotRibbon";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Domain error raised by every operation in the library. The code is stable
/// and is what the CLI reports in structured output.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace nsmod

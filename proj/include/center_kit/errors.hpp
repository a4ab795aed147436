#pragma once

#include <stdexcept>
#include <string>

namespace ck {

// Error codes are stable strings so reports and scripts can match on them.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what) : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

namespace codes {
inline constexpr const char* kParse = "E_PARSE";
inline constexpr const char* kUnitMissing = "E_UNIT_MISSING";
inline constexpr const char* kLabelUnknown = "E_LABEL_UNKNOWN";
inline constexpr const char* kDualNotInvolutive = "E_DUAL_NOT_INVOLUTIVE";
inline constexpr const char* kFMissing = "E_F_MISSING";
inline constexpr const char* kFShape = "E_F_SHAPE";
inline constexpr const char* kFusionInvalid = "E_FUSION_INVALID";
inline constexpr const char* kDimInvalid = "E_DIM_INVALID";
inline constexpr const char* kCompose = "E_COMPOSE_MISMATCH";
inline constexpr const char* kShape = "E_SHAPE";
inline constexpr const char* kCategory = "E_CATEGORY_MISMATCH";
inline constexpr const char* kMode = "E_MODE_MIXED";
inline constexpr const char* kNotNatural = "E_NOT_NATURAL";
inline constexpr const char* kAxiom = "E_AXIOM";
inline constexpr const char* kDecomposition = "E_DECOMPOSITION";
inline constexpr const char* kUsage = "E_USAGE";
}  // namespace codes

}  // namespace ck

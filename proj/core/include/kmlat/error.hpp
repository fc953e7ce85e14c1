#pragma once

#include <stdexcept>
#include <string>

namespace kmlat {

/// Domain error carrying a stable machine-readable code (e.g. "NotRealRoot").
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message);

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

namespace errc {
inline constexpr const char* bad_gcm = "BadGcm";
inline constexpr const char* not_real_root = "NotRealRoot";
inline constexpr const char* simple_root_case = "SimpleRootCase";
inline constexpr const char* not_reduced = "NotReduced";
inline constexpr const char* wrong_matrix_shape = "WrongMatrixShape";
inline constexpr const char* height_too_small = "HeightTooSmall";
inline constexpr const char* truncation_loss = "TruncationLoss";
inline constexpr const char* not_prime = "NotPrime";
inline constexpr const char* reducible = "Reducible";
inline constexpr const char* bad_field = "BadField";
inline constexpr const char* parse_error = "ParseError";
inline constexpr const char* bad_root_datum = "BadRootDatum";
inline constexpr const char* atom_not_in_parabolic = "AtomNotInParabolic";
inline constexpr const char* budget_exceeded = "NormalizationBudgetExceeded";
inline constexpr const char* exploration_truncated = "ExplorationTruncated";
inline constexpr const char* determinant_not_one = "DeterminantNotOne";
inline constexpr const char* not_affine = "NotAffine";
inline constexpr const char* invalid_group_table = "InvalidGroupTable";
inline constexpr const char* invalid_injection = "InvalidInjection";
inline constexpr const char* bad_delta = "BadDelta";
inline constexpr const char* not_prime_power = "NotPrimePower";
} // namespace errc

} // namespace kmlat

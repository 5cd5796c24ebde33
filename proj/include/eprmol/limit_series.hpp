#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace eprmol {

enum class LimitSide { below, above };

const char* to_string(LimitSide side);
/// Parses "below" / "above"; throws ValidationError otherwise.
LimitSide parse_limit_side(const std::string& token);

/// Checks that `alphas` is non-empty and strictly monotone toward 1 from
/// the given side. Throws ValidationError.
void validate_alpha_sequence(std::span<const double> alphas, LimitSide side);

/// Side implied by the first alpha of a sequence.
LimitSide infer_side(std::span<const double> alphas);

/// Per-alpha samples of one quantity during an alpha -> 1 study.
template <typename Value>
struct LimitSeries {
  std::string quantity;
  LimitSide side = LimitSide::below;
  std::vector<std::pair<double, Value>> entries;
};

}  // namespace eprmol

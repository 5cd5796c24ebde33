#include "eprmol/limit_series.hpp"

#include <cmath>

#include "eprmol/errors.hpp"

namespace eprmol {

const char* to_string(LimitSide side) {
  return side == LimitSide::below ? "below" : "above";
}

LimitSide parse_limit_side(const std::string& token) {
  if (token == "below") return LimitSide::below;
  if (token == "above") return LimitSide::above;
  throw ValidationError("side must be 'below' or 'above', got '" + token + "'");
}

LimitSide infer_side(std::span<const double> alphas) {
  if (alphas.empty()) throw ValidationError("alpha sequence is empty");
  return alphas.front() <= 1.0 ? LimitSide::below : LimitSide::above;
}

void validate_alpha_sequence(std::span<const double> alphas, LimitSide side) {
  if (alphas.empty()) throw ValidationError("alpha sequence is empty");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const double a = alphas[i];
    if (!std::isfinite(a) || a <= 0.0) {
      throw ValidationError("alpha must be positive");
    }
    if (side == LimitSide::below ? a > 1.0 : a < 1.0) {
      throw ValidationError(std::string("alpha sequence must approach 1 from ") +
                            to_string(side));
    }
    if (i > 0 && std::abs(a - 1.0) >= std::abs(alphas[i - 1] - 1.0)) {
      throw ValidationError("alpha sequence must approach 1 strictly monotonically");
    }
  }
}

}  // namespace eprmol

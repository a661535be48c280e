#include "ggm/hyper.hpp"

#include <cmath>
#include <string>

#include "ggm/error.hpp"

namespace ggm {

namespace {
void check(bool ok, const std::string& field, const std::string& rule) {
  if (!ok) throw Error(ErrorCode::Config, "hyperparams: " + field + " " + rule);
}
}  // namespace

Hyperparams validate_hyperparams(Hyperparams h, int p) {
  require(p >= 2, ErrorCode::InvalidArgument, "validate_hyperparams: p >= 2");
  if (h.dbar == 0) h.dbar = p - 1;
  if (h.m_moves == 0)
    h.m_moves = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(p))));
  if (h.upsilon == 0.0) h.upsilon = 0.75;
  if (h.tau == 0.0) {
    check(h.g1 > 0.0, "g1", "must be > 0");
    h.tau = 1.0 / (h.g1 * h.g1);
  }

  check(h.theta > 0.0 && h.theta < 1.0, "theta", "must be in (0,1)");
  check(h.g1 > 0.0, "g1", "must be > 0");
  check(h.lambda > 0.0, "lambda", "must be > 0");
  check(h.dbar >= 1 && h.dbar <= p - 1, "dbar", "must be in [1, p-1]");
  check(h.p_birth > 0.0 && h.p_birth < 1.0, "p_birth", "must be in (0,1)");
  check(h.p_death > 0.0 && h.p_death < 1.0, "p_death", "must be in (0,1)");
  check(h.p_birth + h.p_death <= 1.0, "p_birth+p_death", "must be <= 1");
  check(h.upsilon > 0.0 && h.upsilon <= 1.0, "upsilon", "must be in (0,1]");
  check(h.m_moves >= 1, "M", "must be >= 1");
  check(h.tau > 0.0, "tau", "must be > 0");
  return h;
}

}  // namespace ggm

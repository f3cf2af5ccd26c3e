#include "hirz/cohom.hpp"

#include <algorithm>

#include "hirz/detail/checked.hpp"
#include "hirz/errors.hpp"

namespace hirz {

namespace ck = detail;

std::vector<std::int64_t> pushforward_degrees(std::int64_t a, std::int64_t e) {
  if (a < 0) throw PreconditionError("pushforward_degrees: a must be >= 0");
  if (e < 0) throw PreconditionError("pushforward_degrees: e must be >= 0");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(a) + 1);
  for (std::int64_t i = 0; i <= a; ++i) out.push_back(ck::neg(ck::mul(i, e)));
  return out;
}

std::int64_t h0_fe(std::int64_t e, std::int64_t a, std::int64_t b) {
  if (e < 0) throw PreconditionError("h0_fe: e must be >= 0");
  if (a < 0 || b < 0) return 0;
  if (e == 0) return ck::mul(ck::add(a, 1), ck::add(b, 1));
  std::int64_t total = 0;
  // Summands b - ie + 1 vanish once ie > b.
  std::int64_t last = std::min(a, b / e);
  for (std::int64_t i = 0; i <= last; ++i)
    total = ck::add(total, ck::add(ck::sub(b, ck::mul(i, e)), 1));
  return total;
}

Rational riemann_roch_lower_bound(const SurfaceContext& ctx, const DivisorClass& c) {
  if (ctx.kind != SurfaceKind::Hirzebruch)
    throw PreconditionError("riemann_roch_lower_bound expects a Hirzebruch context");
  std::int64_t cc = intersect(ctx, c, c);
  std::int64_t kc = intersect(ctx, c, canonical_class(ctx));
  return Rational(Rational::Integer(cc) - kc, 2) + Rational(1);
}

}  // namespace hirz

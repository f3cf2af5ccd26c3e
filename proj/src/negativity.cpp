#include "hirz/negativity.hpp"

#include <algorithm>

#include "hirz/detail/checked.hpp"

namespace hirz {

namespace ck = detail;

bool is_exceptional_divisor(const DivisorClass& c) {
  if (c.a != 0 || c.b != 0) return false;
  int minus_ones = 0;
  auto tally = [&](std::int64_t v) {
    if (v == -1) ++minus_ones;
    return v == 0 || v == -1;
  };
  for (auto v : c.m)
    if (!tally(v)) return false;
  if (c.m_x && !tally(*c.m_x)) return false;
  return minus_ones == 1;
}

BoundValue wbnc_bound_hirzebruch(std::int64_t e, std::int64_t r, const DivisorClass& c) {
  if (is_exceptional_divisor(c)) return Exempt{};
  const std::int64_t slope = ck::sub(ck::add(e, 2), ck::floor_div(ck::add(r, e), 2));
  return ck::add(std::min<std::int64_t>(-2, ck::sub(-e, r)), ck::mul(slope, c.a));
}

std::int64_t ruled_lambda(std::int64_t g, std::int64_t e, std::int64_t r) {
  const std::int64_t two_g_minus_1 = ck::sub(ck::mul(2, g), 1);
  return std::max({two_g_minus_1, ck::add(two_g_minus_1, e),
                   ck::add(g, ck::floor_div(ck::add(r, e), 2))});
}

BoundValue wbnc_bound_ruled(std::int64_t g, std::int64_t e, std::int64_t r, const DivisorClass& c) {
  if (is_exceptional_divisor(c)) return Exempt{};
  const std::int64_t slope =
      ck::sub(ck::sub(ck::add(e, 2), ruled_lambda(g, e, r)), ck::mul(2, g));
  return ck::add(std::min<std::int64_t>(-2, -r), ck::mul(slope, c.a));
}

BoundValue case_bound(const SurfaceContext& ctx, const DivisorClass& c) {
  if (is_exceptional_divisor(c)) return Exempt{};
  const auto r = static_cast<std::int64_t>(ctx.r);
  const bool ruled = ctx.kind == SurfaceKind::Ruled;
  if (c.a >= 2) {
    const std::int64_t slope =
        ruled ? ck::sub(ck::sub(ck::add(ctx.e, 2), ruled_lambda(ctx.g, ctx.e, r)), ck::mul(2, ctx.g))
              : ck::sub(ck::add(ctx.e, 2), ck::floor_div(ck::add(r, ctx.e), 2));
    return ck::add(-2, ck::mul(slope, c.a));
  }
  if (c.a == 1) return ruled ? ck::sub(-r, std::max<std::int64_t>(ctx.e, 0)) : ck::sub(-ctx.e, r);
  return -r;
}

std::size_t BoundReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const BoundRow& row) { return row.violated; }));
}

namespace {

template <typename BoundFn>
BoundReport build_report(const ClassCatalog& catalog, BoundFn&& bound_of) {
  BoundReport report{catalog.context(), {}};
  for (const auto& entry : catalog) {
    BoundRow row;
    row.divisor = entry.divisor;
    row.self_intersection = self_intersection(catalog.context(), entry.divisor);
    row.bound = bound_of(entry.divisor);
    row.applicable = row.self_intersection < 0;
    if (const auto* b = std::get_if<std::int64_t>(&row.bound)) {
      row.slack = ck::sub(row.self_intersection, *b);
      row.violated = row.applicable && *row.slack < 0;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace

BoundReport bound_report(const ClassCatalog& catalog) {
  const auto& ctx = catalog.context();
  const auto r = static_cast<std::int64_t>(ctx.r);
  if (ctx.kind == SurfaceKind::Hirzebruch)
    return build_report(catalog, [&](const DivisorClass& c) { return wbnc_bound_hirzebruch(ctx.e, r, c); });
  return build_report(catalog, [&](const DivisorClass& c) { return wbnc_bound_ruled(ctx.g, ctx.e, r, c); });
}

BoundReport case_bound_report(const ClassCatalog& catalog) {
  return build_report(catalog, [&](const DivisorClass& c) { return case_bound(catalog.context(), c); });
}

BoundReport verify_bounds(const ClassCatalog& catalog) {
  BoundReport report = bound_report(catalog);
  for (const auto& row : report.rows) {
    if (!row.violated) continue;
    const std::string msg = "bound violated by " + row.divisor.to_string() + ": C^2 = " +
                            std::to_string(row.self_intersection) + " < " +
                            std::to_string(std::get<std::int64_t>(row.bound));
    throw BoundViolation(msg, std::move(report));
  }
  return report;
}

}  // namespace hirz

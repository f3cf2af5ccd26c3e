#include "hirz/lattice.hpp"

#include <sstream>

#include "hirz/detail/checked.hpp"
#include "hirz/errors.hpp"

namespace hirz {

namespace ck = detail;

SurfaceContext SurfaceContext::hirzebruch(std::int64_t e, std::size_t r, bool extra_point,
                                          bool very_general) {
  SurfaceContext ctx{SurfaceKind::Hirzebruch, e, 0, r, extra_point, very_general};
  ctx.validate();
  return ctx;
}

SurfaceContext SurfaceContext::ruled(std::int64_t g, std::int64_t e, std::size_t r,
                                     bool extra_point, bool very_general) {
  SurfaceContext ctx{SurfaceKind::Ruled, e, g, r, extra_point, very_general};
  ctx.validate();
  return ctx;
}

SurfaceContext SurfaceContext::with_extra_point() const {
  SurfaceContext out = *this;
  out.has_extra_point = true;
  return out;
}

SurfaceContext SurfaceContext::without_extra_point() const {
  SurfaceContext out = *this;
  out.has_extra_point = false;
  return out;
}

void SurfaceContext::validate() const {
  if (kind == SurfaceKind::Hirzebruch) {
    if (g != 0) throw StructuralError("Hirzebruch surface must have genus 0");
    if (e < 0) throw StructuralError("Hirzebruch invariant e must be >= 0");
  } else if (g < 1) {
    throw StructuralError("ruled surface requires genus g >= 1");
  }
}

DivisorClass DivisorClass::zero(const SurfaceContext& ctx) {
  DivisorClass d;
  d.m.assign(ctx.r, 0);
  if (ctx.has_extra_point) d.m_x = 0;
  return d;
}

DivisorClass DivisorClass::section(const SurfaceContext& ctx) {
  DivisorClass d = zero(ctx);
  d.a = 1;
  return d;
}

DivisorClass DivisorClass::fiber(const SurfaceContext& ctx) {
  DivisorClass d = zero(ctx);
  d.b = 1;
  return d;
}

DivisorClass DivisorClass::exceptional(const SurfaceContext& ctx, std::size_t i) {
  if (i >= ctx.r) throw StructuralError("point index out of range");
  DivisorClass d = zero(ctx);
  d.m[i] = -1;
  return d;
}

DivisorClass DivisorClass::exceptional_x(const SurfaceContext& ctx) {
  if (!ctx.has_extra_point) throw StructuralError("context has no extra point x");
  DivisorClass d = zero(ctx);
  d.m_x = -1;
  return d;
}

namespace {

void check_same_shape(const DivisorClass& x, const DivisorClass& y) {
  if (x.m.size() != y.m.size() || x.m_x.has_value() != y.m_x.has_value())
    throw StructuralError("divisor classes have different shapes");
}

}  // namespace

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  check_same_shape(*this, o);
  a = ck::add(a, o.a);
  b = ck::add(b, o.b);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = ck::add(m[i], o.m[i]);
  if (m_x) *m_x = ck::add(*m_x, *o.m_x);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  check_same_shape(*this, o);
  a = ck::sub(a, o.a);
  b = ck::sub(b, o.b);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = ck::sub(m[i], o.m[i]);
  if (m_x) *m_x = ck::sub(*m_x, *o.m_x);
  return *this;
}

DivisorClass DivisorClass::scaled(std::int64_t k) const {
  DivisorClass out = *this;
  out.a = ck::mul(a, k);
  out.b = ck::mul(b, k);
  for (auto& v : out.m) v = ck::mul(v, k);
  if (out.m_x) *out.m_x = ck::mul(*out.m_x, k);
  return out;
}

DivisorClass DivisorClass::stripped() const {
  DivisorClass out = *this;
  out.m_x.reset();
  return out;
}

DivisorClass DivisorClass::with_m_x(std::int64_t value) const {
  DivisorClass out = *this;
  out.m_x = value;
  return out;
}

std::string DivisorClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](std::int64_t coeff, const std::string& name) {
    if (coeff == 0) return;
    if (first) {
      if (coeff < 0) os << "-";
    } else {
      os << (coeff < 0 ? " - " : " + ");
    }
    std::int64_t mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) os << mag;
    os << name;
    first = false;
  };
  term(a, "C");
  term(b, "f");
  for (std::size_t i = 0; i < m.size(); ++i) term(-m[i], "E" + std::to_string(i + 1));
  if (m_x) term(-*m_x, "Ex");
  if (first) return "0";
  return os.str();
}

void check_dimensions(const SurfaceContext& ctx, const DivisorClass& d) {
  if (d.m.size() != ctx.r)
    throw StructuralError("class has " + std::to_string(d.m.size()) +
                          " point multiplicities, context has r = " + std::to_string(ctx.r));
  if (d.m_x.has_value() != ctx.has_extra_point)
    throw StructuralError(ctx.has_extra_point ? "class lacks the E_x coordinate"
                                              : "class has an E_x coordinate but context has no x");
}

std::int64_t intersect(const SurfaceContext& ctx, const DivisorClass& d1,
                       const DivisorClass& d2) {
  check_dimensions(ctx, d1);
  check_dimensions(ctx, d2);
  std::int64_t v = ck::neg(ck::mul(ck::mul(ctx.e, d1.a), d2.a));
  v = ck::add(v, ck::mul(d1.a, d2.b));
  v = ck::add(v, ck::mul(d2.a, d1.b));
  for (std::size_t i = 0; i < d1.m.size(); ++i) v = ck::sub(v, ck::mul(d1.m[i], d2.m[i]));
  if (ctx.has_extra_point) v = ck::sub(v, ck::mul(*d1.m_x, *d2.m_x));
  return v;
}

DivisorClass canonical_class(const SurfaceContext& ctx) {
  ctx.validate();
  DivisorClass k;
  k.a = -2;
  if (ctx.kind == SurfaceKind::Hirzebruch) {
    k.b = ck::neg(ck::add(ctx.e, 2));
  } else {
    k.b = ck::sub(ck::sub(ck::mul(2, ctx.g), 2), ctx.e);
  }
  k.m.assign(ctx.r, -1);
  if (ctx.has_extra_point) k.m_x = -1;
  return k;
}

Rational arithmetic_genus(const SurfaceContext& ctx, const DivisorClass& c) {
  std::int64_t cc = intersect(ctx, c, c);
  std::int64_t ck = intersect(ctx, c, canonical_class(ctx));
  return Rational(1) + Rational(Rational::Integer(cc) + ck, 2);
}

TransformedClass elementary_transform(const SurfaceContext& ctx, const DivisorClass& c,
                                      std::size_t i) {
  check_dimensions(ctx, c);
  if (ctx.kind != SurfaceKind::Hirzebruch)
    throw PreconditionError("elementary transform is modelled on Hirzebruch surfaces only");
  if (ctx.e < 1) throw UnsupportedRangeError("elementary transform F_e -> F_{e-1} needs e >= 1");
  if (i >= ctx.r) throw StructuralError("point index out of range");
  if (c.m[i] != c.a)
    throw PreconditionError("multiplicity at the transformed point must equal a");
  if (c.a == 1 && c.b == 0 && c.m[i] == 1)
    throw PreconditionError("class is the strict transform of C_e through p_i; the point must lie off C_e");

  SurfaceContext out_ctx = ctx;
  out_ctx.e = ctx.e - 1;
  out_ctx.r = ctx.r - 1;

  DivisorClass out;
  out.a = c.a;
  out.b = ck::sub(c.b, c.a);
  out.m.reserve(c.m.size() - 1);
  for (std::size_t j = 0; j < c.m.size(); ++j)
    if (j != i) out.m.push_back(c.m[j]);
  out.m_x = c.m_x;
  return {out_ctx, out};
}

}  // namespace hirz

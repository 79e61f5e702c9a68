#include "symsurg/lagrangian.hpp"

#include <array>

namespace symsurg {

namespace {

using Vec4 = std::array<Poly, 4>;

// omega = dx1^dx2 + dx3^dx4 + dx2^dx3 + d dx1^dx4 + dx2^dx4 - d dx1^dx3
std::array<std::array<Poly, 4>, 4> omega_matrix() {
  std::array<std::array<Poly, 4>, 4> w;
  auto set = [&](int i, int j, const Poly& v) {
    w[i][j] = v;
    w[j][i] = -v;
  };
  set(0, 1, Poly(1));
  set(2, 3, Poly(1));
  set(1, 2, Poly(1));
  set(0, 3, Poly::d());
  set(1, 3, Poly(1));
  set(0, 2, -Poly::d());
  return w;
}

Poly omega(const Vec4& u, const Vec4& v) {
  static const auto w = omega_matrix();
  Poly r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r += u[i] * w[i][j] * v[j];
  return r;
}

Poly det4(const std::array<Vec4, 4>& col) {
  // cofactor expansion along the first row
  auto det3 = [](const Poly m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  Poly total;
  for (int j = 0; j < 4; ++j) {
    Poly minor[3][3];
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == j)
          continue;
        minor[r - 1][cc++] = col[c][r];
      }
    }
    Poly term = col[j][0] * det3(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

bool scale_pos(const Poly& p) { return p.sign_under_scale_order() == 1; }

// every t-coefficient nonnegative for small scales, so p >= 0 on t >= 0
bool coeff_nonneg_in_t(const Poly& p) {
  for (int k = 0; k <= p.param_degree(); ++k)
    if (p.param_coefficient(k).sign_under_scale_order() < 0)
      return false;
  return true;
}

} // namespace

LagrangianConfigReport verify_lagrangian_config() {
  LagrangianConfigReport report;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    report.checks.push_back({name, pass, detail});
  };

  const Poly d = Poly::d(), e = Poly::e(), c = Poly::c(), s = Poly::s(), t = Poly::t();
  const Poly one(1), half = rat(1, 2);
  const Poly a = half - rat(2) * e; // common half-width 1/2 - 2e of the traverses
  const Poly w = one - t;           // parameter measured from the far end

  const auto wm = omega_matrix();

  // the configuration, with the first coordinate free (it enters no tube
  // constraint and both intersection points match it structurally):
  //   C1: (x1, d*a*(1-t), 0,       e + a*t)
  //   C2: (x1, 1/2 - d*a*(1-t),    e + a*t, 0)
  //   T1: (x1(th), e*cos, x3,      1/2 + e*sin)
  //   T2: (x1(th), 1/2 + e*cos,    1/2 + e*sin, x4)
  const Poly c1_x2 = d * a * w, c1_x3 = Poly(0), c1_x4 = e + a * t;
  const Poly c2_x2 = half - d * a * w, c2_x3 = e + a * t, c2_x4 = Poly(0);
  const Poly t1_x2 = e * c, t1_x4 = half + e * s;
  const Poly t2_x2 = half + e * c, t2_x3 = half + e * s;

  // tangent frames; torus frames are scaled by d to clear the e/d slope of
  // their first coordinate, which leaves the Lagrangian condition unchanged
  const Vec4 e1 = {one, Poly(0), Poly(0), Poly(0)};
  const Vec4 e3 = {Poly(0), Poly(0), one, Poly(0)};
  const Vec4 e4 = {Poly(0), Poly(0), Poly(0), one};
  const Vec4 c1_v = {Poly(0), -d * a, Poly(0), a};
  const Vec4 c2_v = {Poly(0), d * a, a, Poly(0)};
  const Vec4 t1_v = {-e * (c + s), -d * e * s, Poly(0), d * e * c};
  const Vec4 t2_v = {-e * (c - s), -d * e * s, d * e * c, Poly(0)};

  {
    bool anti = true, diag = true;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (!(wm[i][j] + wm[j][i]).is_zero())
          anti = false;
        if (i == j && !wm[i][j].is_zero())
          diag = false;
      }
    add("omega-antisymmetric", anti && diag, "w[i][j] + w[j][i] = 0, zero diagonal");

    std::array<Vec4, 4> cols;
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i)
        cols[j][i] = wm[i][j];
    Poly det = det4(cols);
    add("omega-nondegenerate", det.sign_under_scale_order() != 0, "det = " + det.to_string());
  }

  add("c1-lagrangian", omega(e1, c1_v).is_zero(), "w(dx1, dC1/dt) = 0");
  add("c2-lagrangian", omega(e1, c2_v).is_zero(), "w(dx1, dC2/dt) = 0");
  add("t1-lagrangian", omega(t1_v, e3).is_zero(), "w(d*dT1/dth, dx3) = 0");
  add("t2-lagrangian", omega(t2_v, e4).is_zero(), "w(d*dT2/dth, dx4) = 0");

  // tube distance functions; the free torus coordinates drop out because a
  // square is never negative, and every remaining bound is carried by one
  // coordinate whose circle lifts are controlled explicitly
  {
    Poly g13 = t1_x2 * t1_x2 + (t1_x4 - half) * (t1_x4 - half) - e * e;
    add("t1-on-boundary-13", g13.is_zero(), "|(x2, x4-1/2)|^2 - e^2 = 0 identically");
  }
  {
    Poly g14 = (t2_x2 - half) * (t2_x2 - half) + (t2_x3 - half) * (t2_x3 - half) - e * e;
    add("t2-on-boundary-14", g14.is_zero(), "|(x2-1/2, x3-1/2)|^2 - e^2 = 0 identically");
  }

  {
    // C1 vs tube 12: x4 - e = a*t vanishes only at t = 0, far lift clear
    Poly lower = c1_x4 - e;
    Poly upper = one - c1_x4 - e;
    bool ok = (lower == a * t) && coeff_nonneg_in_t(lower) && scale_pos(a) &&
              coeff_nonneg_in_t(upper.compose_param(one - t)) &&
              scale_pos(upper.compose_param(one - t).param_coefficient(0));
    add("c1-clears-tube-12", ok, "x4 - e = a*t >= 0, equality exactly at t = 0");
  }
  {
    // C1 vs tube 13: 1/2 - x4 - e = a*(1-t) vanishes only at t = 1
    Poly lower = half - c1_x4 - e;
    bool ok = (lower == a * w) && scale_pos(a) && scale_pos(half - e) &&
              coeff_nonneg_in_t(c1_x4) &&
              coeff_nonneg_in_t((one - c1_x4).compose_param(one - t));
    add("c1-clears-tube-13", ok, "1/2 - x4 - e = a*(1-t) >= 0, equality exactly at t = 1");
  }
  {
    Poly gap = half - e;
    add("c1-clears-tube-14", scale_pos(gap), "x3 = 0 keeps circle distance 1/2 from 1/2");
  }
  {
    Poly lower = c2_x3 - e;
    Poly upper = one - c2_x3 - e;
    bool ok = (lower == a * t) && scale_pos(a) &&
              scale_pos(upper.compose_param(one - t).param_coefficient(0)) &&
              coeff_nonneg_in_t(upper.compose_param(one - t));
    add("c2-clears-tube-12", ok, "x3 - e = a*t >= 0, equality exactly at t = 0");
  }
  {
    Poly gap = half - e;
    add("c2-clears-tube-13", scale_pos(gap), "x4 = 0 keeps circle distance 1/2 from 1/2");
  }
  {
    Poly lower = half - c2_x3 - e;
    bool ok = (lower == a * w) && scale_pos(a) && scale_pos(half - e) &&
              coeff_nonneg_in_t(c2_x3) &&
              coeff_nonneg_in_t((one - c2_x3).compose_param(one - t));
    add("c2-clears-tube-14", ok, "1/2 - x3 - e = a*(1-t) >= 0, equality exactly at t = 1");
  }
  {
    // T1 vs tube 12: both circle lifts of x4 stay at distance > e from 0
    Poly lo = t1_x4 - e - (a + e * (one + s));
    Poly hi = one - t1_x4 - e - (a + e * (one - s));
    add("t1-clears-tube-12", lo.is_zero() && hi.is_zero() && scale_pos(a),
        "x4 - e = a + e*(1+s) > 0 and 1 - x4 - e = a + e*(1-s) > 0");
  }
  {
    Poly lo = half - t1_x2 - e - (a + e * (one - c));
    Poly hi = half + t1_x2 - e - (a + e * (one + c));
    add("t1-clears-tube-14", lo.is_zero() && hi.is_zero() && scale_pos(a),
        "1/2 -+ x2 - e = a + e*(1 -+ c) > 0 on both sides of 1/2");
  }
  {
    Poly lo = t2_x3 - e - (a + e * (one + s));
    Poly hi = one - t2_x3 - e - (a + e * (one - s));
    add("t2-clears-tube-12", lo.is_zero() && hi.is_zero() && scale_pos(a),
        "x3 - e = a + e*(1+s) > 0 and 1 - x3 - e = a + e*(1-s) > 0");
  }
  {
    Poly lo = t2_x2 - e - (a + e * (one + c));
    Poly hi = one - t2_x2 - e - (a + e * (one - c));
    add("t2-clears-tube-13", lo.is_zero() && hi.is_zero() && scale_pos(a),
        "x2 - e = a + e*(1+c) > 0 and 1 - x2 - e = a + e*(1-c) > 0");
  }

  // disjointness by separating one coordinate's value ranges on the circle;
  // ranges come from linear parametrizations with nonnegative slope or from
  // a + b*(c or s) with b >= 0
  {
    // x3 on C1 is 0, on C2 it fills [e, 1/2-e]
    bool ok = (c2_x3.param_coefficient(1) == a) && (c2_x3.param_degree() == 1) &&
              scale_pos(a) && (c2_x3.at_param(0) == e) && (c2_x3.at_param(1) == half - e) &&
              scale_pos(e) && scale_pos(one - (half - e));
    add("c1-c2-disjoint", ok, "x3 ranges {0} and [e, 1/2-e] never meet mod 1");
  }
  {
    // x3 on C1 is 0, on T2 it fills [1/2-e, 1/2+e]
    bool ok = (t2_x3 - half - e * s).is_zero() && scale_pos(half - e) &&
              scale_pos(one - (half + e));
    add("c1-t2-disjoint", ok, "x3 ranges {0} and [1/2-e, 1/2+e] never meet mod 1");
  }
  {
    // x4 on C2 is 0, on T1 it fills [1/2-e, 1/2+e]
    bool ok = (t1_x4 - half - e * s).is_zero() && scale_pos(half - e) &&
              scale_pos(one - (half + e));
    add("c2-t1-disjoint", ok, "x4 ranges {0} and [1/2-e, 1/2+e] never meet mod 1");
  }
  {
    // x2 ranges [-e, e] and [1/2-e, 1/2+e]; both circular gaps equal a
    Poly gap1 = (half - e) - e - a;
    Poly gap2 = (one - e) - (half + e) - a;
    bool ok = (t1_x2 - e * c).is_zero() && (t2_x2 - half - e * c).is_zero() &&
              gap1.is_zero() && gap2.is_zero() && scale_pos(a);
    add("t1-t2-disjoint", ok, "gaps between x2 ranges are 1/2 - 2e = a > 0 both ways");
  }

  {
    // x4 images [e, 1/2-e] and [1/2-e, 1/2+e] share exactly the value 1/2-e;
    // the slope a and the radius e are nonzero, so t = 1 and sin = -1 are the
    // unique preimages, and the remaining coordinates agree there
    Poly touch = c1_x4.at_param(1) - (half - e);
    Poly wrap_gap = e + one - (half + e);
    bool coords = (c1_x2.at_param(1).is_zero()) && (t1_x2.at_angle(0, -1).is_zero()) &&
                  (t1_x4.at_angle(0, -1) == half - e);
    bool ok = touch.is_zero() && scale_pos(wrap_gap) && scale_pos(a) && scale_pos(e) && coords;
    add("c1-t1-single-point", ok,
        "x4 touch at 1/2-e only; t = 1, sin = -1; x2 agrees (= 0), x1 and x3 free");
  }
  {
    std::array<Vec4, 4> cols = {e1, c1_v, e3,
                                {t1_v[0].at_angle(0, -1), t1_v[1].at_angle(0, -1),
                                 t1_v[2].at_angle(0, -1), t1_v[3].at_angle(0, -1)}};
    Poly det = det4(cols);
    add("c1-t1-transverse", det.sign_under_scale_order() != 0,
        "frame determinant at the point: " + det.to_string());
  }
  {
    Poly touch = c2_x3.at_param(1) - (half - e);
    Poly wrap_gap = e + one - (half + e);
    bool coords = (c2_x2.at_param(1) == half) && (t2_x2.at_angle(0, -1) == half) &&
                  (t2_x3.at_angle(0, -1) == half - e);
    bool ok = touch.is_zero() && scale_pos(wrap_gap) && scale_pos(a) && scale_pos(e) && coords;
    add("c2-t2-single-point", ok,
        "x3 touch at 1/2-e only; t = 1, sin = -1; x2 agrees (= 1/2), x1 and x4 free");
  }
  {
    std::array<Vec4, 4> cols = {e1, c2_v, e4,
                                {t2_v[0].at_angle(0, -1), t2_v[1].at_angle(0, -1),
                                 t2_v[2].at_angle(0, -1), t2_v[3].at_angle(0, -1)}};
    Poly det = det4(cols);
    add("c2-t2-transverse", det.sign_under_scale_order() != 0,
        "frame determinant at the point: " + det.to_string());
  }

  {
    // endpoint circles: t = 0 lands on the tube-12 boundary, t = 1 on tube 13
    Poly g12_start = c1_x3.at_param(0) * c1_x3.at_param(0) +
                     c1_x4.at_param(0) * c1_x4.at_param(0) - e * e;
    Poly g13_end = c1_x2.at_param(1) * c1_x2.at_param(1) +
                   (c1_x4.at_param(1) - half) * (c1_x4.at_param(1) - half) - e * e;
    add("c1-boundary-circles", g12_start.is_zero() && g13_end.is_zero(),
        "dC1 = circle on tube-12 boundary at t = 0, circle on tube-13 boundary at t = 1");
  }
  {
    Poly g12_start = c2_x3.at_param(0) * c2_x3.at_param(0) +
                     c2_x4.at_param(0) * c2_x4.at_param(0) - e * e;
    Poly g14_end = (c2_x2.at_param(1) - half) * (c2_x2.at_param(1) - half) +
                   (c2_x3.at_param(1) - half) * (c2_x3.at_param(1) - half) - e * e;
    add("c2-boundary-circles", g12_start.is_zero() && g14_end.is_zero(),
        "dC2 = circle on tube-12 boundary at t = 0, circle on tube-14 boundary at t = 1");
  }

  report.all_pass = true;
  for (const auto& ck : report.checks)
    report.all_pass = report.all_pass && ck.pass;
  return report;
}

} // namespace symsurg

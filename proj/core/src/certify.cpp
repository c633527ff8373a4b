// Copyright 2026 The fdcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fdcert/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fdcert/geometry.hpp"

namespace fdcert {

namespace {

constexpr double kRadicandSlack = 1e-12;
constexpr double kCosineSlack = 1e-12;

void require_unit_interval(double value, const char* what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    std::ostringstream msg;
    msg << what << " must lie in [0, 1], got " << value;
    throw std::invalid_argument(msg.str());
  }
}

// The certificate expressed through r = 1 - F and D^2, so that the O(r)
// parts of P, Q and the radicand cancel analytically rather than in floating
// point. With p = d^2 - P^2 and q = (d(d+1))^2 - Q^2:
//   p = d(d+1) r,   q = 2 d (d+1)^2 (d+2) r - K (D^2 + r^2),
//   d Q + d^2 - (d+2) P^2 = [d K (D^2 + r^2) + (d+2) p (Q - d(d+1))] / (Q + d(d+1)),
// where K = d(d+1)(d+2)(d+3).
OverlapCertificate certificate_from_deficit(double r, double D, std::size_t dim) {
  if (dim < 4) {
    throw std::invalid_argument(
        "certified overlap needs d >= 4; for a qubit (F, D) carry no extra information "
        "(D = (1 - F)/sqrt(5))");
  }
  if (!std::isfinite(r) || !std::isfinite(D)) {
    throw std::invalid_argument("certified overlap: non-finite moments");
  }
  const double d = static_cast<double>(dim);
  const double dd1 = d * (d + 1.0);
  const double k4 = dd1 * (d + 2.0) * (d + 3.0);
  const double second = D * D + r * r;

  const double p_raw = dd1 * r;
  const double q_raw = 2.0 * d * (d + 1.0) * (d + 1.0) * (d + 2.0) * r - k4 * second;

  OverlapCertificate out;
  auto& inv = out.invariants;
  inv.P2_raw = d * d - p_raw;
  inv.Q2_raw = dd1 * dd1 - q_raw;
  const double p = std::clamp(p_raw, 0.0, d * d);
  const double q = std::clamp(q_raw, 0.0, dd1 * dd1);
  inv.P2 = d * d - p;
  inv.Q2 = dd1 * dd1 - q;
  inv.clamped = p != p_raw || q != q_raw;
  if (inv.clamped) out.flags |= kFlagSpectralClamp;

  const double P = std::sqrt(inv.P2);
  const double Q = std::sqrt(inv.Q2);
  double core = 0.0;
  if (!inv.clamped) {
    const double s = Q + dd1;
    const double dq = -q / s;  // Q - d(d+1)
    core = (d * k4 * second + (d + 2.0) * p * dq) / s;
  } else {
    core = d * Q + d * d - (d + 2.0) * inv.P2;
  }
  out.radicand = (d - 2.0) * core;
  if (out.radicand < -kRadicandSlack) out.flags |= kFlagRadicandClamp;

  const double spread = std::sqrt(std::max(out.radicand, 0.0)) / (2.0 * d);
  const double c_raw = P / d - spread;
  if (c_raw <= 0.0) {
    out.c = 0.0;
    out.one_minus_c = 1.0;
    out.bound = 1.0;
    return out;
  }
  out.c = std::min(c_raw, 1.0);
  // 1 - P/d = p / (d (d + P)).
  out.one_minus_c = std::max(p / (d * (d + P)) + spread, 0.0);
  out.bound = std::min(std::sqrt(out.one_minus_c * (1.0 + out.c)), 1.0);
  return out;
}

CertificateBundle certify_from_deficit(double r, double D, std::size_t d,
                                       std::optional<double> u) {
  CertificateBundle out;
  out.dim = d;
  require_unit_interval(r, "infidelity");
  const double dd = static_cast<double>(d);
  out.b_fidelity_only_raw = std::sqrt(dd * (dd + 1.0) * r);
  out.b_fidelity_only = std::min(out.b_fidelity_only_raw, 1.0);
  if (out.b_fidelity_only_raw > 1.0) out.flags |= kFlagVacuousBound;

  if (u) {
    out.b_ru_raw = bound_ru_raw(r, *u, d);
    out.b_ru = std::min(*out.b_ru_raw, 1.0);
    if (*out.b_ru_raw > 1.0) out.flags |= kFlagVacuousBound;
  }

  const auto cert = certificate_from_deficit(r, D, d);
  out.c_value = cert.c;
  out.b_fd = cert.bound;
  out.flags |= cert.flags;
  if (out.b_fd > out.b_fidelity_only) out.flags |= kFlagFdLooserThanFidelity;

  const auto hybrid = bound_hybrid(out.b_ru, out.b_fd);
  out.b_hybrid = hybrid.value;
  out.hybrid_source = hybrid.source;
  return out;
}

}  // namespace

std::string_view bound_source_name(BoundSource source) {
  return source == BoundSource::FD ? "fd" : "ru";
}

double min_overlap_exact(const UnitaryOperator& x) {
  const auto spectrum = eigenvalues_unitary(x);
  std::vector<PlanarPoint> points;
  points.reserve(spectrum.size());
  for (const auto& z : spectrum) points.push_back(PlanarPoint::from_complex(z));
  const auto hull = convex_hull(points);
  return std::min(distance_origin_to_hull(hull), 1.0);
}

double diamond_exact(const UnitaryOperator& x) {
  const auto spectrum = eigenvalues_unitary(x);
  std::vector<double> phases;
  phases.reserve(spectrum.size());
  for (const auto& z : spectrum) phases.push_back(std::arg(z));
  std::sort(phases.begin(), phases.end());
  double widest_gap = 2.0 * std::numbers::pi - (phases.back() - phases.front());
  for (std::size_t i = 1; i < phases.size(); ++i) {
    widest_gap = std::max(widest_gap, phases[i] - phases[i - 1]);
  }
  const double width = 2.0 * std::numbers::pi - widest_gap;
  return width >= std::numbers::pi ? 1.0 : std::sin(width / 2.0);
}

double bound_fidelity_only(double r, std::size_t d) {
  require_unit_interval(r, "infidelity");
  const double dd = static_cast<double>(d);
  return std::min(std::sqrt(dd * (dd + 1.0) * r), 1.0);
}

double bound_ru_raw(double r, double u, std::size_t d) {
  require_unit_interval(r, "infidelity");
  if (d < 2) throw std::invalid_argument("bound_ru: dimension must be at least 2");
  if (!std::isfinite(u)) throw std::invalid_argument("bound_ru: unitarity must be finite");
  const double dd = static_cast<double>(d);
  const double radicand = (u - 1.0) + 2.0 * dd * r / (dd - 1.0);
  if (radicand < -kRadicandSlack) {
    std::ostringstream msg;
    msg << "bound_ru: inconsistent (r, u) = (" << r << ", " << u
        << "), radicand " << radicand;
    throw std::invalid_argument(msg.str());
  }
  const double c_d = 0.5 * std::sqrt(1.0 - 1.0 / (dd * dd));
  return dd * dd * c_d * std::sqrt(std::max(radicand, 0.0));
}

double bound_ru(double r, double u, std::size_t d) {
  return std::min(bound_ru_raw(r, u, d), 1.0);
}

OverlapCertificate overlap_certificate(double F, double D, std::size_t d) {
  return certificate_from_deficit(1.0 - F, D, d);
}

double certified_overlap(double F, double D, std::size_t d) {
  return overlap_certificate(F, D, d).c;
}

double bound_fd(double F, double D, std::size_t d) {
  return overlap_certificate(F, D, d).bound;
}

HybridBound bound_hybrid(std::optional<double> b_ru, std::optional<double> b_fd) {
  if (!b_ru && !b_fd) throw std::invalid_argument("bound_hybrid: no bounds supplied");
  if (!b_ru) return {*b_fd, BoundSource::FD};
  if (!b_fd) return {*b_ru, BoundSource::RU};
  if (*b_ru < *b_fd) return {*b_ru, BoundSource::RU};
  return {*b_fd, BoundSource::FD};
}

UnitaryOperator tightness_witness(double F, double D, std::size_t dim) {
  if (dim < 4 || dim % 2 != 0) {
    throw std::invalid_argument("tightness_witness: needs even d >= 4");
  }
  const auto cert = overlap_certificate(F, D, dim);
  const double d = static_cast<double>(dim);
  const double b = cert.c;
  const double a = (std::sqrt(cert.invariants.P2) - 2.0 * b) / (d - 2.0);
  if (std::abs(a) > 1.0 + kCosineSlack || std::abs(b) > 1.0 + kCosineSlack) {
    std::ostringstream msg;
    msg << "tightness_witness: inadmissible moments (cos a = " << a << ", cos b = " << b << ")";
    throw std::invalid_argument(msg.str());
  }
  const double alpha = std::acos(std::clamp(a, -1.0, 1.0));
  const double beta = std::acos(std::clamp(b, -1.0, 1.0));
  std::vector<Complex> diag;
  diag.reserve(dim);
  for (std::size_t k = 0; k + 2 < dim; k += 2) {
    diag.push_back(std::polar(1.0, alpha));
    diag.push_back(std::polar(1.0, -alpha));
  }
  diag.push_back(std::polar(1.0, beta));
  diag.push_back(std::polar(1.0, -beta));
  return UnitaryOperator(ComplexSquareMatrix::diagonal(diag));
}

CertificateBundle certify_moments(double F, double D, std::size_t d, std::optional<double> u) {
  return certify_from_deficit(1.0 - F, D, d, u);
}

CertificateBundle certify_unitary(const UnitaryOperator& x, std::optional<double> u) {
  const auto moments = fd_from_unitary(x);
  auto out = certify_from_deficit(moments.r, moments.D, x.dim(), u);
  out.d_exact = diamond_exact(x);
  return out;
}

}  // namespace fdcert

#include "mxa/norms.hpp"

#include <algorithm>
#include <cmath>

namespace mxa {

std::string NormId::name() const {
  switch (tag) {
    case Tag::Operator: return "op";
    case Tag::Trace: return "tr";
    case Tag::Schatten: return "S" + std::to_string(p);
    case Tag::KyFan: return "KF" + std::to_string(k);
    case Tag::KyFanNormalized: return "KFn" + std::to_string(k);
  }
  return "?";
}

std::string AntinormId::name() const {
  switch (tag) {
    case Tag::SchattenQuasi: return "Sq" + std::to_string(q);
    case Tag::MinkowskiDetRoot: return "det^(1/n)";
    case Tag::DerivedAntinorm: return "derived(" + base.name() + "," + std::to_string(p) + ")";
    case Tag::MinKSum: return "minsum" + std::to_string(k);
    case Tag::MinKGeo: return "mingeo" + std::to_string(k);
  }
  return "?";
}

double norm_from_singvals(const NormId& id, const std::vector<double>& mu) {
  if (mu.empty()) return 0.0;
  switch (id.tag) {
    case NormId::Tag::Operator:
      return mu[0];
    case NormId::Tag::Trace: {
      double s = 0.0;
      for (double v : mu) s += v;
      return s;
    }
    case NormId::Tag::Schatten: {
      if (id.p < 1.0) throw Error(Errc::BadParameter, "Schatten p < 1");
      double s = 0.0;
      for (double v : mu) s += std::pow(v, id.p);
      return std::pow(s, 1.0 / id.p);
    }
    case NormId::Tag::KyFan:
    case NormId::Tag::KyFanNormalized: {
      if (id.k < 1 || static_cast<std::size_t>(id.k) > mu.size())
        throw Error(Errc::BadParameter, "KyFan k out of range");
      double s = 0.0;
      for (int j = 0; j < id.k; ++j) s += mu[j];
      return id.tag == NormId::Tag::KyFan ? s : s / id.k;
    }
  }
  return 0.0;
}

double norm(const NormId& id, const Matrix& m) {
  return norm_from_singvals(id, singular_values(m));
}

double antinorm(const AntinormId& id, const Matrix& psd) {
  require_psd(psd, "antinorm");
  auto lam = eigvals(hermitian_part(psd));
  for (auto& v : lam) v = std::max(v, 0.0);
  const std::size_t n = lam.size();
  if (n == 0) return 0.0;
  const double floor = tol::eig_floor * std::max(lam[0], 1e-300);
  const bool singular = lam.back() <= floor;

  switch (id.tag) {
    case AntinormId::Tag::SchattenQuasi: {
      if (id.q <= 0.0 || id.q >= 1.0) throw Error(Errc::BadParameter, "quasi q outside (0,1)");
      double s = 0.0;
      for (double v : lam) s += std::pow(v, id.q);
      return std::pow(s, 1.0 / id.q);
    }
    case AntinormId::Tag::MinkowskiDetRoot: {
      if (singular) return 0.0;
      double s = 0.0;
      for (double v : lam) s += std::log(v);
      return std::exp(s / static_cast<double>(n));
    }
    case AntinormId::Tag::DerivedAntinorm: {
      if (id.p >= 0.0) throw Error(Errc::BadParameter, "derived antinorm needs p < 0");
      if (singular) return 0.0;
      std::vector<double> powed(n);
      for (std::size_t i = 0; i < n; ++i) powed[i] = std::pow(lam[i], id.p);
      std::sort(powed.rbegin(), powed.rend());
      return std::pow(norm_from_singvals(id.base, powed), 1.0 / id.p);
    }
    case AntinormId::Tag::MinKSum: {
      if (id.k < 1 || static_cast<std::size_t>(id.k) > n)
        throw Error(Errc::BadParameter, "MinKSum k out of range");
      double s = 0.0;
      for (int j = 0; j < id.k; ++j) s += lam[n - 1 - j];
      return s;
    }
    case AntinormId::Tag::MinKGeo: {
      if (id.k < 1 || static_cast<std::size_t>(id.k) > n)
        throw Error(Errc::BadParameter, "MinKGeo k out of range");
      double s = 1.0;
      for (int j = 0; j < id.k; ++j) s *= lam[n - 1 - j];
      return std::pow(std::max(s, 0.0), 1.0 / id.k);
    }
  }
  return 0.0;
}

std::vector<NormId> norm_catalog(std::size_t dim) {
  std::vector<NormId> out = {NormId::op(), NormId::trace_norm(), NormId::schatten(1.5),
                             NormId::schatten(2.0), NormId::schatten(3.0)};
  for (std::size_t k = 1; k <= dim; ++k) out.push_back(NormId::kyfan(static_cast<int>(k)));
  return out;
}

std::vector<AntinormId> antinorm_catalog(std::size_t dim) {
  std::vector<AntinormId> out = {AntinormId::schatten_quasi(0.5), AntinormId::det_root(),
                                 AntinormId::derived(NormId::trace_norm(), -1.0),
                                 AntinormId::derived(NormId::op(), -2.0)};
  for (std::size_t k = 1; k <= dim; ++k) {
    out.push_back(AntinormId::min_k_sum(static_cast<int>(k)));
    out.push_back(AntinormId::min_k_geo(static_cast<int>(k)));
  }
  return out;
}

MajorizationReport majorize_values(MajOrder order, std::vector<double> lx,
                                   std::vector<double> ly, double scale) {
  if (lx.size() != ly.size()) throw Error(Errc::DimensionMismatch, "majorize");
  std::sort(lx.rbegin(), lx.rend());
  std::sort(ly.rbegin(), ly.rend());
  const std::size_t n = lx.size();
  MajorizationReport rep;
  rep.order = order;
  rep.partial_margins.resize(n);
  if (scale <= 0.0) scale = 1.0;

  const bool logscale = order != MajOrder::weak;
  double top = 1e-300;
  for (std::size_t i = 0; i < n; ++i)
    top = std::max({top, std::abs(lx[i]), std::abs(ly[i])});
  const double floor = tol::eig_floor * top;

  auto val = [&](double t) {
    if (!logscale) return t;
    return std::log(std::max(t, floor));
  };

  if (order == MajOrder::super_weak_log) {
    // Increasing-order log partial sums; pass means LHS >= RHS.
    std::sort(lx.begin(), lx.end());
    std::sort(ly.begin(), ly.end());
  }

  double sx = 0.0, sy = 0.0;
  double worst = 1e300;
  std::size_t worst_k = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (logscale && (lx[k] <= floor || ly[k] <= floor)) rep.floor_hit = true;
    sx += val(lx[k]);
    sy += val(ly[k]);
    double margin;
    if (order == MajOrder::super_weak_log)
      margin = sx - sy;  // LHS products dominate
    else
      margin = sy - sx;
    if (!logscale) margin /= scale;
    rep.partial_margins[k] = margin;
    if (margin < worst) {
      worst = margin;
      worst_k = k + 1;
    }
  }
  rep.worst_margin = worst;
  rep.worst_k = worst_k;
  rep.final_margin = rep.partial_margins.back();
  rep.verdict = worst >= -tol::maj;
  if (order == MajOrder::log && !rep.floor_hit)
    rep.verdict = rep.verdict && std::abs(rep.final_margin) <= tol::maj * 10;
  return rep;
}

MajorizationReport majorize(MajOrder order, const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw Error(Errc::DimensionMismatch, "majorize");
  const bool logorder = order != MajOrder::weak;
  if (logorder) {
    require_psd(x, "majorize: log order LHS");
    require_psd(y, "majorize: log order RHS");
  } else {
    x.require_hermitian("majorize LHS", tol::herm * 100);
    y.require_hermitian("majorize RHS", tol::herm * 100);
  }
  auto lx = eigvals(hermitian_part(x));
  auto ly = eigvals(hermitian_part(y));
  double scale = 1.0;
  for (double v : ly) scale = std::max(scale, std::abs(v));
  return majorize_values(order, lx, ly, scale);
}

std::vector<NormComparison> kyfan_transfer(const MajorizationReport& report, const Matrix& x,
                                           const Matrix& y) {
  std::vector<NormComparison> out;
  if (!report.verdict) return out;
  if (report.order == MajOrder::super_weak_log) return out;
  auto mx = singular_values(x);
  auto my = singular_values(y);
  for (const auto& id : norm_catalog(mx.size())) {
    NormComparison c;
    c.id = id;
    c.lhs = norm_from_singvals(id, mx);
    c.rhs = norm_from_singvals(id, my);
    out.push_back(c);
  }
  return out;
}

}  // namespace mxa

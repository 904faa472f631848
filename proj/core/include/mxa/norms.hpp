#pragma once
//
// Symmetric norms, antinorms on the positive cone, and the majorization
// orders with per-k margin reporting.
//

#include <string>
#include <vector>

#include "mxa/eig.hpp"

namespace mxa {

struct NormId {
  enum class Tag { Operator, Trace, Schatten, KyFan, KyFanNormalized };
  Tag tag = Tag::Operator;
  double p = 2.0;  // Schatten parameter, >= 1
  int k = 1;       // Ky Fan parameter, 1 <= k <= dim

  static NormId op() { return {Tag::Operator, 2.0, 1}; }
  static NormId trace_norm() { return {Tag::Trace, 1.0, 1}; }
  static NormId schatten(double p) { return {Tag::Schatten, p, 1}; }
  static NormId kyfan(int k) { return {Tag::KyFan, 2.0, k}; }
  static NormId kyfan_normalized(int k) { return {Tag::KyFanNormalized, 2.0, k}; }

  std::string name() const;
};

struct AntinormId {
  enum class Tag { SchattenQuasi, MinkowskiDetRoot, DerivedAntinorm, MinKSum, MinKGeo };
  Tag tag = Tag::MinkowskiDetRoot;
  double q = 0.5;   // Schatten quasi parameter, 0 < q < 1
  double p = -1.0;  // derived antinorm exponent, p < 0
  NormId base;      // derived antinorm base norm
  int k = 1;

  static AntinormId schatten_quasi(double q) {
    AntinormId a;
    a.tag = Tag::SchattenQuasi;
    a.q = q;
    return a;
  }
  static AntinormId det_root() { return AntinormId{}; }
  static AntinormId derived(NormId base, double p) {
    AntinormId a;
    a.tag = Tag::DerivedAntinorm;
    a.base = base;
    a.p = p;
    return a;
  }
  static AntinormId min_k_sum(int k) {
    AntinormId a;
    a.tag = Tag::MinKSum;
    a.k = k;
    return a;
  }
  static AntinormId min_k_geo(int k) {
    AntinormId a;
    a.tag = Tag::MinKGeo;
    a.k = k;
    return a;
  }
  std::string name() const;
};

double norm(const NormId& id, const Matrix& m);
double norm_from_singvals(const NormId& id, const std::vector<double>& mu);

// Requires a PSD argument. DerivedAntinorm is 0 on singular matrices.
double antinorm(const AntinormId& id, const Matrix& psd);

// The default norm catalog used by checkers: operator, trace, Schatten
// {1.5, 2, 3}, all Ky Fan k for the given dimension.
std::vector<NormId> norm_catalog(std::size_t dim);
std::vector<AntinormId> antinorm_catalog(std::size_t dim);

enum class MajOrder { weak, weak_log, log, super_weak_log };

struct MajorizationReport {
  MajOrder order = MajOrder::weak;
  // RHS partial aggregate minus LHS, per k (log scale for the log orders,
  // LHS minus RHS for super_weak_log so that pass is always margin >= -tau).
  std::vector<double> partial_margins;
  bool verdict = false;
  std::size_t worst_k = 0;  // 1-based index of the smallest margin
  double worst_margin = 0.0;
  double final_margin = 0.0;   // det-equality margin for order == log
  bool floor_hit = false;      // some eigenvalue was clamped at the log floor

  double scaled_worst() const { return worst_margin; }
};

// X and Y Hermitian of equal dimension; log orders require PSD inputs.
MajorizationReport majorize(MajOrder order, const Matrix& x, const Matrix& y);
MajorizationReport majorize_values(MajOrder order, std::vector<double> lx,
                                   std::vector<double> ly, double scale);

struct NormComparison {
  NormId id;
  double lhs = 0.0;
  double rhs = 0.0;
};

// Ky Fan transfer: a passing weak or weak_log report implies every symmetric
// norm is ordered. Cross-check only; empty when the report failed.
std::vector<NormComparison> kyfan_transfer(const MajorizationReport& report, const Matrix& x,
                                           const Matrix& y);

}  // namespace mxa

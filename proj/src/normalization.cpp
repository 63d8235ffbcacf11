#include "leibext/normalization.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "leibext/errors.hpp"

namespace leibext {

namespace {

using CVector = Eigen::VectorXcd;

AdaptedTransform unpack(int n, const CVector& z) {
  AdaptedTransform t;
  t.n = n;
  t.A0 = z(0);
  t.A1 = z(1);
  t.B.assign(z.data() + 2, z.data() + z.size());
  return t;
}

CVector pack(const AdaptedTransform& t) {
  CVector z(t.n);
  z(0) = t.A0;
  z(1) = t.A1;
  for (int k = 0; k < t.n - 2; ++k) z(2 + k) = t.B[k];
  return z;
}

// Residual vector, or nullopt when the transform is degenerate.
std::optional<CVector> residual(const ExtensionParams& p, const std::vector<SlotTarget>& targets,
                                const CVector& z) {
  try {
    const auto v = to_vector(act_on_params(unpack(p.n, z), p));
    CVector r(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) r(i) = v[targets[i].slot] - targets[i].value;
    for (int i = 0; i < r.size(); ++i)
      if (!is_finite(r(i))) return std::nullopt;
    return r;
  } catch (const ValidityError&) {
    return std::nullopt;
  }
}

double norm_inf(const CVector& r) { return r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff(); }

}  // namespace

NormalizationResult solve_normalization(const ExtensionParams& p,
                                        const std::vector<SlotTarget>& targets,
                                        std::uint64_t seed,
                                        const std::optional<AdaptedTransform>& initial,
                                        const NormalizationOptions& options) {
  validate(p);
  for (const auto& t : targets)
    if (t.slot < 0 || t.slot >= arity(p.n)) throw ArgumentError("normalization: bad slot");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);

  NormalizationResult best;
  best.residual = std::numeric_limits<double>::infinity();
  best.transform = identity_transform(p.n);

  for (int start = 0; start < options.starts; ++start) {
    CVector z(p.n);
    if (start == 0 && initial) {
      z = pack(*initial);
    } else {
      for (int i = 0; i < z.size(); ++i) z(i) = std::polar(mag(rng), ang(rng));
    }
    auto r = residual(p, targets, z);
    if (!r) continue;
    double rn = norm_inf(*r);

    for (int it = 0; it < options.max_iterations && rn > options.accept_residual; ++it) {
      // The residual is holomorphic in z, so a real step gives the complex derivative.
      Eigen::MatrixXcd jac(r->size(), z.size());
      bool ok = true;
      for (int c = 0; c < z.size() && ok; ++c) {
        const double h = 1e-6 * std::max(1.0, std::abs(z(c)));
        CVector zp = z, zm = z;
        zp(c) += h;
        zm(c) -= h;
        const auto rp = residual(p, targets, zp);
        const auto rm = residual(p, targets, zm);
        if (!rp || !rm) {
          ok = false;
          break;
        }
        jac.col(c) = (*rp - *rm) / (2.0 * h);
      }
      if (!ok) break;
      const CVector step = Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd>(jac).solve(-*r);

      double damping = 1.0;
      bool improved = false;
      for (int halving = 0; halving < 30; ++halving, damping *= 0.5) {
        const CVector trial = z + damping * step;
        const auto rt = residual(p, targets, trial);
        if (rt && norm_inf(*rt) < rn) {
          z = trial;
          r = rt;
          rn = norm_inf(*rt);
          improved = true;
          break;
        }
      }
      if (!improved) break;
    }

    best.starts_used = start + 1;
    if (rn < best.residual) {
      best.residual = rn;
      best.transform = unpack(p.n, z);
    }
    if (rn <= options.accept_residual) {
      best.converged = true;
      return best;
    }
  }
  return best;
}

}  // namespace leibext

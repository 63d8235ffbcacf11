#include "leibext/constraints.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>

#include "leibext/algebra.hpp"
#include "leibext/errors.hpp"

namespace leibext {

namespace {

struct Unknown {
  std::string name;
  int i, j;
};

std::string pair_name(int i, int j) { return "b" + std::to_string(i) + std::to_string(j); }

// b_{i,j} with i >= 2 first, then b_{1,j}, then b11, b01, b00: pivots land on
// the dependent entries and the first-row parameters stay free.
std::vector<Unknown> unknown_layout(int n) {
  std::vector<Unknown> u;
  for (int i = 2; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) u.push_back({pair_name(i, j), i, j});
  for (int j = 2; j <= n - 1; ++j) u.push_back({pair_name(1, j), 1, j});
  u.push_back({"b11", 1, 1});
  u.push_back({"b01", 0, 1});
  u.push_back({"b00", 0, 0});
  return u;
}

StructureTensor ansatz(int n, const std::vector<Unknown>& layout, const std::vector<double>& x) {
  StructureTensor t(n + 1);
  for (int i = 1; i <= n - 1; ++i) t.set(i, 0, i + 1, 1.0);
  for (int i = 1; i <= n - 1; ++i) t.set(0, i, i + 1, -1.0);
  for (std::size_t c = 0; c < layout.size(); ++c) {
    if (x[c] == 0.0) continue;
    const auto& u = layout[c];
    if (u.i == 0 || u.i == u.j) {
      t.add(u.i, u.j, n, x[c]);
    } else {
      t.add(u.i, u.j, n, x[c]);
      t.add(u.j, u.i, n, -x[c]);
    }
  }
  return t;
}

// Every component of the Leibniz expression over all basis triples.
std::vector<double> identity_components(const StructureTensor& t) {
  const int d = t.dim();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(d) * d * d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          Complex v{};
          for (int m = 0; m < d; ++m) {
            v += t(j, k, m) * t(i, m, l) - t(i, j, m) * t(m, k, l) + t(i, k, m) * t(m, j, l);
          }
          out.push_back(v.real());
        }
  return out;
}

double snap(double v) {
  const double r = std::round(v);
  return std::abs(v - r) < 1e-9 ? r : v;
}

}  // namespace

ConstraintReport solve_leibniz_constraints(int n) {
  if (n < 4 || n > 9) throw ArgumentError("solve_leibniz_constraints: n must lie in 4..9");
  const auto layout = unknown_layout(n);
  const int cols = static_cast<int>(layout.size());

  std::vector<double> zero(cols, 0.0);
  const auto base = identity_components(ansatz(n, layout, zero));
  const int rows = static_cast<int>(base.size());
  Eigen::MatrixXd jac(rows, cols);
  for (int c = 0; c < cols; ++c) {
    std::vector<double> x(cols, 0.0);
    x[c] = 1.0;
    const auto r = identity_components(ansatz(n, layout, x));
    for (int row = 0; row < rows; ++row) jac(row, c) = r[row] - base[row];
  }
  for (double v : base) {
    if (std::abs(v) > 1e-12) throw Error("graded part violates the Leibniz identity");
  }

  ConstraintReport rep;
  rep.n = n;
  rep.total_unknowns = cols;
  for (const auto& u : layout) rep.unknowns.push_back(u.name);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  const auto& sv = svd.singularValues();
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * std::max(1.0, sv(0))) ++rep.rank;
  rep.free_count = cols - rep.rank;

  // Reduced row echelon form with partial pivoting.
  Eigen::MatrixXd a = jac;
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    Eigen::Index best;
    const double mag = a.col(c).tail(rows - r).cwiseAbs().maxCoeff(&best);
    if (mag < 1e-9) continue;
    a.row(r).swap(a.row(r + best));
    a.row(r) /= a(r, c);
    for (int other = 0; other < rows; ++other) {
      if (other != r && a(other, c) != 0.0) a.row(other) -= a(other, c) * a.row(r);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  if (static_cast<int>(pivot_cols.size()) != rep.rank) {
    throw Error("constraint solver: echelon rank disagrees with singular values");
  }

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  for (int f : free_cols) {
    rep.free_unknowns.push_back(layout[f].name);
    std::vector<double> dir(cols, 0.0);
    dir[f] = 1.0;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) dir[pivot_cols[k]] = snap(-a(k, f));
    rep.free_basis.push_back(dir);
  }

  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    const auto& u = layout[pivot_cols[k]];
    ImpliedRelation rel{u.name, u.i, u.j, {}};
    for (int f : free_cols) {
      const double coef = snap(-a(k, f));
      if (std::abs(coef) > 1e-9) rel.terms.push_back({layout[f].name, coef});
    }
    rep.implied_relations.push_back(rel);
  }

  // s(i) from b_{i,j} = s(i) b_{1,i+j-1} over every j (b_{i,j} = -b_{j,i}
  // included) and every free direction; s(1) = +1.
  rep.signs.n = n;
  rep.signs.sign.assign(n, 1);
  rep.signs.determined.assign(n, false);
  rep.signs.determined[1] = true;
  for (int i = 2; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1 && i + j - 1 <= n - 1; ++j) {
      for (const auto& dir : rep.free_basis) {
        const double first = ansatz_entry(rep, dir, 1, i + j - 1);
        const double entry = ansatz_entry(rep, dir, i, j);
        if (std::abs(first) < 1e-9) {
          if (std::abs(entry) > 1e-9) rep.signs_consistent = false;
          continue;
        }
        const double ratio = entry / first;
        if (std::abs(std::abs(ratio) - 1.0) > 1e-9) {
          rep.signs_consistent = false;
          continue;
        }
        const int sgn = ratio > 0 ? 1 : -1;
        if (rep.signs.determined[i] && rep.signs.sign[i] != sgn) rep.signs_consistent = false;
        rep.signs.sign[i] = sgn;
        rep.signs.determined[i] = true;
      }
    }
  }
  rep.arity_matches = rep.free_count == arity(n);
  return rep;
}

const SignTable& leibniz_signs(int n) {
  if (n < 4 || n > 9) throw ArgumentError("leibniz_signs: n must lie in 4..9");
  static std::array<SignTable, 6> cache;
  static std::array<std::once_flag, 6> once;
  std::call_once(once[n - 4], [n] { cache[n - 4] = solve_leibniz_constraints(n).signs; });
  return cache[n - 4];
}

double ansatz_entry(const ConstraintReport& report, const std::vector<double>& direction, int i,
                    int j) {
  if (i < 1 || j < 1 || i > report.n - 1 || j > report.n - 1) {
    throw ArgumentError("ansatz_entry: index out of range");
  }
  if (i == j && i >= 2) return 0.0;
  if (i > j) return -ansatz_entry(report, direction, j, i);
  const std::string name = pair_name(i, j);
  const auto it = std::find(report.unknowns.begin(), report.unknowns.end(), name);
  if (it == report.unknowns.end()) throw ArgumentError("ansatz_entry: unknown " + name);
  return direction.at(static_cast<std::size_t>(it - report.unknowns.begin()));
}

}  // namespace leibext

#include "crn/lp.hpp"

#include <stdexcept>

namespace crn {

std::optional<std::vector<Rat>> feasible_nonneg(const RatMat& a, const std::vector<Rat>& b) {
  int m = a.rows(), n = a.cols();
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("feasible_nonneg: size mismatch");

  // Phase-I tableau: structural columns, one artificial per row, RHS last.
  int width = n + m + 1;
  RatMat t(m, width);
  for (int i = 0; i < m; ++i) {
    bool flip = sign_of(b[i]) < 0;
    for (int j = 0; j < n; ++j) t(i, j) = flip ? -a(i, j) : a(i, j);
    t(i, n + i) = 1;
    t(i, n + m) = flip ? -b[i] : b[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced-cost row for min sum(artificials); updated by pivots like any row.
  std::vector<Rat> z(width, Rat(0));
  for (int j = 0; j < width; ++j)
    for (int i = 0; i < m; ++i) z[j] -= t(i, j);
  for (int i = 0; i < m; ++i) z[n + i] = 0;

  while (true) {
    int e = -1;
    for (int j = 0; j < n + m; ++j)
      if (sign_of(z[j]) < 0) {
        e = j;
        break;
      }
    if (e < 0) break;
    int r = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (sign_of(t(i, e)) <= 0) continue;
      Rat ratio = t(i, n + m) / t(i, e);
      if (r < 0 || ratio < best || (ratio == best && basis[i] < basis[r])) {
        r = i;
        best = ratio;
      }
    }
    if (r < 0) throw std::logic_error("feasible_nonneg: unbounded phase-I objective");
    Rat inv = 1 / t(r, e);
    for (int j = 0; j < width; ++j) t(r, j) *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || t(i, e) == 0) continue;
      Rat f = t(i, e);
      for (int j = 0; j < width; ++j) t(i, j) -= f * t(r, j);
    }
    if (z[e] != 0) {
      Rat f = z[e];
      for (int j = 0; j < width; ++j) z[j] -= f * t(r, j);
    }
    basis[r] = e;
  }

  if (z[n + m] != 0) return std::nullopt;  // objective = -z[rhs] > 0
  std::vector<Rat> x(n, Rat(0));
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t(i, n + m);
  return x;
}

std::optional<std::vector<Rat>> feasible_point(const RatMat& aeq, const std::vector<Rat>& beq,
                                               const RatMat& age, const std::vector<Rat>& bge) {
  int n = aeq.cols() ? aeq.cols() : age.cols();
  if ((aeq.rows() && aeq.cols() != n) || (age.rows() && age.cols() != n))
    throw std::invalid_argument("feasible_point: column mismatch");
  int meq = aeq.rows(), mge = age.rows();

  // x = p - q with p, q >= 0; one slack per inequality.
  RatMat a(meq + mge, 2 * n + mge);
  std::vector<Rat> b(meq + mge);
  for (int i = 0; i < meq; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = aeq(i, j);
      a(i, n + j) = -aeq(i, j);
    }
    b[i] = beq[i];
  }
  for (int i = 0; i < mge; ++i) {
    for (int j = 0; j < n; ++j) {
      a(meq + i, j) = age(i, j);
      a(meq + i, n + j) = -age(i, j);
    }
    a(meq + i, 2 * n + i) = -1;
    b[meq + i] = bge[i];
  }
  auto sol = feasible_nonneg(a, b);
  if (!sol) return std::nullopt;
  std::vector<Rat> x(n);
  for (int j = 0; j < n; ++j) x[j] = (*sol)[j] - (*sol)[n + j];
  return x;
}

std::optional<std::vector<Rat>> lp_feasible(const RatMat& equalities, const SignPattern& omega) {
  int n = equalities.cols(), m = equalities.rows();
  if (static_cast<int>(omega.size()) != n) throw std::invalid_argument("lp_feasible: size mismatch");

  // Substitute sigma_i = +-(1 + u_i) on the signed coordinates, drop zeros.
  std::vector<int> live;
  for (int i = 0; i < n; ++i)
    if (omega[i] != Sgn::zero) live.push_back(i);
  RatMat a(m, static_cast<int>(live.size()));
  std::vector<Rat> b(m, Rat(0));
  for (int i = 0; i < m; ++i) {
    for (size_t c = 0; c < live.size(); ++c) {
      int j = live[c];
      Rat v = equalities(i, j);
      a(i, static_cast<int>(c)) = omega[j] == Sgn::pos ? v : -v;
      b[i] -= omega[j] == Sgn::pos ? v : -v;
    }
  }
  auto u = feasible_nonneg(a, b);
  if (!u) return std::nullopt;
  std::vector<Rat> sigma(n, Rat(0));
  for (size_t c = 0; c < live.size(); ++c) {
    int j = live[c];
    sigma[j] = omega[j] == Sgn::pos ? Rat(Rat(1) + (*u)[c]) : Rat(Rat(-1) - (*u)[c]);
  }
  return sigma;
}

}  // namespace crn

#include "crn/multistat.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "crn/linalg.hpp"

namespace crn {

namespace {

std::vector<Rat> scaled_combination(const Rat& cm, const std::vector<Rat>& p, const Rat& cp,
                                    const std::vector<Rat>& m) {
  std::vector<Rat> out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = cm * p[i] - cp * m[i];
  return out;
}

std::vector<Rat> canonical_ray(const std::vector<Rat>& v) {
  std::vector<Int> prim = primitive_integer(v);
  std::vector<Rat> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(prim[i]);
  return out;
}

}  // namespace

ConeData extreme_rays(const IntMat& n) {
  const int r = n.cols();
  RatMat nr = to_rational(n);
  std::vector<std::vector<Rat>> lin = kernel_basis(nr);
  std::vector<std::vector<Rat>> rays;
  std::vector<int> processed;

  // Tight coordinate constraints shared by two rays, stacked under the
  // equality rows; adjacency means the common face has dimension
  // lineality + 2.
  auto adjacent = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<int> tight;
    for (int j : processed)
      if (a[j] == 0 && b[j] == 0) tight.push_back(j);
    RatMat stack(n.rows() + static_cast<int>(tight.size()), r);
    for (int i = 0; i < n.rows(); ++i)
      for (int j = 0; j < r; ++j) stack(i, j) = nr(i, j);
    for (size_t t = 0; t < tight.size(); ++t) stack(n.rows() + static_cast<int>(t), tight[t]) = 1;
    return rank_of(stack) == r - static_cast<int>(lin.size()) - 2;
  };

  for (int i = 0; i < r; ++i) {
    int pivot = -1;
    for (size_t j = 0; j < lin.size(); ++j)
      if (lin[j][i] != 0) {
        pivot = static_cast<int>(j);
        break;
      }

    if (pivot >= 0) {
      // A line leaves the halfspace: project everything else along it and
      // keep its feasible direction as a ray.
      std::vector<Rat> l = lin[pivot];
      lin.erase(lin.begin() + pivot);
      for (auto& v : lin) {
        Rat f = v[i] / l[i];
        if (f != 0)
          for (int c = 0; c < r; ++c) v[c] -= f * l[c];
      }
      for (auto& v : rays) {
        Rat f = v[i] / l[i];
        if (f != 0)
          for (int c = 0; c < r; ++c) v[c] -= f * l[c];
        v = canonical_ray(v);
      }
      if (sign_of(l[i]) < 0)
        for (Rat& c : l) c = -c;
      rays.push_back(canonical_ray(l));
      processed.push_back(i);
      continue;
    }

    std::vector<std::vector<Rat>> plus, zero, minus;
    for (auto& v : rays) {
      int s = sign_of(v[i]);
      (s > 0 ? plus : s == 0 ? zero : minus).push_back(std::move(v));
    }
    std::vector<std::vector<Rat>> next = zero;
    for (const auto& p : plus) next.push_back(p);
    for (const auto& p : plus)
      for (const auto& m : minus)
        if (adjacent(p, m)) next.push_back(canonical_ray(scaled_combination(p[i], m, m[i], p)));
    rays = std::move(next);
    processed.push_back(i);
  }
  if (!lin.empty()) throw std::logic_error("lineality survived the halfspace sweep");

  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

  ConeData cone;
  cone.M = RatMat(r, static_cast<int>(rays.size()));
  for (size_t c = 0; c < rays.size(); ++c)
    for (int i = 0; i < r; ++i) {
      if (sign_of(rays[c][i]) < 0) throw std::logic_error("negative ray coordinate");
      cone.M(i, static_cast<int>(c)) = rays[c][i];
    }
  for (int c = 0; c < cone.M.cols(); ++c) {
    auto col = cone.M.col(c);
    auto residual = nr * col;
    for (const Rat& v : residual)
      if (v != 0) throw std::logic_error("ray escapes the flux kernel");
  }

  cone.degenerate = false;
  if (r > 0) {
    if (rays.empty()) cone.degenerate = true;
    for (int i = 0; i < r && !cone.degenerate; ++i) {
      bool all_zero = true;
      for (int c = 0; c < cone.M.cols() && all_zero; ++c) all_zero = (cone.M(i, c) == 0);
      if (all_zero) cone.degenerate = true;
    }
  }
  return cone;
}

std::vector<Rat> reconstruct_rates(const NetworkMatrices& mats, const std::vector<Rat>& x,
                                   const std::vector<Rat>& lambda, const ConeData& cone) {
  if (static_cast<int>(lambda.size()) != cone.M.cols())
    throw std::invalid_argument("lambda length does not match the ray count");
  for (const Rat& l : lambda)
    if (sign_of(l) < 0) throw std::invalid_argument("lambda must be non-negative");

  std::vector<Rat> flux = cone.M * lambda;
  for (size_t j = 0; j < flux.size(); ++j)
    if (flux[j] == 0)
      throw std::invalid_argument("flux combination vanishes at reaction " +
                                  std::to_string(j + 1));

  std::vector<Rat> phi = eval_monomials(mats.educt.transposed(), x);
  std::vector<Rat> k(flux.size());
  for (size_t j = 0; j < flux.size(); ++j) k[j] = flux[j] / phi[j];
  return k;
}

std::vector<SignedCell> enumerate_cells(const IntMat& a) {
  const int w = a.rows(), s = a.cols();
  if (rank_of(a) > 8)
    throw std::invalid_argument(
        "the exponent lattice has rank above 8; the orthant enumeration would be too large");

  std::vector<SignedCell> cells{{SignPattern{}, std::vector<Rat>(w, Rat(0))}};
  for (int i = 0; i < s; ++i) {
    std::vector<SignedCell> next;
    for (const auto& cell : cells) {
      Rat val(0);
      for (int kk = 0; kk < w; ++kk) val += Rat(a(kk, i)) * cell.tau[kk];
      int own = sign_of(val);

      for (int cand : {-1, 0, 1}) {
        SignPattern ext = cell.omega;
        ext.push_back(static_cast<Sgn>(cand));
        if (cand == own) {
          next.push_back({std::move(ext), cell.tau});
          continue;
        }

        // Exact feasibility of the extended cell: zero signs are equalities,
        // strict signs get unit margin (lossless on a cone).
        std::vector<std::vector<Rat>> eq, ge;
        for (int j = 0; j <= i; ++j) {
          int sj = j < i ? static_cast<int>(ext[j]) : cand;
          std::vector<Rat> row(w);
          for (int kk = 0; kk < w; ++kk) row[kk] = Rat(a(kk, j)) * (sj < 0 ? -1 : 1);
          if (sj == 0)
            eq.push_back(std::move(row));
          else
            ge.push_back(std::move(row));
        }
        RatMat aeq(static_cast<int>(eq.size()), w), age(static_cast<int>(ge.size()), w);
        for (size_t ri = 0; ri < eq.size(); ++ri)
          for (int c = 0; c < w; ++c) aeq(static_cast<int>(ri), c) = eq[ri][c];
        for (size_t ri = 0; ri < ge.size(); ++ri)
          for (int c = 0; c < w; ++c) age(static_cast<int>(ri), c) = ge[ri][c];
        std::vector<Rat> beq(eq.size(), Rat(0)), bge(ge.size(), Rat(1));
        auto sol = feasible_point(aeq, beq, age, bge);
        if (sol) next.push_back({std::move(ext), *sol});
      }
    }
    cells = std::move(next);
  }
  return cells;
}

std::vector<SignPattern> sign_vectors_of_image(const IntMat& a, bool include_zero) {
  std::vector<SignPattern> out;
  for (auto& cell : enumerate_cells(a)) {
    if (!include_zero) {
      bool all_zero = true;
      for (Sgn s : cell.omega)
        if (s != Sgn::zero) {
          all_zero = false;
          break;
        }
      if (all_zero) continue;
    }
    out.push_back(std::move(cell.omega));
  }
  return out;
}

namespace {

int zero_count(const SignPattern& p) {
  int z = 0;
  for (Sgn s : p)
    if (s == Sgn::zero) ++z;
  return z;
}

}  // namespace

std::optional<MultistatWitness> find_witness(const NetworkMatrices& mats, const IntMat& a,
                                             const IntMat& z, const ConeData& cone) {
  if (cone.degenerate)
    throw std::invalid_argument(
        "the flux cone has a vanishing coordinate, so the system has no positive steady state");

  auto cells = enumerate_cells(a);
  std::sort(cells.begin(), cells.end(), [](const SignedCell& l, const SignedCell& r) {
    int zl = zero_count(l.omega), zr = zero_count(r.omega);
    if (zl != zr) return zl < zr;
    return l.omega < r.omega;
  });

  RatMat zt = to_rational(z.transposed());
  const int s = a.cols();

  for (const auto& cell : cells) {
    if (zero_count(cell.omega) == s) continue;
    auto sigma = lp_feasible(zt, cell.omega);
    if (!sigma) continue;

    MultistatWitness w;
    w.omega = cell.omega;
    w.sigma = *sigma;
    w.alpha.resize(s);
    for (int i = 0; i < s; ++i) {
      Rat v(0);
      for (int kk = 0; kk < a.rows(); ++kk) v += Rat(a(kk, i)) * cell.tau[kk];
      w.alpha[i] = v;
    }

    w.x1.resize(s);
    w.x2.resize(s);
    for (int i = 0; i < s; ++i) {
      double ai = mpq_get_d(w.alpha[i].get_mpq_t());
      if (w.omega[i] == Sgn::zero) {
        w.x1[i] = 1.0;
        w.x2[i] = 1.0;
      } else {
        double si = mpq_get_d(w.sigma[i].get_mpq_t());
        w.x1[i] = si / std::expm1(ai);
        w.x2[i] = std::exp(ai) * w.x1[i];
      }
    }

    w.lambda.assign(cone.M.cols(), Rat(1));
    std::vector<Rat> flux = cone.M * w.lambda;
    std::vector<double> phi = eval_monomials(mats.educt.transposed(), w.x1);
    w.k.resize(flux.size());
    for (size_t j = 0; j < flux.size(); ++j)
      w.k[j] = mpq_get_d(flux[j].get_mpq_t()) / phi[j];
    return w;
  }
  return std::nullopt;
}

namespace {

double steady_state_residual(const NetworkMatrices& mats, const std::vector<double>& k,
                             const std::vector<double>& x) {
  std::vector<double> phi = eval_monomials(mats.educt.transposed(), x);
  double worst = 0.0;
  for (int i = 0; i < mats.N.rows(); ++i) {
    double val = 0.0, scale = 0.0;
    for (int j = 0; j < mats.N.cols(); ++j) {
      double nij = mpz_get_d(mats.N(i, j).get_mpz_t());
      if (nij == 0.0) continue;
      double term = nij * k[j] * phi[j];
      val += term;
      scale += std::fabs(term);
    }
    if (scale > 0.0) worst = std::max(worst, std::fabs(val) / scale);
  }
  return worst;
}

}  // namespace

WitnessChecks verify_witness(const NetworkMatrices& mats, const MultistatWitness& w,
                             const IntMat& z, double tol) {
  WitnessChecks c;
  const int s = static_cast<int>(w.x1.size());

  c.residual1 = steady_state_residual(mats, w.k, w.x1);
  c.residual2 = steady_state_residual(mats, w.k, w.x2);
  c.residuals_ok = c.residual1 <= tol && c.residual2 <= tol;

  c.conservation_ok = true;
  for (int q = 0; q < z.cols(); ++q) {
    Rat acc(0);
    for (int i = 0; i < s; ++i) acc += Rat(z(i, q)) * w.sigma[i];
    if (acc != 0) c.conservation_ok = false;
  }

  c.consistency_ok = true;
  for (int i = 0; i < s; ++i) {
    double scale = std::max({1.0, std::fabs(w.x1[i]), std::fabs(w.x2[i])});
    double si = mpq_get_d(w.sigma[i].get_mpq_t());
    if (std::fabs(w.x2[i] - w.x1[i] - si) > 1e-12 * scale) c.consistency_ok = false;
    double ai = mpq_get_d(w.alpha[i].get_mpq_t());
    if (std::fabs(w.x2[i] - std::exp(ai) * w.x1[i]) > 1e-12 * scale) c.consistency_ok = false;
  }

  c.positive_ok = true;
  for (int i = 0; i < s; ++i)
    if (!(w.x1[i] > 0.0) || !(w.x2[i] > 0.0)) c.positive_ok = false;
  for (double kj : w.k)
    if (!(kj > 0.0)) c.positive_ok = false;

  c.distinct_ok = false;
  for (int i = 0; i < s; ++i)
    if (std::fabs(w.x2[i] - w.x1[i]) > 1e-12 * std::max(std::fabs(w.x1[i]), std::fabs(w.x2[i])))
      c.distinct_ok = true;

  c.signs_ok = true;
  for (int i = 0; i < s; ++i) {
    int sa = sign_of(w.alpha[i]), ss = sign_of(w.sigma[i]);
    if (sa != ss || sa != static_cast<int>(w.omega[i])) c.signs_ok = false;
  }

  c.pass = c.residuals_ok && c.conservation_ok && c.consistency_ok && c.positive_ok &&
           c.distinct_ok && c.signs_ok;
  return c;
}

}  // namespace crn

#include "crn/toric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "crn/linalg.hpp"

namespace crn {

namespace {

long to_long(const Int& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) throw std::overflow_error("exponent out of range");
  return mpz_get_si(v.get_mpz_t());
}

std::string index_list(const std::vector<int>& idx) {
  std::ostringstream os;
  os << "{";
  for (size_t p = 0; p < idx.size(); ++p) os << (p ? "," : "") << idx[p] + 1;
  os << "}";
  return os.str();
}

RatMat rows_subset(const RatMat& k, const std::vector<int>& rows) {
  RatMat out(static_cast<int>(rows.size()), k.cols());
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < k.cols(); ++j) out(static_cast<int>(i), j) = k(rows[i], j);
  return out;
}

}  // namespace

CertOutcome find_certificate(const RatMat& sigma, const IntMat& exponents) {
  if (sigma.cols() != exponents.rows())
    throw std::invalid_argument("monomial list does not match the coefficient matrix");
  const int m = sigma.cols();
  CertOutcome out;

  auto basis_cols = kernel_basis(sigma);
  const int d = static_cast<int>(basis_cols.size());
  RatMat k(m, d);
  for (int c = 0; c < d; ++c)
    for (int i = 0; i < m; ++i) k(i, c) = basis_cols[c][i];

  if (m == 0) {
    out.cert = ToricCertificate{exponents, {}, {}, 0};
    return out;
  }

  // A coordinate on which every kernel vector vanishes can belong to no block.
  for (int i = 0; i < m; ++i) {
    bool zero = true;
    for (int c = 0; c < d && zero; ++c) zero = (k(i, c) == 0);
    if (zero) {
      CertFailure f;
      f.kind = CertFailure::Kind::zero_coordinate;
      f.coordinate = i;
      f.message = "every kernel vector vanishes at monomial " + std::to_string(i + 1);
      out.failure = f;
      return out;
    }
  }

  // Coordinates i, i' are forced into one block exactly when the rows i, i'
  // of the kernel-basis matrix are parallel; grouping by the row normalized
  // to leading entry 1 realizes that equivalence.
  std::map<std::vector<Rat>, std::vector<int>> classes;
  for (int i = 0; i < m; ++i) {
    std::vector<Rat> row = k.row(i);
    Rat lead;
    for (const Rat& v : row)
      if (v != 0) {
        lead = v;
        break;
      }
    for (Rat& v : row) v /= lead;
    classes[row].push_back(i);
  }

  std::vector<std::vector<int>> blocks;
  for (auto& [key, members] : classes) blocks.push_back(members);
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });

  ToricCertificate cert;
  cert.exponents = exponents;
  cert.dim_kernel = d;
  for (const auto& block : blocks) {
    std::vector<int> outside;
    std::vector<bool> in_block(m, false);
    for (int i : block) in_block[i] = true;
    for (int i = 0; i < m; ++i)
      if (!in_block[i]) outside.push_back(i);

    RatMat constraint = rows_subset(k, outside);
    int dim = d - rank_of(constraint);
    if (dim != 1) {
      CertFailure f;
      f.kind = CertFailure::Kind::block_dimension;
      f.block = block;
      f.block_dim = dim;
      f.message = "kernel restricted to block " + index_list(block) + " has dimension " +
                  std::to_string(dim);
      out.failure = f;
      return out;
    }

    auto span = kernel_basis(constraint);
    if (span.size() != 1) throw std::logic_error("restricted kernel span mismatch");
    std::vector<Rat> v = k * span[0];
    for (int i = 0; i < m; ++i)
      if (in_block[i] != (v[i] != 0)) throw std::logic_error("block support mismatch");

    std::vector<Int> prim = primitive_integer(v);
    if (sign_of(prim[block[0]]) < 0)
      for (Int& e : prim) e = -e;
    std::vector<Rat> b(m);
    for (int i = 0; i < m; ++i) b[i] = Rat(prim[i]);

    auto res = sigma * b;
    for (const Rat& r : res)
      if (r != 0) throw std::logic_error("certificate vector is not in the kernel");

    cert.blocks.push_back(block);
    cert.basis.push_back(std::move(b));
  }

  if (static_cast<int>(cert.blocks.size()) != d) throw std::logic_error("block count mismatch");
  out.cert = std::move(cert);
  return out;
}

bool check_condition2(const ToricCertificate& cert) {
  for (size_t j = 0; j < cert.blocks.size(); ++j) {
    int ref = sign_of(cert.basis[j][cert.blocks[j][0]]);
    for (int i : cert.blocks[j])
      if (sign_of(cert.basis[j][i]) != ref) return false;
  }
  return true;
}

bool check_condition2_determinant(const ToricCertificate& cert, const RatMat& sigma) {
  for (const auto& block : cert.blocks) {
    const int l = static_cast<int>(block.size());
    if (l < 2) continue;

    // Pick l-1 rows of sigma restricted to the block that reach full rank.
    RatMat restricted(sigma.rows(), l);
    for (int i = 0; i < sigma.rows(); ++i)
      for (int c = 0; c < l; ++c) restricted(i, c) = sigma(i, block[c]);

    std::vector<int> picked;
    for (int i = 0; i < sigma.rows() && static_cast<int>(picked.size()) < l - 1; ++i) {
      picked.push_back(i);
      if (rank_of(rows_subset(restricted, picked)) != static_cast<int>(picked.size()))
        picked.pop_back();
    }
    if (static_cast<int>(picked.size()) != l - 1)
      throw std::logic_error("block submatrix does not reach full rank");
    RatMat sub = rows_subset(restricted, picked);

    // The vector of signed maximal minors spans the kernel of sub, so the
    // block's kernel line keeps one sign exactly when the minors alternate.
    int prev = 0;
    for (int drop = 0; drop < l; ++drop) {
      RatMat minor(l - 1, l - 1);
      for (int i = 0; i < l - 1; ++i) {
        int cc = 0;
        for (int c = 0; c < l; ++c) {
          if (c == drop) continue;
          minor(i, cc++) = sub(i, c);
        }
      }
      int s = sign_of(det_bareiss(minor));
      if (s == 0) throw std::logic_error("vanishing maximal minor on a certified block");
      if (drop > 0 && s != -prev) return false;
      prev = s;
    }
  }
  return true;
}

std::vector<Binomial> binomial_generators(const ToricCertificate& cert) {
  std::vector<Binomial> gens;
  for (size_t j = 0; j < cert.blocks.size(); ++j) {
    const auto& block = cert.blocks[j];
    for (size_t q = 1; q < block.size(); ++q) {
      Binomial g;
      g.i1 = block[0];
      g.i2 = block[q];
      g.c1 = cert.basis[j][g.i1];
      g.c2 = cert.basis[j][g.i2];
      g.e1 = cert.exponents.row(g.i2);
      g.e2 = cert.exponents.row(g.i1);
      g.block = static_cast<int>(j);
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

ConditionThreeData build_condition3(const ToricCertificate& cert) {
  if (!check_condition2(cert))
    throw std::invalid_argument("condition 2 must hold before condition 3 data can be built");
  auto gens = binomial_generators(cert);
  const int s = cert.exponents.cols();
  const int p = static_cast<int>(gens.size());

  ConditionThreeData data;
  data.delta = IntMat(s, p);
  data.theta.resize(p);
  for (int c = 0; c < p; ++c) {
    for (int i = 0; i < s; ++i)
      data.delta(i, c) = cert.exponents(gens[c].i1, i) - cert.exponents(gens[c].i2, i);
    data.theta[c] = gens[c].c1 / gens[c].c2;
  }
  data.relations = integer_kernel(data.delta);
  return data;
}

bool check_condition3(const ConditionThreeData& data) {
  for (int c = 0; c < data.relations.cols(); ++c) {
    Rat prod(1);
    for (int p = 0; p < data.relations.rows(); ++p) {
      const Int& e = data.relations(p, c);
      if (e != 0) prod *= pow_rat(data.theta[p], to_long(e));
    }
    if (prod != 1) return false;
  }
  return true;
}

namespace {

// Least squares on log coordinates: minimizes |dt*L - g| and exponentiates.
std::vector<double> log_linear_point(const IntMat& dt, const std::vector<double>& g) {
  const int p = dt.rows(), s = dt.cols();
  std::vector<std::vector<double>> gm(s, std::vector<double>(s + 1, 0.0));
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j)
      for (int r = 0; r < p; ++r)
        gm[i][j] += mpz_get_d(dt(r, i).get_mpz_t()) * mpz_get_d(dt(r, j).get_mpz_t());
    for (int r = 0; r < p; ++r) gm[i][s] += mpz_get_d(dt(r, i).get_mpz_t()) * g[r];
  }

  std::vector<int> pivot_of_col(s, -1);
  int row = 0;
  for (int col = 0; col < s && row < s; ++col) {
    int best = row;
    for (int i = row + 1; i < s; ++i)
      if (std::fabs(gm[i][col]) > std::fabs(gm[best][col])) best = i;
    if (std::fabs(gm[best][col]) < 1e-12) continue;
    std::swap(gm[row], gm[best]);
    for (int i = 0; i < s; ++i) {
      if (i == row) continue;
      double f = gm[i][col] / gm[row][col];
      if (f == 0.0) continue;
      for (int j = col; j <= s; ++j) gm[i][j] -= f * gm[row][j];
    }
    pivot_of_col[col] = row++;
  }

  std::vector<double> x(s);
  for (int i = 0; i < s; ++i) {
    double li = pivot_of_col[i] < 0 ? 0.0 : gm[pivot_of_col[i]][s] / gm[pivot_of_col[i]][i];
    x[i] = std::exp(li);
  }
  return x;
}

double binomial_residual(const std::vector<Binomial>& gens, const std::vector<double>& x) {
  double worst = 0.0;
  for (const auto& g : gens) {
    double t1 = mpq_get_d(g.c1.get_mpq_t()), t2 = mpq_get_d(g.c2.get_mpq_t());
    for (size_t i = 0; i < x.size(); ++i) {
      long e1 = to_long(g.e1[i]), e2 = to_long(g.e2[i]);
      if (e1) t1 *= std::pow(x[i], static_cast<double>(e1));
      if (e2) t2 *= std::pow(x[i], static_cast<double>(e2));
    }
    double scale = std::max({std::fabs(t1), std::fabs(t2), 1e-300});
    worst = std::max(worst, std::fabs(t1 - t2) / scale);
  }
  return worst;
}

}  // namespace

Parametrization build_parametrization(const ToricCertificate& cert,
                                      const ConditionThreeData& data) {
  const int s = cert.exponents.cols();
  Parametrization par;
  par.A = integer_complement(data.delta);
  if (par.A.rows() + rank_of(data.delta) != s)
    throw std::logic_error("complement dimension mismatch");

  IntMat dt = data.delta.transposed();
  const int p = dt.rows();
  IntMat h, u;
  int rank = hnf_rows_transform(dt, h, u);

  // The same unimodular row operations act multiplicatively on the right hand
  // side: row i of the reduced system demands x^{h_i} = rhs_i.
  std::vector<Rat> rhs(p, Rat(1));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      const Int& e = u(i, j);
      if (e != 0) rhs[i] *= pow_rat(data.theta[j], to_long(e));
    }
  for (int i = rank; i < p; ++i)
    if (rhs[i] != 1) throw std::invalid_argument("multiplicative system is inconsistent");

  bool exact = true;
  std::vector<Rat> x(s, Rat(1));
  for (int i = rank - 1; i >= 0 && exact; --i) {
    int c = 0;
    while (c < s && h(i, c) == 0) ++c;
    Rat v = rhs[i];
    for (int j = c + 1; j < s; ++j) {
      const Int& e = h(i, j);
      if (e != 0) v /= pow_rat(x[j], to_long(e));
    }
    if (h(i, c) == 1) {
      x[c] = v;
    } else {
      auto root = rat_root(v, mpz_get_ui(h(i, c).get_mpz_t()));
      if (root)
        x[c] = *root;
      else
        exact = false;
    }
  }

  auto gens = binomial_generators(cert);
  if (exact) {
    par.exact = true;
    par.x_exact = x;
    par.x_approx.resize(s);
    for (int i = 0; i < s; ++i) par.x_approx[i] = mpq_get_d(x[i].get_mpq_t());
  } else {
    std::vector<double> g(p);
    for (int i = 0; i < p; ++i) g[i] = std::log(mpq_get_d(data.theta[i].get_mpq_t()));
    par.x_approx = log_linear_point(data.delta.transposed(), g);
  }
  par.residual = binomial_residual(gens, par.x_approx);
  return par;
}

std::vector<Rat> eval_parametrization(const Parametrization& par, const std::vector<Rat>& t) {
  if (!par.exact) throw std::invalid_argument("parametrization has no exact base point");
  if (static_cast<int>(t.size()) != par.A.rows())
    throw std::invalid_argument("parameter count does not match");
  for (const Rat& v : t)
    if (sign_of(v) <= 0) throw std::invalid_argument("parameters must be positive");

  const int s = par.A.cols();
  std::vector<Rat> x(s);
  for (int i = 0; i < s; ++i) {
    Rat v = par.x_exact[i];
    for (int k = 0; k < par.A.rows(); ++k) {
      const Int& e = par.A(k, i);
      if (e != 0) v *= pow_rat(t[k], to_long(e));
    }
    x[i] = v;
  }
  return x;
}

void enlarge_system(RatMat& sigma, IntMat& exponents, const std::vector<Enlargement>& mult) {
  const int s = sigma.rows(), m0 = sigma.cols(), sp = exponents.cols();
  for (const auto& e : mult) {
    if (static_cast<int>(e.alpha.size()) != sp)
      throw std::invalid_argument("multiplier length does not match the species count");
    if (e.equation < 0 || e.equation >= s) throw std::invalid_argument("equation index out of range");
    for (const Int& a : e.alpha)
      if (a < 0) throw std::invalid_argument("multiplier exponents must be non-negative");
  }

  std::map<std::vector<Int>, int> index;
  std::vector<std::vector<Int>> monos;
  for (int j = 0; j < m0; ++j) {
    monos.push_back(exponents.row(j));
    index[monos.back()] = j;
  }

  std::vector<std::map<int, Rat>> extra_rows;
  for (const auto& e : mult) {
    std::map<int, Rat> row;
    for (int j = 0; j < m0; ++j) {
      const Rat& coeff = sigma(e.equation, j);
      if (coeff == 0) continue;
      std::vector<Int> target = exponents.row(j);
      for (int i = 0; i < sp; ++i) target[i] += e.alpha[i];
      auto it = index.find(target);
      int col;
      if (it == index.end()) {
        col = static_cast<int>(monos.size());
        index[target] = col;
        monos.push_back(target);
      } else {
        col = it->second;
      }
      row[col] += coeff;
    }
    extra_rows.push_back(std::move(row));
  }

  const int m1 = static_cast<int>(monos.size());
  RatMat out(s + static_cast<int>(mult.size()), m1);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < m0; ++j) out(i, j) = sigma(i, j);
  for (size_t t = 0; t < extra_rows.size(); ++t)
    for (const auto& [col, val] : extra_rows[t]) out(s + static_cast<int>(t), col) = val;

  IntMat exps(m1, sp);
  for (int j = 0; j < m1; ++j)
    for (int i = 0; i < sp; ++i) exps(j, i) = monos[j][i];

  sigma = std::move(out);
  exponents = std::move(exps);
}

namespace {

void monomials_of_degree(int nvars, int degree, int start, std::vector<Int>& cur,
                         std::vector<std::vector<Int>>& out) {
  if (degree == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < nvars; ++i) {
    cur[i] += 1;
    monomials_of_degree(nvars, degree - 1, i, cur, out);
    cur[i] -= 1;
  }
}

void record_post_certificate(ToricAnalysis& out) {
  const ToricCertificate& cert = *out.outcome.cert;
  out.cond1 = true;
  out.binomials = binomial_generators(cert);
  out.cond2 = check_condition2(cert);
  if (!out.cond2) {
    for (size_t i = 0; i < out.binomials.size(); ++i)
      if (sign_of(out.binomials[i].c1) != sign_of(out.binomials[i].c2)) {
        out.mixed_sign_binomial = static_cast<int>(i);
        break;
      }
    out.failed_stage = "condition 2";
    return;
  }
  out.cond3_data = build_condition3(cert);
  out.cond3 = check_condition3(*out.cond3_data);
  if (!out.cond3) {
    out.failed_stage = "condition 3";
    return;
  }
  out.par = build_parametrization(cert, *out.cond3_data);
}

}  // namespace

ToricAnalysis toric_analyze(const NetworkMatrices& mats, int search_bound,
                            const std::vector<Enlargement>& explicit_multipliers) {
  ToricAnalysis out;
  out.sigma = mats.Sigma;
  out.exponents = mats.Y;
  if (!explicit_multipliers.empty()) {
    enlarge_system(out.sigma, out.exponents, explicit_multipliers);
    out.multipliers = explicit_multipliers;
  }
  out.outcome = find_certificate(out.sigma, out.exponents);

  if (!out.outcome.cert && explicit_multipliers.empty() && search_bound >= 1) {
    const int s = mats.Sigma.rows(), sp = mats.Y.cols();
    long attempts = 0;
    const long attempt_cap = 200000;
    for (int degree = 1; degree <= search_bound && !out.outcome.cert; ++degree) {
      std::vector<std::vector<Int>> alphas;
      std::vector<Int> cur(sp, Int(0));
      monomials_of_degree(sp, degree, 0, cur, alphas);
      for (const auto& alpha : alphas) {
        for (int size = 1; size <= s && !out.outcome.cert; ++size) {
          std::vector<int> choice(size);
          for (int i = 0; i < size; ++i) choice[i] = i;
          while (true) {
            if (++attempts > attempt_cap) break;
            std::vector<Enlargement> mult;
            for (int i : choice) mult.push_back(Enlargement{alpha, i});
            RatMat sg = mats.Sigma;
            IntMat ex = mats.Y;
            enlarge_system(sg, ex, mult);
            auto oc = find_certificate(sg, ex);
            if (oc.cert) {
              out.sigma = std::move(sg);
              out.exponents = std::move(ex);
              out.multipliers = std::move(mult);
              out.outcome = std::move(oc);
              break;
            }
            // next size-combination in lexicographic order
            int pos = size - 1;
            while (pos >= 0 && choice[pos] == s - size + pos) --pos;
            if (pos < 0) break;
            ++choice[pos];
            for (int i = pos + 1; i < size; ++i) choice[i] = choice[i - 1] + 1;
          }
          if (attempts > attempt_cap) break;
        }
        if (out.outcome.cert || attempts > attempt_cap) break;
      }
      if (attempts > attempt_cap) break;
    }
  }

  if (!out.outcome.cert) {
    out.failed_stage = "condition 1";
    return out;
  }
  record_post_certificate(out);
  return out;
}

}  // namespace crn

#include "crn/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace crn {

RrefResult rref(const RatMat& m) {
  RrefResult out{m, {}, 0};
  RatMat& a = out.reduced;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rat inv = 1 / a(r, c);
    for (int j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (int j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

int rank_of(const RatMat& m) { return rref(m).rank; }
int rank_of(const IntMat& m) { return rref(to_rational(m)).rank; }

std::vector<std::vector<Rat>> kernel_basis(const RatMat& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[f] = 1;
    for (int i = 0; i < rr.rank; ++i) v[rr.pivot_cols[i]] = -rr.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Int det_bareiss(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_bareiss: matrix not square");
  int n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

Rat det_bareiss(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_bareiss: matrix not square");
  int n = m.rows();
  if (n == 0) return Rat(1);
  IntMat a(n, n);
  Rat scale(1);
  for (int i = 0; i < n; ++i) {
    Int l(1);
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < n; ++j) {
      Rat v = m(i, j) * Rat(l);
      a(i, j) = v.get_num();
    }
    scale *= Rat(l);
  }
  return Rat(det_bareiss(a)) / scale;
}

namespace {

// Row HNF in place: returns the row rank. When u is non-null it accumulates
// the same row operations starting from the identity, so u*input == reduced.
int hnf_rows_inplace(IntMat& a, IntMat* u) {
  int rows = a.rows(), cols = a.cols();
  auto row_swap = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
    if (u)
      for (int c = 0; c < u->cols(); ++c) std::swap((*u)(i, c), (*u)(j, c));
  };
  auto row_axpy = [&](int i, const Int& q, int j) {  // row_i -= q * row_j
    if (q == 0) return;
    for (int c = 0; c < cols; ++c) a(i, c) -= q * a(j, c);
    if (u)
      for (int c = 0; c < u->cols(); ++c) (*u)(i, c) -= q * (*u)(j, c);
  };
  auto row_negate = [&](int i) {
    for (int c = 0; c < cols; ++c) a(i, c) = -a(i, c);
    if (u)
      for (int c = 0; c < u->cols(); ++c) (*u)(i, c) = -(*u)(i, c);
  };

  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Euclid on the column entries below r until one nonzero entry remains.
    while (true) {
      int best = -1;
      for (int i = r; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        if (best < 0 || mpz_cmpabs(a(i, c).get_mpz_t(), a(best, c).get_mpz_t()) < 0) best = i;
      }
      if (best < 0) break;
      row_swap(r, best);
      bool done = true;
      for (int i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        row_axpy(i, q, r);
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) row_negate(r);
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
      row_axpy(i, q, r);
    }
    ++r;
  }
  return r;
}

}  // namespace

IntMat hnf_rows(const IntMat& m) {
  IntMat a = m;
  int r = hnf_rows_inplace(a, nullptr);
  IntMat h(r, m.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols(); ++j) h(i, j) = a(i, j);
  return h;
}

int hnf_rows_transform(const IntMat& m, IntMat& h, IntMat& u) {
  h = m;
  u = IntMat::identity(m.rows());
  return hnf_rows_inplace(h, &u);
}

IntMat integer_kernel(const IntMat& m) {
  // Reduce m^t with a tracked unimodular transform; transform rows matching
  // zero rows of the echelon form span the saturated kernel lattice.
  int n = m.cols();
  IntMat a = m.transposed();
  IntMat u = IntMat::identity(n);
  int r = hnf_rows_inplace(a, &u);
  IntMat gens(n - r, n);
  for (int i = r; i < n; ++i)
    for (int j = 0; j < n; ++j) gens(i - r, j) = u(i, j);
  IntMat h = hnf_rows(gens);
  return h.transposed();
}

IntMat integer_kernel(const RatMat& m) {
  IntMat a(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    Int l(1);
    for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < m.cols(); ++j) {
      Rat v = m(i, j) * Rat(l);
      a(i, j) = v.get_num();
    }
  }
  return integer_kernel(a);
}

IntMat integer_complement(const IntMat& v) {
  return integer_kernel(v.transposed()).transposed();
}

std::vector<Int> primitive_integer(const std::vector<Rat>& v) {
  Int l(1);
  for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Int> w(v.size());
  Int g(0);
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(l);
    w[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
  }
  if (g > 1)
    for (Int& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return w;
}

}  // namespace crn

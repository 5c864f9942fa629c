#include "crn/phospho.hpp"

#include <stdexcept>

#include "crn/linalg.hpp"

namespace crn {

namespace {

std::string num(const std::string& stem, int i) { return stem + std::to_string(i); }

}  // namespace

std::vector<std::string> phospho_rate_names(int n) {
  std::vector<std::string> names;
  for (int j = 0; j < n; ++j) {
    names.push_back(num("kon", j));
    names.push_back(num("koff", j));
    names.push_back(num("kcat", j));
  }
  for (int j = 0; j < n; ++j) {
    names.push_back(num("lon", j));
    names.push_back(num("loff", j));
    names.push_back(num("lcat", j));
  }
  return names;
}

RateAssignment phospho_unit_rates(int n) {
  RateAssignment r;
  for (const auto& name : phospho_rate_names(n)) r[name] = Rat(1);
  return r;
}

ReactionNetwork phospho_network(int n) {
  if (n < 1) throw std::invalid_argument("site count must be at least 1");

  ReactionNetwork net;
  for (int j = 0; j <= n; ++j) net.species.push_back(num("S", j));
  for (int j = 0; j < n; ++j) net.species.push_back(num("ES", j));
  for (int j = 1; j <= n; ++j) net.species.push_back(num("FS", j));
  net.species.push_back("E");
  net.species.push_back("F");
  const int s = 3 * n + 3;
  const int sE = 3 * n + 1, sF = 3 * n + 2;

  auto complex_of = [&](std::initializer_list<int> species_idx) {
    std::vector<int> c(s, 0);
    for (int i : species_idx) c[i] += 1;
    return c;
  };
  // 1..n+1: S{j}+E; n+2..2n+1: ES{j}; 2n+2..3n+2: S{j}+F; 3n+3..4n+2: FS{j}.
  for (int j = 0; j <= n; ++j) net.complexes.push_back(complex_of({j, sE}));
  for (int j = 0; j < n; ++j) net.complexes.push_back(complex_of({n + 1 + j}));
  for (int j = 0; j <= n; ++j) net.complexes.push_back(complex_of({j, sF}));
  for (int j = 1; j <= n; ++j) net.complexes.push_back(complex_of({2 * n + j}));

  for (int j = 0; j < n; ++j) {
    net.reactions.push_back({j, n + 1 + j, num("kon", j)});
    net.reactions.push_back({n + 1 + j, j, num("koff", j)});
    net.reactions.push_back({n + 1 + j, j + 1, num("kcat", j)});
  }
  for (int j = 1; j <= n; ++j) {
    net.reactions.push_back({2 * n + 1 + j, 3 * n + 1 + j, num("lon", j - 1)});
    net.reactions.push_back({3 * n + 1 + j, 2 * n + 1 + j, num("loff", j - 1)});
    net.reactions.push_back({3 * n + 1 + j, 2 * n + j, num("lcat", j - 1)});
  }

  net.validate();
  return net;
}

PhosphoSystem phospho_system(int n, const RateAssignment& rates) {
  PhosphoSystem sys;
  sys.n = n;
  sys.rates = rates;
  sys.net = phospho_network(n);
  sys.mats = build_matrices(sys.net, rates);
  return sys;
}

SigmaBlocks sigma_blocks(const PhosphoSystem& sys) {
  const int n = sys.n;
  SigmaBlocks b;
  b.full = sys.mats.Sigma;

  for (int i = 1; i <= 3 * n; ++i) b.row_species.push_back(i);
  for (int c = 0; c < 4 * n + 2; ++c)
    if (c != n && c != 2 * n + 1) b.col_complex.push_back(c);

  b.reduced = RatMat(3 * n, 4 * n);
  for (int i = 0; i < 3 * n; ++i)
    for (int c = 0; c < 4 * n; ++c) b.reduced(i, c) = b.full(b.row_species[i], b.col_complex[c]);

  b.square = RatMat(3 * n, 3 * n);
  for (int i = 0; i < 3 * n; ++i)
    for (int c = 0; c < 3 * n; ++c) b.square(i, c) = b.reduced(i, c);
  return b;
}

PhosphoDeterminants determinants(const PhosphoSystem& sys) {
  const int n = sys.n;
  SigmaBlocks blocks = sigma_blocks(sys);

  PhosphoDeterminants dets;
  dets.D = det_bareiss(blocks.square);

  // Reduced-matrix column holding a given 1-based complex index.
  auto col_of = [&](int complex_1based) {
    int c0 = complex_1based - 1;
    for (size_t c = 0; c < blocks.col_complex.size(); ++c)
      if (blocks.col_complex[c] == c0) return static_cast<int>(c);
    throw std::logic_error("complex has no reduced column");
  };

  for (int j = 1; j <= n; ++j) {
    int source = col_of(3 * n + j + 2);
    for (int l : {j, n + j + 1, 2 * n + j + 2}) {
      RatMat m = blocks.square;
      int target = col_of(l);
      for (int i = 0; i < 3 * n; ++i) m(i, target) = blocks.reduced(i, source);
      dets.at[l] = -det_bareiss(m);
    }
  }

  int ref = sign_of(dets.D);
  if (ref == 0) throw std::logic_error("determinant vanishes at positive rates");
  for (const auto& [l, v] : dets.at)
    if (sign_of(v) != ref) throw std::logic_error("determinant family changes sign");
  return dets;
}

CanonicalBasis canonical_certificate(const PhosphoSystem& sys) {
  const int n = sys.n;
  const int m = 4 * n + 2;
  PhosphoDeterminants dets = determinants(sys);

  CanonicalBasis out;
  for (int j = 1; j <= n; ++j)
    out.blocks.push_back({j - 1, n + j, 2 * n + j + 1, 3 * n + j + 1});
  out.blocks.push_back({n});
  out.blocks.push_back({2 * n + 1});

  for (int j = 1; j <= n; ++j) {
    std::vector<Rat> b(m, Rat(0));
    b[j - 1] = dets.at[j];
    b[n + j] = dets.at[n + j + 1];
    b[2 * n + j + 1] = dets.at[2 * n + j + 2];
    b[3 * n + j + 1] = dets.D;
    out.raw.push_back(std::move(b));
  }
  for (int idx : {n, 2 * n + 1}) {
    std::vector<Rat> b(m, Rat(0));
    b[idx] = Rat(1);
    out.raw.push_back(std::move(b));
  }

  out.cert.exponents = sys.mats.Y;
  out.cert.blocks = out.blocks;
  out.cert.dim_kernel = n + 2;
  for (size_t j = 0; j < out.raw.size(); ++j) {
    auto res = sys.mats.Sigma * out.raw[j];
    for (const Rat& r : res)
      if (r != 0) throw std::logic_error("closed-form kernel vector fails");
    std::vector<Int> prim = primitive_integer(out.raw[j]);
    if (sign_of(prim[out.blocks[j][0]]) < 0)
      for (Int& e : prim) e = -e;
    std::vector<Rat> b(m);
    for (int i = 0; i < m; ++i) b[i] = Rat(prim[i]);
    out.cert.basis.push_back(std::move(b));
  }
  return out;
}

bool vanishing_minors_check(const PhosphoSystem& sys, int j) {
  const int n = sys.n;
  if (j < 1 || j > n) throw std::invalid_argument("site index out of range");
  SigmaBlocks blocks = sigma_blocks(sys);

  std::vector<int> cols;  // reduced columns of the block {j, n+j+1, 2n+j+2, 3n+j+2}
  for (int l : {j, n + j + 1, 2 * n + j + 2, 3 * n + j + 2})
    for (size_t c = 0; c < blocks.col_complex.size(); ++c)
      if (blocks.col_complex[c] == l - 1) cols.push_back(static_cast<int>(c));

  for (size_t a = 0; a + 1 < cols.size(); ++a)
    for (size_t b = a + 1; b < cols.size(); ++b) {
      RatMat m(3 * n, 4 * n - 2);
      int cc = 0;
      for (int c = 0; c < 4 * n; ++c) {
        if (c == cols[a] || c == cols[b]) continue;
        for (int i = 0; i < 3 * n; ++i) m(i, cc) = blocks.reduced(i, c);
        ++cc;
      }
      if (rank_of(m) >= 3 * n) return false;
    }
  return true;
}

std::vector<Rat> explicit_steady_state(const PhosphoSystem& sys) {
  const int n = sys.n;
  PhosphoDeterminants dets = determinants(sys);

  std::vector<Rat> x(3 * n + 3, Rat(1));
  Rat s_prev(1);
  for (int j = 1; j <= n; ++j) {
    x[n + j] = dets.at[n + j + 1] / dets.at[j] * s_prev;      // ES{j-1}
    x[2 * n + j] = dets.D / dets.at[j] * s_prev;              // FS{j}
    Rat s_cur = s_prev * dets.at[2 * n + j + 2] / dets.at[j];  // S{j}
    x[j] = s_cur;
    s_prev = s_cur;
  }

  auto res = sys.mats.Sigma * eval_monomials(sys.mats.Y, x);
  for (const Rat& r : res)
    if (r != 0) throw std::logic_error("closed-form steady state fails");
  return x;
}

IntMat phospho_A(int n) {
  IntMat a(3, 3 * n + 3);
  for (int j = 0; j <= n; ++j) {
    a(0, j) = j;
    a(1, j) = 0;
    a(2, j) = 1;
  }
  for (int j = 1; j <= n; ++j) {
    a(0, n + j) = j;      // ES{j-1}
    a(1, n + j) = 1;
    a(2, n + j) = 1;
    a(0, 2 * n + j) = j;  // FS{j}
    a(1, 2 * n + j) = 1;
    a(2, 2 * n + j) = 1;
  }
  a(0, 3 * n + 1) = 1;  // E
  a(1, 3 * n + 1) = 1;
  a(2, 3 * n + 1) = 0;
  a(0, 3 * n + 2) = 0;  // F
  a(1, 3 * n + 2) = 1;
  a(2, 3 * n + 2) = 0;
  return a;
}

std::vector<Rat> phospho_parametrization(const PhosphoSystem& sys, const std::vector<Rat>& t) {
  if (t.size() != 3) throw std::invalid_argument("the map takes three parameters");
  for (const Rat& v : t)
    if (sign_of(v) <= 0) throw std::invalid_argument("parameters must be positive");

  std::vector<Rat> x = explicit_steady_state(sys);
  IntMat a = phospho_A(sys.n);
  for (int i = 0; i < a.cols(); ++i)
    for (int k = 0; k < 3; ++k) {
      long e = mpz_get_si(a(k, i).get_mpz_t());
      if (e) x[i] *= pow_rat(t[k], e);
    }
  return x;
}

namespace {

template <typename T>
std::array<T, 3> totals(int n, const std::vector<T>& x) {
  if (static_cast<int>(x.size()) != 3 * n + 3)
    throw std::invalid_argument("state vector length mismatch");
  T e_tot = x[3 * n + 1], f_tot = x[3 * n + 2], s_tot{};
  for (int j = 1; j <= n; ++j) {
    e_tot += x[n + j];
    f_tot += x[2 * n + j];
  }
  for (int j = 0; j <= n; ++j) s_tot += x[j];
  for (int j = 1; j <= n; ++j) s_tot += x[n + j] + x[2 * n + j];
  return {e_tot, f_tot, s_tot};
}

}  // namespace

std::array<Rat, 3> conservation_values(const PhosphoSystem& sys, const std::vector<Rat>& x) {
  return totals<Rat>(sys.n, x);
}

std::array<double, 3> conservation_values(const PhosphoSystem& sys, const std::vector<double>& x) {
  return totals<double>(sys.n, x);
}

}  // namespace crn

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crn/matrix.hpp"
#include "crn/network.hpp"

namespace crn {

/// Support partition of the monomial index set induced by the kernel of the
/// coefficient matrix, together with the basis it distinguishes: basis[j] is
/// the (up to scale) unique kernel vector supported exactly on blocks[j].
/// Basis vectors are primitive integer with the entry at the block's first
/// index positive.
struct ToricCertificate {
  IntMat exponents;                      // monomial list in force, rows = monomials
  std::vector<std::vector<int>> blocks;  // 0-based, each sorted; ordered by first element
  std::vector<std::vector<Rat>> basis;   // basis[j] supported on blocks[j]
  int dim_kernel = 0;
};

struct CertFailure {
  enum class Kind { zero_coordinate, block_dimension };
  Kind kind;
  int coordinate = -1;     // 0-based; set for zero_coordinate
  std::vector<int> block;  // 0-based; set for block_dimension
  int block_dim = 0;       // dimension of the kernel restricted to the block
  std::string message;
};

/// Exactly one member is set.
struct CertOutcome {
  std::optional<ToricCertificate> cert;
  std::optional<CertFailure> failure;
};

/// One generator c1*x^e1 - c2*x^e2 of the steady-state ideal. i1 is the
/// block's first index, i2 the paired member; c1 is the basis entry at i1
/// while e1 holds the exponents of monomial i2, and symmetrically for the
/// second term.
struct Binomial {
  Rat c1;
  std::vector<Int> e1;
  Rat c2;
  std::vector<Int> e2;
  int i1 = 0, i2 = 0;  // 0-based monomial indices
  int block = 0;
};

struct ConditionThreeData {
  IntMat delta;            // one column per binomial: exponents(i1) - exponents(i2)
  std::vector<Rat> theta;  // basis value at i1 divided by basis value at i2
  IntMat relations;        // integer kernel of delta, columns = relations
};

struct Parametrization {
  IntMat A;                      // rows span the orthogonal complement of the delta columns
  std::vector<Rat> x_exact;      // set iff exact
  std::vector<double> x_approx;  // always set
  bool exact = false;
  double residual = 0.0;  // largest relative binomial residual at x_approx
};

/// One appended equation: x^alpha times the given row of the coefficient
/// matrix.
struct Enlargement {
  std::vector<Int> alpha;  // length = species count
  int equation = 0;        // 0-based row
};

/// Decides whether ker(sigma) admits a basis of disjoint-support vectors
/// partitioning the monomial indices, and returns it in canonical form when
/// it does. Failures carry a witness: either a monomial coordinate on which
/// the whole kernel vanishes, or a block whose restricted kernel is not a
/// line.
CertOutcome find_certificate(const RatMat& sigma, const IntMat& exponents);

/// True iff every basis vector keeps one strict sign on its support.
bool check_condition2(const ToricCertificate& cert);

/// Same truth value as check_condition2, decided through the sign alternation
/// of the maximal minors of a full-row-rank submatrix of sigma restricted to
/// each block.
bool check_condition2_determinant(const ToricCertificate& cert, const RatMat& sigma);

/// Spanning-tree generators: each block's first index paired with every other
/// member. Blocks of size one contribute nothing.
std::vector<Binomial> binomial_generators(const ToricCertificate& cert);

/// Requires check_condition2(cert); the theta entries are then positive.
ConditionThreeData build_condition3(const ToricCertificate& cert);

/// True iff every relation column u satisfies prod_p theta_p^{u_p} = 1.
bool check_condition3(const ConditionThreeData& data);

/// Solves x^{delta_p} = theta_p for a positive point. The exact path runs a
/// Hermite reduction of the exponent lattice and extracts rational roots;
/// when some root is irrational the point is computed in floating point by
/// log-linear least squares and certified through the binomial residuals.
Parametrization build_parametrization(const ToricCertificate& cert, const ConditionThreeData& data);

/// x(t) with x(t)_i = x_exact_i * prod_k t_k^{A(k,i)}; requires par.exact,
/// t positive of length A.rows().
std::vector<Rat> eval_parametrization(const Parametrization& par, const std::vector<Rat>& t);

/// Appends one row per multiplier. Monomials produced by the shift reuse
/// existing columns when the exponent vector already occurs and are appended
/// in first-use order otherwise.
void enlarge_system(RatMat& sigma, IntMat& exponents, const std::vector<Enlargement>& mult);

struct ToricAnalysis {
  RatMat sigma;        // possibly enlarged
  IntMat exponents;    // matching monomial list
  std::vector<Enlargement> multipliers;  // empty when the plain system was used
  CertOutcome outcome;
  bool cond1 = false, cond2 = false, cond3 = false;
  std::vector<Binomial> binomials;
  std::optional<ConditionThreeData> cond3_data;
  std::optional<Parametrization> par;
  // Set when condition 2 fails: index into binomials of a generator whose two
  // coefficients carry opposite signs, so no positive point can satisfy it.
  std::optional<int> mixed_sign_binomial;
  std::string failed_stage;  // "", "condition 1", "condition 2", "condition 3"
};

/// Full pipeline on Sigma and the complex exponents. When the plain system
/// has no certificate, explicit multipliers are applied if given; otherwise
/// an enlargement search tries each monomial x^alpha of total degree up to
/// search_bound against growing equation subsets until a certificate appears.
ToricAnalysis toric_analyze(const NetworkMatrices& mats, int search_bound = 0,
                            const std::vector<Enlargement>& explicit_multipliers = {});

}  // namespace crn

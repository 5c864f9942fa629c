#pragma once

#include <optional>
#include <vector>

#include "crn/lp.hpp"
#include "crn/network.hpp"

namespace crn {

/// Generators of the non-negative flux kernel. Columns of M are the extreme
/// rays (inclusion-minimal supports), scaled to primitive integer vectors and
/// sorted; degenerate means some flux coordinate vanishes on the whole cone,
/// so no strictly positive steady-state flux exists.
struct ConeData {
  RatMat M;  // r x p
  bool degenerate = false;
};

/// Double description over exact rationals: the kernel of n is the lineality
/// start, coordinate halfspaces are added one at a time, and new rays come
/// from adjacent pairs only (rank test).
ConeData extreme_rays(const IntMat& n);

/// k with diag(phi(x))k = M lambda, so that x is a steady state under k.
/// Throws when M lambda has a zero coordinate, naming it.
std::vector<Rat> reconstruct_rates(const NetworkMatrices& mats, const std::vector<Rat>& x,
                                   const std::vector<Rat>& lambda, const ConeData& cone);

/// One face of the hyperplane arrangement of the columns of a (as functionals
/// on the row space): the sign pattern together with an exact interior point
/// of its preimage cone.
struct SignedCell {
  SignPattern omega;
  std::vector<Rat> tau;  // |a_i . tau| >= 1 wherever the sign is nonzero
};

/// All realizable sign vectors of a^t tau, each with a certificate point,
/// by prefix extension: a cell's own sign is inherited for free, the other
/// two candidate signs are settled by exact feasibility problems.
std::vector<SignedCell> enumerate_cells(const IntMat& a);

/// The sign vectors alone. Guard: rank(a) <= 8.
std::vector<SignPattern> sign_vectors_of_image(const IntMat& a, bool include_zero = true);

struct MultistatWitness {
  SignPattern omega;
  std::vector<Rat> alpha;  // exact, in the row space of a, sign pattern omega
  std::vector<Rat> sigma;  // exact, in ker(z^t), sign pattern omega
  std::vector<double> x1, x2;
  std::vector<double> k;
  std::vector<Rat> lambda;
};

/// Searches the nonzero sign vectors (fewest zeros first, lexicographic
/// within) for one realized by both the row space of a and ker(z^t); builds
/// the two-steady-state witness from the first hit. Refuses degenerate cones.
std::optional<MultistatWitness> find_witness(const NetworkMatrices& mats, const IntMat& a,
                                             const IntMat& z, const ConeData& cone);

struct WitnessChecks {
  double residual1 = 0.0, residual2 = 0.0;
  bool residuals_ok = false;    // both steady-state residuals within tol
  bool conservation_ok = false;  // z^t sigma = 0 exactly
  bool consistency_ok = false;   // x2 - x1 tracks sigma, x2 = e^alpha * x1
  bool positive_ok = false;
  bool distinct_ok = false;
  bool signs_ok = false;  // sign(alpha) = sign(sigma) = omega exactly
  bool pass = false;
};

WitnessChecks verify_witness(const NetworkMatrices& mats, const MultistatWitness& w,
                             const IntMat& z, double tol = 1e-9);

}  // namespace crn

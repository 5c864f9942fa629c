#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "crn/network.hpp"
#include "crn/toric.hpp"

namespace crn {

/// Sequential distributive phosphorylation-dephosphorylation of a substrate
/// with n sites: species (S0..Sn, ES0..ES{n-1}, FS1..FSn, E, F), one
/// kinase-bound and one phosphatase-bound intermediate per site.
struct PhosphoSystem {
  int n = 0;
  ReactionNetwork net;
  RateAssignment rates;
  NetworkMatrices mats;
};

/// Rate names in reaction order: kon/koff/kcat per site, then lon/loff/lcat
/// per site.
std::vector<std::string> phospho_rate_names(int n);
RateAssignment phospho_unit_rates(int n);

/// The bare network, without rates.
ReactionNetwork phospho_network(int n);

/// Throws std::invalid_argument for n < 1 or incomplete rates.
PhosphoSystem phospho_system(int n, const RateAssignment& rates);

/// The coefficient matrix and its two distinguished submatrices. The reduced
/// matrix drops the S0 row, the E and F rows, and the columns of the two
/// complexes Sn+E and S0+F; the square block keeps its first 3n columns.
struct SigmaBlocks {
  RatMat full;     // s x m
  RatMat reduced;  // 3n x 4n
  RatMat square;   // 3n x 3n
  std::vector<int> row_species;  // reduced row -> species index (0-based)
  std::vector<int> col_complex;  // reduced col -> complex index (0-based)
};
SigmaBlocks sigma_blocks(const PhosphoSystem& sys);

/// D is the determinant of the square block; the family member at complex
/// index l arises from swapping the column of l for the column of complex
/// 3n+j+2 and negating. All 3n+1 values are nonzero and share one sign.
struct PhosphoDeterminants {
  Rat D;
  std::map<int, Rat> at;  // keyed by 1-based complex index
};
PhosphoDeterminants determinants(const PhosphoSystem& sys);

/// The closed-form kernel basis: per site j the vector carrying the four
/// determinants on the block {j, n+j+1, 2n+j+2, 3n+j+2}, plus the unit
/// vectors of the two complexes that never react.
struct CanonicalBasis {
  std::vector<std::vector<int>> blocks;  // 0-based monomial indices
  std::vector<std::vector<Rat>> raw;     // determinant-valued, unnormalized
  ToricCertificate cert;                 // normalized (primitive, leading entry positive)
};
CanonicalBasis canonical_certificate(const PhosphoSystem& sys);

/// True iff deleting any two block-j columns from the reduced matrix drops
/// its rank below 3n.
bool vanishing_minors_check(const PhosphoSystem& sys, int j);

/// Positive rational steady state with S0 = E = F = 1 and the remaining
/// coordinates given by determinant ratios. Verified exactly before return.
std::vector<Rat> explicit_steady_state(const PhosphoSystem& sys);

/// Exponent matrix of the three-parameter monomial parametrization.
IntMat phospho_A(int n);

/// x(t) = explicit steady state scaled by t^A; exact, and itself a steady
/// state for every positive t.
std::vector<Rat> phospho_parametrization(const PhosphoSystem& sys, const std::vector<Rat>& t);

/// (E_total, F_total, S_total): enzyme totals count their bound forms, the
/// substrate total counts every phosphoform and intermediate.
std::array<Rat, 3> conservation_values(const PhosphoSystem& sys, const std::vector<Rat>& x);
std::array<double, 3> conservation_values(const PhosphoSystem& sys, const std::vector<double>& x);

}  // namespace crn

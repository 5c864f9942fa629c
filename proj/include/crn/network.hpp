#pragma once

#include <map>
#include <string>
#include <vector>

#include "crn/linalg.hpp"
#include "crn/matrix.hpp"

namespace crn {

struct Reaction {
  int educt = 0;    // complex index, 0-based
  int product = 0;  // complex index, 0-based
  std::string rate;
};

struct ReactionNetwork {
  std::vector<std::string> species;
  std::vector<std::vector<int>> complexes;  // exponent vectors, one per complex
  std::vector<Reaction> reactions;

  int num_species() const { return static_cast<int>(species.size()); }
  int num_complexes() const { return static_cast<int>(complexes.size()); }
  int num_reactions() const { return static_cast<int>(reactions.size()); }

  /// Throws std::invalid_argument when a structural invariant is broken:
  /// negative exponents, duplicate complexes, self-loops, unused species,
  /// reused rate names, or out-of-range complex indices.
  void validate() const;

  /// Y as an integer matrix, rows = complexes.
  IntMat exponent_matrix() const;
};

using RateAssignment = std::map<std::string, Rat>;

struct NetworkMatrices {
  IntMat Y;          // m x s, rows are complex exponents
  RatMat A_kappa;    // m x m, off-diagonal rates, zero row sums
  RatMat Sigma;      // s x m, Y^t * A_kappa^t
  IntMat incidence;  // m x r, -1 educt / +1 product
  IntMat N;          // s x r, Y^t * incidence
  IntMat educt;      // s x r, Y^t * doubling
  IntMat doubling;   // m x r, e_{educt(j)} per column
  std::vector<Rat> k;
};

/// Builds every matrix of the mass-action system. Throws when a reaction's
/// rate is missing from the assignment or non-positive, naming the constant.
NetworkMatrices build_matrices(const ReactionNetwork& net, const RateAssignment& rates);

/// Component p is prod_i x_i^{exponents(p, i)}; exponent rows are monomials.
std::vector<Rat> eval_monomials(const IntMat& exponents, const std::vector<Rat>& x);
std::vector<double> eval_monomials(const IntMat& exponents, const std::vector<double>& x);

struct GraphSummary {
  int linkage_class_count = 0;
  std::vector<std::vector<int>> linkage_classes;  // 1-based complex indices
  std::vector<std::vector<int>> terminal_sccs;    // 1-based complex indices
  int dim_stoichiometric = 0;                     // rank of N
  int deficiency = 0;                             // m - l - dim S
  bool deficiency_formula_valid = false;  // each linkage class has exactly one terminal SCC
  bool positive_flux = false;             // ker(N) meets the strictly positive orthant
  bool terminal_cut = false;              // cutting any terminal edge pair disconnects its class
  bool regular = false;
  IntMat conservation;                    // Z: s x q, columns span the orthogonal complement of im(N)
};

GraphSummary graph_summary(const ReactionNetwork& net);

}  // namespace crn

#pragma once

#include <optional>
#include <vector>

#include "crn/matrix.hpp"

namespace crn {

enum class Sgn : int { neg = -1, zero = 0, pos = 1 };
using SignPattern = std::vector<Sgn>;

/// A point of {x >= 0 : a·x = b}, or nullopt. Phase-I simplex with Bland's
/// rule, exact arithmetic throughout.
std::optional<std::vector<Rat>> feasible_nonneg(const RatMat& a, const std::vector<Rat>& b);

/// A point of {x free : aeq·x = beq, age·x >= bge}, or nullopt.
std::optional<std::vector<Rat>> feasible_point(const RatMat& aeq, const std::vector<Rat>& beq,
                                               const RatMat& age, const std::vector<Rat>& bge);

/// Exact sigma with equalities·sigma = 0 and sigma_i >= 1 where omega is pos,
/// sigma_i <= -1 where neg, sigma_i = 0 where zero. Strictness is encoded by
/// the unit margin, which is lossless here because the solution set is a cone.
std::optional<std::vector<Rat>> lp_feasible(const RatMat& equalities, const SignPattern& omega);

}  // namespace crn

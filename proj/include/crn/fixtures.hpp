#pragma once

#include "crn/network.hpp"

namespace crn::fixtures {

/// 2A <-> 2B, 2A <-> A+B, 2B <-> A+B, all six directions.
ReactionNetwork triangle();

/// Bifunctional-kinase osmoregulation module: a kinase cycling through
/// XD/X/XT forms, autophosphorylation to Xp, transfer to the regulator Y,
/// and phosphatase activity of the XT- and XD-bound forms on Yp.
ReactionNetwork envz_ompr();

/// One- and two-site sequential distributive phosphorylation cycles.
ReactionNetwork phos1();
ReactionNetwork phos2();

/// Every rate constant set to 1.
RateAssignment unit_rates(const ReactionNetwork& net);

}  // namespace crn::fixtures

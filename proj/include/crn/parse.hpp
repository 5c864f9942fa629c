#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "crn/network.hpp"

namespace crn {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int line_, int col_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + what_),
        line(line_),
        col(col_) {}
};

/*
 * Network files, one reaction per line:
 *
 *   line    := complex ARROW complex ';' rate-list
 *   complex := term ('+' term)*
 *   term    := [integer] species-name
 *   ARROW   := '->' | '<->'
 *
 * '->' takes one rate name after the ';', '<->' takes two comma-separated
 * names (forward, backward) and expands to two reactions, forward first.
 * '#' starts a comment. An optional header line "species: A B C" pins the
 * species order; otherwise species are collected in first-appearance order.
 * Complexes are deduplicated in first-appearance order.
 */
ReactionNetwork parse_network(std::string_view text);

/// Rate files: one "name = value" per line, value a positive rational
/// ("3/2", "7") or exact decimal ("0.25"). '#' comments.
RateAssignment parse_rates(std::string_view text);

std::string render_network(const ReactionNetwork& net);
std::string render_rates(const RateAssignment& rates);

}  // namespace crn

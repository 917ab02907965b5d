#pragma once

#include <span>
#include <string>
#include <string_view>

#include "trigirth/core.hpp"

namespace trigirth {

// o3g format:
//   o3g 1
//   n <count>
//   t <a> <b> <c>     (one per oriented triple ->abc)
// `#` starts a comment. Emission writes triples in canonical sorted order.

OrientedThreeGraph parse_o3g(std::string_view text);
std::string emit_o3g(const OrientedThreeGraph& g, std::span<const std::string> comments = {});

// star format:
//   star 1
//   center <a>
//   l <b> <c>         (one per leaf; the triple ->a b c)

StarSystem parse_star(std::string_view text);
std::string emit_star(const StarSystem& star);

}  // namespace trigirth

#pragma once

#include <string>
#include <string_view>

#include "dact/comb_map.hpp"

namespace dact {

// Format:
//   halfedges 2m
//   sigma (a b d)(a' d' c')(b' c)
//   alpha (a a')(b b')(c c')(d d')
//   root a
// Half-edge ids follow first appearance (sigma line, then alpha line). Edge ids follow
// the order of alpha cycles; an edge is named after the first half-edge of its cycle.
// Half-edges missing from the sigma line are fixed points.
CombMap parse_map(std::string_view text);
CombMap read_map_file(const std::string& path);
std::string format_map(const CombMap& m);

}  // namespace dact

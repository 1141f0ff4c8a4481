#pragma once

#include <string>

#include "ncpart/ncp.hpp"

namespace ncpart {
namespace draw {

/// Pictorial representation as SVG 1.1: the n-gon with clockwise labels
/// starting at the top, blocks drawn as points, chords and filled polygons.
std::string partition_svg(const SetPartition& pi);

/// Type B on the 2n-gon; type D on the 2(n-1)-gon with the midpoint
/// labelled n.
std::string partition_svg(CoxType type, const SignedPartition& pi);

/// Hasse diagram of NC(type, rank), elements in rank rows.
std::string hasse_svg(CoxType type, int rank);

}  // namespace draw
}  // namespace ncpart

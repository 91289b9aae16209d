#pragma once

#include <cstddef>

#include "stringob/drawing.hpp"

/// Drawings transcribed from the reference figures, with rational coordinates.
namespace stringob::figures {

/// Six-vertex graph used to illustrate a finger move: figure labels 1..6 are
/// ids 0..5, edges 12, 24, 34, 45, 46, 36.
Graph finger_move_example_graph();
Drawing finger_move_example_drawing();

/// Heawood graph on a circle in label order 1, 2, ..., e.
Drawing heawood_drawing();

/// GP: inner pentagram at radius 7/5, outer pentagon at radius 5/2, subdivision
/// dots at segment midpoints.
Drawing gp_drawing();

/// C*C̄n: inner complement of the n-cycle drawn with straight chords (angles
/// nudged only if needed for general position), outer cycle and spokes
/// subdivided at their midpoints.
Drawing c_cbar_drawing(std::size_t n);

}  // namespace stringob::figures

#pragma once

#include <string>

#include "linecon/trajectory.hpp"

namespace linecon {

/// One column per step of the line: '/' up, '\' down, '_' for a rest.
std::string render_folding_ascii(const Folding& f);

/// Points at heights over the element axis, rests as thick horizontal
/// unit segments.
std::string render_folding_svg(const Folding& f);

/// Character grid with one cell per half unit, top row first.
std::string render_trajectory_ascii(const TrajectoryDiagram& d);

/// The l x k rectangle with origin at the bottom left, labeled points,
/// rest segments and crossing marks.
std::string render_trajectory_svg(const TrajectoryDiagram& d);

}  // namespace linecon

#pragma once

#include <string>
#include <string_view>

#include "cpi/colored.hpp"
#include "cpi/gm_lift.hpp"
#include "cpi/master.hpp"
#include "cpi/partition.hpp"

namespace cpi {

/* Colored parts are written value@class with an optional trailing + or -
 * (plus by default), separated by commas: "7@4+,7@4-,1@1". An empty string
 * or "()" is the empty partition. Throws std::invalid_argument. */
ColoredPart parse_colored_part(std::string_view token);
ColoredPartition parse_colored(std::string_view text);
std::string format_colored(const ColoredPartition& pi);

/// "t=2;C=2,22;A=1,11". Throws std::invalid_argument.
ResidueSystem parse_system(std::string_view text);
std::string format_system(const ResidueSystem& system);

/// "(3,1,1)", "()" for the empty partition.
std::string format_partition(const Partition& p);
/// "((1),(),(),();1,0,0,0)"
std::string format_tuple(const SolutionTuple& tuple);
/// "U[(1),();d=1,0]" or "V[();f=1,0#2]"
std::string format_star(const StarElement& x);

} // namespace cpi

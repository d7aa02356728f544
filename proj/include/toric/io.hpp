#ifndef TORIC_IO_HPP
#define TORIC_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include "toric/fan.hpp"

namespace toric {

struct FanFile {
    Fan fan;
    std::optional<OrbifoldWeights> weights;  // present iff the file has them
};

// line-oriented text format: `dim d`, `rays n` + n integer rows, `cones k` +
// k rows of 0-based ray indices (maximal cones only), optional `orbits` row,
// optional `weights` row; `#` starts a comment
FanFile parse_fan(std::istream& in, const std::string& display_name);
FanFile load_fan_file(const std::string& path);

// accept a library name (P1, P2, ...) or a path to a .fan file
FanFile resolve_fan(const std::string& name_or_path);

std::string format_fan(const FanFile& f);

}  // namespace toric

#endif

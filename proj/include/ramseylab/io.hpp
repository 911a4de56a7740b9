#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ramseylab/coloring.hpp"
#include "ramseylab/designs.hpp"

namespace ramseylab {

/// Parse failure with the 1-based offending line.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// HRC1 text format:
///   HRC1
///   r <r> n <n> k <k> m <assigned-count>
///   <v1> ... <vr> <color>        (one line per assigned edge, colex order)
/// ASCII decimal, single spaces, LF endings, vertices ascending, colors
/// 0-based. Unassigned edges are omitted.
std::string write_coloring(const Coloring& c);
Coloring parse_coloring(std::string_view text);
void save_coloring(const std::filesystem::path& path, const Coloring& c);
Coloring load_coloring(const std::filesystem::path& path);

/// DES1 text format:
///   DES1
///   v <v> b <block_size> m <block-count>
///   <p1> ... <pb>                (one line per block, colex order)
std::string write_design(const Design& d);
Design parse_design(std::string_view text);
void save_design(const std::filesystem::path& path, const Design& d);
Design load_design(const std::filesystem::path& path);

/// Certificate directory: $RAMSEYLAB_CATALOG if set, else the built-in path.
std::filesystem::path catalog_dir();
Coloring load_catalog_coloring(std::string_view name);

}  // namespace ramseylab

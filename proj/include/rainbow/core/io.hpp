#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rainbow/core/hypergraph.hpp"

namespace rainbow {

// Hypergraph text format:
//
//   r n m
//   v1 v2 ... vr      (m lines, ascending within a line, lines in colex order)
//
// Single spaces, every line terminated by '\n', nothing else. The parser
// accepts exactly the byte strings that to_text() produces.
std::string to_text(const HyperGraph& h);
HyperGraph parse_hypergraph(std::string_view text);

HyperGraph read_hypergraph(const std::filesystem::path& path);
void write_hypergraph(const std::filesystem::path& path, const HyperGraph& h);

std::string read_file(const std::filesystem::path& path);
// Writes to a sibling temporary and renames into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace rainbow

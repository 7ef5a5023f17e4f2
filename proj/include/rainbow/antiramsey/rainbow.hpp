#pragma once

#include <optional>

#include "rainbow/antiramsey/coloring.hpp"
#include "rainbow/core/embedding.hpp"

namespace rainbow::antiramsey {

// A copy of `target` in K_n^r whose edges have pairwise distinct colors, or
// none. Exhaustive over all embeddings into the complete host.
std::optional<Embedding> find_rainbow_copy(const EdgeColoring& chi, const HyperGraph& target);

// The colex-least edge of every color class: a rainbow spanning subgraph with
// exactly N edges, which is as large as a rainbow subgraph can be.
HyperGraph max_rainbow_subgraph(const EdgeColoring& chi);

}  // namespace rainbow::antiramsey

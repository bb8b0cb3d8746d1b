#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "hygirth/graph.hpp"
#include "hygirth/hypergraph.hpp"

namespace hygirth {

// `.hyg` text format: `#` comment lines, then `hypergraph <n> <m> [multi]`,
// then m lines of space-separated ascending 0-based vertex indices. The
// `multi` flag marks configuration-model output (multiset edges allowed).
using AnyHypergraph = std::variant<Hypergraph, MultiHypergraph>;

AnyHypergraph read_hyg(std::istream& in);
AnyHypergraph read_hyg_file(const std::string& path);
// Convenience: reads and requires a simple hypergraph.
Hypergraph read_simple_hyg_file(const std::string& path);

void write_hyg(std::ostream& out, const Hypergraph& h);
void write_hyg(std::ostream& out, const MultiHypergraph& h);
void write_hyg_file(const std::string& path, const Hypergraph& h);
void write_hyg_file(const std::string& path, const MultiHypergraph& h);

// `.elg` text format: `graph <n> <m>` then m lines `u v` with u < v.
Graph read_elg(std::istream& in);
Graph read_elg_file(const std::string& path);
void write_elg(std::ostream& out, const Graph& g);
void write_elg_file(const std::string& path, const Graph& g);

}  // namespace hygirth

#pragma once

#include "qrwa/lightpath.hpp"
#include "qrwa/topology.hpp"

#include <span>
#include <vector>

namespace qrwa {

// Canonical path order: ascending length, then hop count, then lexicographic
// link-id sequence. All candidate lists in this library use it.
bool path_less(const Path& a, const Path& b);

// Up to k shortest loopless s->d paths in canonical order.
std::vector<Path> k_shortest_paths(const Topology& topo, NodeId s, NodeId d, int k);

// All loopless s->d paths in canonical order, truncated to the `cap`
// shortest when there are more.
std::vector<Path> all_simple_paths(const Topology& topo, NodeId s, NodeId d, int cap);

// Number of links of `path` whose fiber carries at least one of the given
// quantum lightpaths. Fiber-level: the opposite direction counts too.
// Non-quantum entries in `established` are ignored.
int shared_quantum_links(const Topology& topo, const Path& path, std::span<const Lightpath> established);

// Total length of the quantum path's links whose fiber also appears in the
// classical path (direction-insensitive).
double shared_length_km(const Topology& topo, const Path& classical_path, const Path& quantum_path);

}  // namespace qrwa

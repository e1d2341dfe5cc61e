#ifndef DPM_GRAPHIO_HPP
#define DPM_GRAPHIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dpm/ribbon.hpp"

namespace dpm {

// Text format, one statement per line (see docs/graph-format.md):
//   # comment
//   name <string>
//   genus <int>                       (optional; validated when present)
//   vertex <id> <dart> <dart> ...     (counterclockwise rotation)
//   edge <id> <tail-dart> <head-dart> <weight>
// Weights are positive rationals written "p" or "p/q". Ids are arbitrary
// nonnegative integers; parsing normalizes them by ascending order.
RibbonGraph parse_graph(const std::string& text);
RibbonGraph parse_graph_file(const std::string& path);

// Canonical serialization (ids are the internal ones); parse(serialize(g))
// reproduces g exactly.
std::string serialize_graph(const RibbonGraph& g);

// One vertex, 2g loops, rotation a1+ b1+ a1- b1- a2+ b2+ ... ; the standard
// genus-g polygon identification. Edge order a1, b1, a2, b2, ...
RibbonGraph bouquet(int g, std::vector<Rat> weights = {});

// m x n grid on the torus: mn vertices, 2mn edges (east then north), genus
// 1. Edge order: all east edges row-major, then all north edges.
RibbonGraph torus_grid(int m, int n, std::vector<Rat> weights = {});

// Deterministic random positive rationals with numerator and denominator in
// 1..10 (platform-independent generator).
std::vector<Rat> random_weights(int count, std::uint64_t seed);

}  // namespace dpm

#endif

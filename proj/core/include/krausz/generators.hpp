// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "krausz/gadgets.hpp"
#include "krausz/graph.hpp"

namespace krausz {

// All generators draw from a 64-bit Mersenne twister and map its raw output
// to ranges themselves, so a seed yields the same graphs with every
// standard library.
using Rng = std::mt19937_64;

// Uniform in [0, bound).
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
// True with probability p.
bool bernoulli(Rng& rng, double p);

// G(n, p).
Graph random_graph(int n, double p, Rng& rng);

// Each new vertex is joined to a random subset of a random maximal clique of
// the vertices placed so far (sometimes to nothing), which keeps the graph
// chordal.
Graph random_chordal(int n, Rng& rng);

// Random triple set of the given density closed under the star condition.
// Closures that grow into the full X x Y x Z are redrawn (a few times) unless
// density >= 1.
ThreeDMInstance random_instance(int q, double density, Rng& rng);

}  // namespace krausz

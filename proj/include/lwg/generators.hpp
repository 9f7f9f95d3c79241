#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "lwg/graph.hpp"

namespace lwg {

/// Graph family generators used by the experiment harness. All generators are
/// pure functions of their parameters and the seed; outputs are canonical
/// simple connected graphs (largest component after cleanup).
Graph path_graph(int n);
Graph star_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph grid_graph(int w, int h);

/// K_k with a pendant path of p edges.
Graph lollipop_graph(int k, int p);

/// Path of p edges with t leaves on its first node and s leaves on its last,
/// so n = p + 1 + t + s and m = n - 1.
Graph bowtie_graph(int t, int p, int s);

/// Configuration model with rejection of self loops and parallel edges.
/// Requires d*n even; throws after a bounded number of failed attempts.
Graph random_regular_graph(int d, int n, std::uint64_t seed);

/// Ring lattice with k nearest neighbors, each right-going edge rewired with
/// probability p; cleanup keeps the largest component.
Graph watts_strogatz_graph(int n, int k, double p, std::uint64_t seed);

/// Torus expander on sqrt(n) x sqrt(n) with the standard generator set
/// {(x+2y, y), (x+2y+1, y), (x, y+2x), (x, y+2x+1)}, simplified.
Graph margulis_gabber_galil_graph(int n);

/// Cycle on n nodes plus chords i -> 2i mod n, simplified.
Graph chordal_cycle_graph(int n);

/// Name/parameter driven dispatch for the CLI. Recognized families:
/// path(n), star(n), cycle(n), complete(n), grid(w,h), lollipop(k,p),
/// bowtie(t,p,s), regular(d,n), watts_strogatz(n,k,p), margulis(n),
/// chordal(n). Unknown family or bad params throw std::invalid_argument.
Graph generate(const std::string& family, const std::map<std::string, double>& params,
               std::uint64_t seed);

} // namespace lwg

#pragma once

#include <iosfwd>
#include <string>

#include "teuler/hypergraph.hpp"
#include "teuler/walk.hpp"

namespace teuler {

// Hypergraph text format: line 1 is `k n m`, followed by m lines of k
// vertex ids. `#` starts a comment that runs to end of line. The writer is
// canonical (sorted vertices, edges in index order), so write(read(x)) is
// byte-identical to x for comment-free canonical input.

std::string write_hypergraph(const Hypergraph& h);
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_string(const std::string& text);
Hypergraph read_hypergraph_file(const std::string& path);

// Walk certificate format: line 1 is `open` or `closed`, line 2 the
// whitespace-separated vertex ids.

std::string write_walk(const WalkSeq& w);
WalkSeq read_walk(std::istream& in);
WalkSeq read_walk_string(const std::string& text);
WalkSeq read_walk_file(const std::string& path);

}  // namespace teuler

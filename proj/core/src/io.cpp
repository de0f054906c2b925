#include "teuler/io.hpp"

#include <fstream>
#include <sstream>

#include "teuler/errors.hpp"

namespace teuler {

namespace {

// Tokenizes the stream with '#' comments stripped to end of line.
std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

int parse_int(const std::string& tok, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("expected an integer for ") + what +
                     ", got '" + tok + "'");
  }
}

}  // namespace

std::string write_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.k() << ' ' << h.n() << ' ' << h.m() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
  return out.str();
}

Hypergraph read_hypergraph(std::istream& in) {
  auto tokens = tokenize(in);
  if (tokens.size() < 3) {
    throw InputError("hypergraph header must be 'k n m'");
  }
  int k = parse_int(tokens[0], "k");
  int n = parse_int(tokens[1], "n");
  int m = parse_int(tokens[2], "m");
  if (m < 0) throw InputError("edge count m must be nonnegative");
  std::size_t expected = 3 + static_cast<std::size_t>(m) * (k > 0 ? k : 1);
  if (k > 0 && tokens.size() != expected) {
    throw InputError("expected " + std::to_string(expected - 3) +
                     " edge vertex ids, got " + std::to_string(tokens.size() - 3));
  }
  std::vector<std::vector<int>> edges(m);
  std::size_t pos = 3;
  for (int i = 0; i < m; ++i) {
    edges[i].reserve(k);
    for (int j = 0; j < k; ++j) {
      edges[i].push_back(parse_int(tokens[pos++], "edge vertex"));
    }
  }
  return Hypergraph(k, n, edges);
}

Hypergraph read_hypergraph_string(const std::string& text) {
  std::istringstream in(text);
  return read_hypergraph(in);
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open hypergraph file '" + path + "'");
  return read_hypergraph(in);
}

std::string write_walk(const WalkSeq& w) {
  std::ostringstream out;
  out << (w.closed ? "closed" : "open") << '\n';
  for (std::size_t i = 0; i < w.verts.size(); ++i) {
    if (i) out << ' ';
    out << w.verts[i];
  }
  out << '\n';
  return out.str();
}

WalkSeq read_walk(std::istream& in) {
  auto tokens = tokenize(in);
  if (tokens.empty()) {
    throw InputError("walk certificate must start with 'open' or 'closed'");
  }
  WalkSeq w;
  if (tokens[0] == "open") {
    w.closed = false;
  } else if (tokens[0] == "closed") {
    w.closed = true;
  } else {
    throw InputError("walk certificate must start with 'open' or 'closed', got '" +
                     tokens[0] + "'");
  }
  if (tokens.size() < 2) throw InputError("walk certificate has no vertices");
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    w.verts.push_back(parse_int(tokens[i], "walk vertex"));
  }
  return w;
}

WalkSeq read_walk_string(const std::string& text) {
  std::istringstream in(text);
  return read_walk(in);
}

WalkSeq read_walk_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open walk file '" + path + "'");
  return read_walk(in);
}

}  // namespace teuler

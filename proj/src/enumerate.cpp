#include "propcon/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "propcon/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace propcon {

namespace {

constexpr int kEnumMaxN = 8;

// Levels of ALL graphs (connected or not) up to isomorphism, as sorted
// canonical graph6 strings. Level n is built from level n-1 by attaching a new
// vertex in every possible way and deduplicating canonically. The expansion is
// embarrassingly parallel; sorting afterwards keeps the result
// thread-count-independent.
std::vector<std::string> expand_level(const std::vector<std::string>& prev, int n) {
  std::vector<Graph> parents;
  parents.reserve(prev.size());
  for (const auto& s : prev) parents.push_back(parse_graph6(s));
  const long total = static_cast<long>(parents.size()) << (n - 1);
  std::vector<std::string> out(total);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
  for (long idx = 0; idx < total; ++idx) {
    const Graph& base = parents[idx >> (n - 1)];
    const long mask = idx & ((1L << (n - 1)) - 1);
    auto es = base.edges();
    for (int v = 0; v < n - 1; ++v)
      if (mask >> v & 1) es.push_back({v, n - 1});
    out[idx] = canonical_form(Graph::from_edges(n, std::move(es)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::vector<std::string>& all_graphs_level(int n) {
  static std::mutex mu;
  static std::vector<std::vector<std::string>> levels;  // levels[i] = order i+1
  std::lock_guard<std::mutex> lock(mu);
  if (levels.empty()) levels.push_back({canonical_form(Graph::empty(1))});
  while (static_cast<int>(levels.size()) < n) levels.push_back(expand_level(levels.back(), levels.size() + 1));
  return levels[n - 1];
}

}  // namespace

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > kEnumMaxN)
    throw UnsupportedSizeError("builtin enumerator covers 1 <= n <= " + std::to_string(kEnumMaxN) +
                               "; stream larger orders from a file");
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const auto& level = all_graphs_level(n);
  std::vector<Graph> out;
  for (const auto& s : level) {
    Graph g = parse_graph6(s);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(out)).first->second;
}

Graph6Stream::Graph6Stream(const std::string& path) {
  owned_ = std::make_unique<std::ifstream>(path);
  if (!*owned_) throw Error("cannot open graph6 file: " + path);
  in_ = owned_.get();
}

Graph6Stream::Graph6Stream(std::istream& in) : in_(&in) {}

std::optional<Graph> Graph6Stream::next() {
  std::string line;
  if (!std::getline(*in_, line)) return std::nullopt;
  ++line_;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  try {
    return parse_graph6(line);
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(line_) + ": " + e.what(), line_);
  }
}

}  // namespace propcon

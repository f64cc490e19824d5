#pragma once

#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "propcon/graph.hpp"

namespace propcon {

// All connected graphs on n vertices up to isomorphism, one representative
// each, ordered by canonical form. Built by vertex extension with canonical
// deduplication; cached per n. Capped at n = 8.
std::vector<Graph> enumerate_connected(int n);

// Lazy reader for a file (or any stream) of graph6 lines. Parse failures
// abort with the 1-based line number; graphs are never silently skipped.
class Graph6Stream {
 public:
  explicit Graph6Stream(const std::string& path);
  explicit Graph6Stream(std::istream& in);
  std::optional<Graph> next();
  long line() const { return line_; }

 private:
  std::unique_ptr<std::ifstream> owned_;
  std::istream* in_;
  long line_ = 0;
};

}  // namespace propcon

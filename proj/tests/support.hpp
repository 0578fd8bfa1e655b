#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "knotfib/diagram.hpp"

#ifndef KNOTFIB_CORPUS_DIR
#error "KNOTFIB_CORPUS_DIR must be defined"
#endif

namespace testing {

inline std::string corpus_path(const std::string& name) { return std::string(KNOTFIB_CORPUS_DIR) + "/" + name + ".pd"; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline knotfib::Diagram corpus(const std::string& name) { return knotfib::parse_pd(slurp(corpus_path(name))); }

struct ManifestEntry {
  std::string name, file, expected_class, expected_verdict, note;
};

inline std::vector<ManifestEntry> manifest() {
  std::vector<ManifestEntry> out;
  std::istringstream in(slurp(std::string(KNOTFIB_CORPUS_DIR) + "/manifest.tsv"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '\t')) f.push_back(cell);
    if (f.size() < 4) throw std::runtime_error("bad manifest line: " + line);
    f.resize(5);
    out.push_back({f[0], f[1], f[2], f[3], f[4]});
  }
  return out;
}

inline std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& e : manifest()) out.push_back(e.name);
  return out;
}

}  // namespace testing

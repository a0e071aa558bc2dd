#include "swt/sets.hpp"

#include <sstream>
#include <stdexcept>

namespace swt {

IndexSet IndexSet::of(int n, const std::vector<int>& idx) {
  IndexSet s = empty(n);
  for (int i : idx) {
    if (i < 0 || i >= n) throw std::invalid_argument("index " + std::to_string(i) + " out of range");
    s.set(i);
  }
  return s;
}

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (has(i)) out.push_back(i);
  return out;
}

std::string IndexSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

IndexSet parse_index_set(int n, const std::string& text) {
  std::vector<int> idx;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad set literal '" + text + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad set literal '" + text + "'");
    idx.push_back(v);
  }
  return IndexSet::of(n, idx);
}

}  // namespace swt

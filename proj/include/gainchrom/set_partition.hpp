#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gainchrom {

using Vertex = int;  // vertices are 1..n

/// A partition of [n] into nonempty blocks. Each block is sorted and blocks
/// are ordered by their least element.
class SetPartition {
 public:
  SetPartition() = default;

  SetPartition(int n, std::vector<std::vector<Vertex>> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n_ < 0) throw std::invalid_argument("SetPartition: negative ground set");
    std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
    int covered = 0;
    for (auto& b : blocks_) {
      if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
      std::sort(b.begin(), b.end());
      for (Vertex v : b) {
        if (v < 1 || v > n_) throw std::invalid_argument("SetPartition: element out of range");
        if (seen[v]) throw std::invalid_argument("SetPartition: blocks overlap");
        seen[v] = 1;
        ++covered;
      }
    }
    if (covered != n_) throw std::invalid_argument("SetPartition: blocks do not cover [n]");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }

  /// From a restricted growth string: rgs[v-1] is the block index of v.
  static SetPartition from_block_indices(const std::vector<int>& rgs) {
    std::vector<std::vector<Vertex>> blocks;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
      const auto b = static_cast<std::size_t>(rgs[i]);
      if (b >= blocks.size()) blocks.resize(b + 1);
      blocks[b].push_back(static_cast<Vertex>(i + 1));
    }
    return SetPartition(static_cast<int>(rgs.size()), std::move(blocks));
  }

  static SetPartition singletons(int n) {
    std::vector<std::vector<Vertex>> blocks;
    for (Vertex v = 1; v <= n; ++v) blocks.push_back({v});
    return SetPartition(n, std::move(blocks));
  }

  int ground_size() const { return n_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  const std::vector<Vertex>& block(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }

  /// 0-based index of the block containing v.
  int block_of(Vertex v) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), v)) return static_cast<int>(i);
    throw std::out_of_range("SetPartition::block_of: vertex not in ground set");
  }

  /// block_of for every vertex, indexed v-1.
  std::vector<int> block_indices() const {
    std::vector<int> idx(static_cast<std::size_t>(n_), 0);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      for (Vertex v : blocks_[i]) idx[static_cast<std::size_t>(v - 1)] = static_cast<int>(i);
    return idx;
  }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> blocks_;
};

/// `1 3|2 5|4 6`.
inline std::string to_string(const SetPartition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.blocks().size(); ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < p.blocks()[i].size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(p.blocks()[i][j]);
    }
  }
  return out;
}

/// Parse `|`-separated blocks of space-separated elements. The ground set is
/// [max element] unless n is given.
inline SetPartition parse_partition(std::string_view text, int n = -1) {
  std::vector<std::vector<Vertex>> blocks;
  int max_elem = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t bar = text.find('|', start);
    if (bar == std::string_view::npos) bar = text.size();
    std::istringstream in{std::string(text.substr(start, bar - start))};
    std::vector<Vertex> block;
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument("parse_partition: bad element '" + token + "'");
      block.push_back(v);
      max_elem = std::max(max_elem, v);
    }
    if (block.empty()) {
      if (!(text.find_first_not_of(" \t") == std::string_view::npos && blocks.empty()))
        throw std::invalid_argument("parse_partition: empty block");
    } else {
      blocks.push_back(std::move(block));
    }
    start = bar + 1;
  }
  return SetPartition(n < 0 ? max_elem : n, std::move(blocks));
}

}  // namespace gainchrom

#include "qg/partition.hpp"

#include <algorithm>
#include <sstream>

#include "qg/error.hpp"

namespace qg {

Partition::Partition(unsigned n, std::vector<std::vector<unsigned>> blocks)
    : n_(n), blocks_(std::move(blocks)), block_of_(n, n) {
  for (auto& b : blocks_) {
    if (b.empty())
      throw Error("partition block is empty");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (unsigned i = 0; i < blocks_.size(); ++i) {
    for (unsigned x : blocks_[i]) {
      if (x >= n_)
        throw Error("partition entry out of range");
      if (block_of_[x] != n_)
        throw Error("partition blocks overlap");
      block_of_[x] = i;
    }
  }
  for (unsigned x = 0; x < n_; ++x)
    if (block_of_[x] == n_)
      throw Error("partition does not cover 0.." + std::to_string(n_ - 1));
}

Partition Partition::singletons(unsigned n) {
  std::vector<std::vector<unsigned>> blocks;
  for (unsigned x = 0; x < n; ++x) blocks.push_back({x});
  return Partition(n, std::move(blocks));
}

Partition Partition::one_block(unsigned n) {
  std::vector<unsigned> all(n);
  for (unsigned x = 0; x < n; ++x) all[x] = x;
  return Partition(n, {all});
}

Partition Partition::parse(unsigned n, std::string_view text) {
  std::vector<std::vector<unsigned>> blocks;
  std::string buf(text);
  std::replace(buf.begin(), buf.end(), ',', ' ');
  std::istringstream in(buf);
  std::string chunk;
  std::vector<unsigned> block;
  while (in >> chunk) {
    if (chunk == "|") {
      if (!block.empty()) blocks.push_back(std::move(block));
      block.clear();
      continue;
    }
    try {
      std::size_t pos = 0;
      long v = std::stol(chunk, &pos);
      if (pos != chunk.size() || v < 0)
        throw std::invalid_argument(chunk);
      block.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw ParseError("bad partition token '" + chunk + "'");
    }
  }
  if (!block.empty()) blocks.push_back(std::move(block));
  try {
    return Partition(n, std::move(blocks));
  } catch (const Error& e) {
    throw ParseError(std::string("bad partition: ") + e.what());
  }
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += " | ";
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(blocks_[i][j]);
    }
  }
  return s;
}

}  // namespace qg

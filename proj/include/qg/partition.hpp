#ifndef QG_PARTITION_HPP
#define QG_PARTITION_HPP

#include <string>
#include <string_view>
#include <vector>

namespace qg {

// A partition of {0..n-1} into disjoint nonempty blocks.  Blocks are kept
// sorted internally (each block ascending, blocks ordered by least element),
// so equal partitions compare equal.
class Partition {
public:
  Partition() = default;
  Partition(unsigned n, std::vector<std::vector<unsigned>> blocks);  // validates

  static Partition singletons(unsigned n);
  static Partition one_block(unsigned n);

  // Text syntax "0 1 | 2 4 | 3 5"; must cover 0..n-1 exactly.
  static Partition parse(unsigned n, std::string_view text);

  unsigned size() const { return n_; }
  const std::vector<std::vector<unsigned>>& blocks() const { return blocks_; }
  unsigned block_of(unsigned x) const { return block_of_[x]; }
  bool related(unsigned x, unsigned y) const { return block_of_[x] == block_of_[y]; }
  const std::vector<unsigned>& block(unsigned x) const { return blocks_[block_of_[x]]; }

  std::string to_string() const;

  bool operator==(const Partition&) const = default;

private:
  unsigned n_ = 0;
  std::vector<std::vector<unsigned>> blocks_;
  std::vector<unsigned> block_of_;
};

}  // namespace qg

#endif

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "incpar/dagmeter.hpp"
#include "incpar/exec.hpp"

namespace incpar::bstsort {

// Unbalanced BST built by inserting keys in sequence order; node i is the
// key inserted at step i, so two trees are equal iff their node arrays are.
struct Bst {
  struct Node {
    double key = 0.0;
    std::int32_t left = -1;
    std::int32_t right = -1;
  };
  std::vector<Node> nodes;
  std::int32_t root = -1;
};

struct SortResult {
  Bst tree;
  std::vector<double> sorted;  // in-order traversal
  std::uint32_t rounds = 0;    // parallel mode only; 0 for sequential
};

class DuplicateKey : public std::invalid_argument {
 public:
  DuplicateKey(std::size_t first, std::size_t second)
      : std::invalid_argument("duplicate keys at positions " + std::to_string(first) +
                              " and " + std::to_string(second)),
        first_(first),
        second_(second) {}
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

// Sequential insertion in the given order.  Throws DuplicateKey when two
// keys compare equal.  With a meter, registers one node per step and
// records an arc from every node on the search path to the inserted node
// (the transitive reduction of that DAG is the tree itself).
SortResult sort_seq(std::span<const double> keys, dagmeter::IterationDag* meter = nullptr);

// Round-parallel insertion: every pending key advances one level per round
// and contested empty slots go to the minimum step index (priority-write).
// Produces a tree bit-identical to sort_seq for any thread count; the round
// count equals the height of the result.
SortResult sort_par(std::span<const double> keys, exec::ThreadPool& pool);

// Nodes on the longest root-to-leaf path; 0 for the empty tree.
std::uint32_t height(const Bst& tree);

std::vector<double> in_order(const Bst& tree);

}  // namespace incpar::bstsort

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tripow/interval.hpp"
#include "tripow/words.hpp"

namespace tripow {

// Case-set trees. Nodes are the case sets (case i, order m, occurrence p);
// a node's children re-anchor three steps deeper in the occurrence order:
//
//   square trees                       cube trees
//   (1, m, p) -> (i, m-1, a_p+1)       (m, p) -> (m-1, a_p+1)
//   (2, m, p) -> (i, m-2, b_p+1)               -> (m-2, b_p+1)
//   (3, m, p) -> (i, m-3, c_p+1)               -> (m-3, c_p+1)
//
// with targets kept at order >= 4 (squares) / >= 7 (cubes). The number of
// squares (cubes) ending at position n equals the number of times n appears
// across all tree node intervals.

/// Edge type: which letter's occurrence sequence produced the child index.
enum class StepKind { A, B, C };

char step_letter(StepKind kind);

struct TreeNode {
  int case_index = 0;           // 1..3 for square trees, 0 for cube trees
  int order = 0;                // m
  std::int64_t occurrence = 0;  // p
  Interval positions;
  std::int64_t root_length = 0;
  int parent = -1;              // index into nodes; -1 for the root
  StepKind step = StepKind::A;  // edge type from the parent (roots: unused)
};

struct PowerTree {
  std::vector<TreeNode> nodes;  // breadth-first, nodes[0] is the root
  bool is_leaf(int index) const;
};

/// Tree rooted at square case set (case_index, order, 1).
PowerTree square_tree(int case_index, int order, const IndexedWord& word);

/// Tree rooted at cube case set (order, 1); order >= 7.
PowerTree cube_tree(int order, const IndexedWord& word);

/// Deterministic DOT digraph: one node line per tree node in breadth-first
/// order, then one edge line per child, labeled by step letter.
std::string to_dot(const PowerTree& tree);

}  // namespace tripow

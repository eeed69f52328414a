#include "tripow/power_tree.hpp"

#include <deque>

#include "tripow/cubes.hpp"
#include "tripow/squares.hpp"

namespace tripow {

namespace {

std::int64_t next_occurrence(StepKind kind, std::int64_t p, const IndexedWord& word) {
  switch (kind) {
    case StepKind::A: return letter_end_position('a', p, word) + 1;
    case StepKind::B: return letter_end_position('b', p, word) + 1;
    default: return letter_end_position('c', p, word) + 1;
  }
}

TreeNode make_square_node(int case_index, int m, std::int64_t p, const IndexedWord& word) {
  const SquareCaseSet set = square_case_set(case_index, m, p, word);
  TreeNode node;
  node.case_index = case_index;
  node.order = m;
  node.occurrence = p;
  node.positions = set.positions;
  node.root_length = set.root_length;
  return node;
}

TreeNode make_cube_node(int m, std::int64_t p, const IndexedWord& word) {
  const CubeCaseSet set = cube_case_set(m, p, word);
  TreeNode node;
  node.case_index = 0;
  node.order = m;
  node.occurrence = p;
  node.positions = set.positions;
  node.root_length = set.root_length;
  return node;
}

}  // namespace

char step_letter(StepKind kind) {
  switch (kind) {
    case StepKind::A: return 'a';
    case StepKind::B: return 'b';
    default: return 'c';
  }
}

bool PowerTree::is_leaf(int index) const {
  for (const TreeNode& node : nodes) {
    if (node.parent == index) return false;
  }
  return true;
}

PowerTree square_tree(int case_index, int order, const IndexedWord& word) {
  PowerTree tree;
  tree.nodes.push_back(make_square_node(case_index, order, 1, word));
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    const int idx = frontier.front();
    frontier.pop_front();
    const TreeNode node = tree.nodes[static_cast<std::size_t>(idx)];
    // one rule per case index, three children at the same (order, occurrence)
    const StepKind kind = static_cast<StepKind>(node.case_index - 1);
    const int child_order = node.order - node.case_index;
    if (child_order < 4) continue;  // leaf
    const std::int64_t child_p = next_occurrence(kind, node.occurrence, word);
    for (int i = 1; i <= 3; ++i) {
      TreeNode child = make_square_node(i, child_order, child_p, word);
      child.parent = idx;
      child.step = kind;
      tree.nodes.push_back(std::move(child));
      frontier.push_back(static_cast<int>(tree.nodes.size()) - 1);
    }
  }
  return tree;
}

PowerTree cube_tree(int order, const IndexedWord& word) {
  PowerTree tree;
  tree.nodes.push_back(make_cube_node(order, 1, word));
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    const int idx = frontier.front();
    frontier.pop_front();
    const TreeNode node = tree.nodes[static_cast<std::size_t>(idx)];
    // all three rules hang off one cube node, at orders m-1, m-2, m-3
    for (int step = 0; step < 3; ++step) {
      const int child_order = node.order - step - 1;
      if (child_order < 7) continue;
      const StepKind kind = static_cast<StepKind>(step);
      TreeNode child =
          make_cube_node(child_order, next_occurrence(kind, node.occurrence, word), word);
      child.parent = idx;
      child.step = kind;
      tree.nodes.push_back(std::move(child));
      frontier.push_back(static_cast<int>(tree.nodes.size()) - 1);
    }
  }
  return tree;
}

std::string to_dot(const PowerTree& tree) {
  std::string out = "digraph power_tree {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const TreeNode& node = tree.nodes[i];
    out += "  n" + std::to_string(i) + " [label=\"K";
    if (node.case_index > 0) out += std::to_string(node.case_index);
    out += "(" + std::to_string(node.order) + "," + std::to_string(node.occurrence) + ") " +
           node.positions.str() + "\"];\n";
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const TreeNode& node = tree.nodes[i];
    if (node.parent < 0) continue;
    out += "  n" + std::to_string(node.parent) + " -> n" + std::to_string(i) + " [label=\"" +
           step_letter(node.step) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace tripow

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bipaste/util.hpp"

namespace bipaste {

// Bracketing of a word, as a binary tree: a leaf per letter, one inner node
// per multiplication.  A distinguished empty value brackets the empty word.
class Bracketing {
 public:
  Bracketing() = default;  // the empty bracketing

  static Bracketing empty();
  static Bracketing leaf();
  static Bracketing node(Bracketing left, Bracketing right);

  bool is_empty() const { return len_ == 0; }
  bool is_leaf() const { return len_ == 1; }
  bool is_node() const { return len_ > 1; }
  size_t length() const { return len_; }

  const Bracketing& left() const;
  const Bracketing& right() const;

  bool operator==(const Bracketing& other) const;
  bool operator!=(const Bracketing& other) const { return !(*this == other); }

  // Dash notation, outermost parentheses omitted: "(--)-".
  std::string str() const;
  static Result<Bracketing> parse(const std::string& text);

  // Subtree at an L/R address ("" is the root).  Throws on bad addresses.
  const Bracketing& at(const std::string& pos) const;
  Bracketing replace(const std::string& pos, const Bracketing& sub) const;

  // Leaf index where the subtree at `pos` starts.
  size_t leaf_offset(const std::string& pos) const;

  // Address of the subtree covering exactly leaves [lo, hi), if one exists.
  Result<std::string> subtree_spanning(size_t lo, size_t hi) const;

  // Replaces the k-th leaf (0-based) by `sub`.
  Bracketing substitute_leaf(size_t k, const Bracketing& sub) const;

 private:
  struct Node;
  Bracketing(std::shared_ptr<const Node> n, size_t len) : node_(std::move(n)), len_(len) {}
  std::shared_ptr<const Node> node_;
  size_t len_ = 0;
};

// One application of the associator seen as a tree rewrite at an address:
// left_to_right turns (xy)z into x(yz); right_to_left is its inverse.
struct AssocMove {
  std::string position;
  enum class Direction { left_to_right, right_to_left } direction;

  AssocMove inverse() const {
    return {position, direction == Direction::left_to_right ? Direction::right_to_left
                                                            : Direction::left_to_right};
  }
  bool operator==(const AssocMove&) const = default;
};

std::string move_str(const AssocMove& m);

Result<Bracketing> apply_move(const Bracketing& b, const AssocMove& m);
Result<Bracketing> apply_chain(const Bracketing& b, const std::vector<AssocMove>& moves);

// All bracketings of length n in a fixed deterministic order.  Guarded to
// n <= 12 to keep the Catalan blowup at desk scale.
std::vector<Bracketing> enumerate_bracketings(size_t n);

// ((..((--)-)..)-), the left normalized bracketing of length n.
Bracketing left_normalized(size_t n);
bool is_left_normalized(const Bracketing& b);

// Moves taking b to left_normalized(b.length()); all right_to_left.
std::vector<AssocMove> normalize_moves(const Bracketing& b);

// Canonical move chain from `from` to `to`, routed through the left
// normalized bracketing; empty exactly when the two are equal.
Result<std::vector<AssocMove>> associator_chain(const Bracketing& from, const Bracketing& to);

// Same, but leaves [lo, hi) must form a subtree of identical shape in both
// endpoints; the chain never rewrites inside that subtree.
Result<std::vector<AssocMove>> chain_with_frozen_segment(const Bracketing& from,
                                                         const Bracketing& to, size_t lo,
                                                         size_t hi);

// All legal single moves on b, in deterministic order.
std::vector<AssocMove> legal_moves(const Bracketing& b);

}  // namespace bipaste

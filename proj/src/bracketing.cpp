#include "bipaste/bracketing.hpp"

#include <algorithm>

namespace bipaste {

struct Bracketing::Node {
  Bracketing left;
  Bracketing right;
};

Bracketing Bracketing::empty() { return Bracketing(nullptr, 0); }
Bracketing Bracketing::leaf() { return Bracketing(nullptr, 1); }

Bracketing Bracketing::node(Bracketing left, Bracketing right) {
  if (left.is_empty() || right.is_empty())
    throw std::invalid_argument("node: children must be nonempty");
  size_t len = left.len_ + right.len_;
  return Bracketing(std::make_shared<const Node>(Node{std::move(left), std::move(right)}), len);
}

const Bracketing& Bracketing::left() const {
  if (!is_node()) throw std::logic_error("left() on non-node bracketing");
  return node_->left;
}

const Bracketing& Bracketing::right() const {
  if (!is_node()) throw std::logic_error("right() on non-node bracketing");
  return node_->right;
}

bool Bracketing::operator==(const Bracketing& other) const {
  if (len_ != other.len_) return false;
  if (!is_node()) return true;
  if (node_ == other.node_) return true;
  return left() == other.left() && right() == other.right();
}

namespace {

void render(const Bracketing& b, bool outer, std::string& out) {
  if (b.is_empty()) return;
  if (b.is_leaf()) {
    out += '-';
    return;
  }
  if (!outer) out += '(';
  render(b.left(), false, out);
  render(b.right(), false, out);
  if (!outer) out += ')';
}

}  // namespace

std::string Bracketing::str() const {
  if (is_empty()) return "()";
  std::string out;
  render(*this, true, out);
  return out;
}

namespace {

Result<Bracketing> parse_term(const std::string& s, size_t& i);

Result<Bracketing> parse_run(const std::string& s, size_t& i, char stop) {
  std::vector<Bracketing> terms;
  while (i < s.size() && s[i] != stop) {
    auto t = parse_term(s, i);
    if (!t) return t;
    terms.push_back(*t);
  }
  if (terms.empty()) return Result<Bracketing>::fail("empty group");
  if (terms.size() == 1) return terms[0];
  if (terms.size() == 2) return Bracketing::node(terms[0], terms[1]);
  return Result<Bracketing>::fail("ambiguous run of more than two factors");
}

Result<Bracketing> parse_term(const std::string& s, size_t& i) {
  if (s[i] == '-') {
    ++i;
    return Bracketing::leaf();
  }
  if (s[i] == '(') {
    ++i;
    auto inner = parse_run(s, i, ')');
    if (!inner) return inner;
    if (i >= s.size() || s[i] != ')') return Result<Bracketing>::fail("unbalanced '('");
    ++i;
    return inner;
  }
  return Result<Bracketing>::fail(cat("unexpected character '", s[i], "'"));
}

}  // namespace

Result<Bracketing> Bracketing::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s == "()") return Bracketing::empty();
  size_t i = 0;
  auto b = parse_run(s, i, '\0');
  if (!b) return b;
  if (i != s.size()) return Result<Bracketing>::fail("trailing characters");
  return b;
}

const Bracketing& Bracketing::at(const std::string& pos) const {
  const Bracketing* cur = this;
  for (char c : pos) {
    if (!cur->is_node()) throw std::invalid_argument("address walks through a leaf");
    if (c == 'L')
      cur = &cur->left();
    else if (c == 'R')
      cur = &cur->right();
    else
      throw std::invalid_argument("address characters must be L or R");
  }
  return *cur;
}

Bracketing Bracketing::replace(const std::string& pos, const Bracketing& sub) const {
  if (pos.empty()) return sub;
  if (!is_node()) throw std::invalid_argument("address walks through a leaf");
  std::string rest = pos.substr(1);
  if (pos[0] == 'L') return node(left().replace(rest, sub), right());
  if (pos[0] == 'R') return node(left(), right().replace(rest, sub));
  throw std::invalid_argument("address characters must be L or R");
}

size_t Bracketing::leaf_offset(const std::string& pos) const {
  const Bracketing* cur = this;
  size_t off = 0;
  for (char c : pos) {
    if (c == 'L') {
      cur = &cur->left();
    } else {
      off += cur->left().length();
      cur = &cur->right();
    }
  }
  return off;
}

Result<std::string> Bracketing::subtree_spanning(size_t lo, size_t hi) const {
  if (lo >= hi || hi > length())
    return Result<std::string>::fail("empty or out-of-range leaf interval");
  const Bracketing* cur = this;
  std::string pos;
  for (;;) {
    if (lo == 0 && hi == cur->length()) return pos;
    if (!cur->is_node())
      return Result<std::string>::fail("interval does not align with a subtree");
    size_t split = cur->left().length();
    if (hi <= split) {
      pos += 'L';
      cur = &cur->left();
    } else if (lo >= split) {
      pos += 'R';
      lo -= split;
      hi -= split;
      cur = &cur->right();
    } else {
      return Result<std::string>::fail("interval straddles a subtree boundary");
    }
  }
}

Bracketing Bracketing::substitute_leaf(size_t k, const Bracketing& sub) const {
  if (is_leaf()) {
    if (k != 0) throw std::invalid_argument("leaf index out of range");
    return sub;
  }
  if (!is_node()) throw std::invalid_argument("substitute_leaf on empty bracketing");
  size_t split = left().length();
  if (k < split) return node(left().substitute_leaf(k, sub), right());
  return node(left(), right().substitute_leaf(k - split, sub));
}

std::string move_str(const AssocMove& m) {
  std::string dir = m.direction == AssocMove::Direction::left_to_right ? "(xy)z->x(yz)"
                                                                       : "x(yz)->(xy)z";
  return cat(dir, " @ ", m.position.empty() ? "root" : m.position);
}

Result<Bracketing> apply_move(const Bracketing& b, const AssocMove& m) {
  const Bracketing* target;
  try {
    target = &b.at(m.position);
  } catch (const std::invalid_argument& e) {
    return Result<Bracketing>::fail(cat("bad address '", m.position, "': ", e.what()));
  }
  if (!target->is_node())
    return Result<Bracketing>::fail(cat("no redex at '", m.position, "': not a node"));
  if (m.direction == AssocMove::Direction::left_to_right) {
    if (!target->left().is_node())
      return Result<Bracketing>::fail(cat("no redex at '", m.position, "': left child is a leaf"));
    const Bracketing& x = target->left().left();
    const Bracketing& y = target->left().right();
    const Bracketing& z = target->right();
    return b.replace(m.position, Bracketing::node(x, Bracketing::node(y, z)));
  }
  if (!target->right().is_node())
    return Result<Bracketing>::fail(cat("no redex at '", m.position, "': right child is a leaf"));
  const Bracketing& x = target->left();
  const Bracketing& y = target->right().left();
  const Bracketing& z = target->right().right();
  return b.replace(m.position, Bracketing::node(Bracketing::node(x, y), z));
}

Result<Bracketing> apply_chain(const Bracketing& b, const std::vector<AssocMove>& moves) {
  Bracketing cur = b;
  for (const AssocMove& m : moves) {
    auto next = apply_move(cur, m);
    if (!next) return next;
    cur = *next;
  }
  return cur;
}

std::vector<Bracketing> enumerate_bracketings(size_t n) {
  if (n > 12) throw std::invalid_argument("enumerate_bracketings: length capped at 12");
  if (n == 0) return {Bracketing::empty()};
  if (n == 1) return {Bracketing::leaf()};
  std::vector<Bracketing> out;
  for (size_t k = 1; k < n; ++k) {
    for (const Bracketing& l : enumerate_bracketings(k))
      for (const Bracketing& r : enumerate_bracketings(n - k))
        out.push_back(Bracketing::node(l, r));
  }
  return out;
}

Bracketing left_normalized(size_t n) {
  if (n == 0) return Bracketing::empty();
  Bracketing b = Bracketing::leaf();
  for (size_t i = 1; i < n; ++i) b = Bracketing::node(b, Bracketing::leaf());
  return b;
}

bool is_left_normalized(const Bracketing& b) {
  if (!b.is_node()) return true;
  return b.right().is_leaf() && is_left_normalized(b.left());
}

std::vector<AssocMove> normalize_moves(const Bracketing& b) {
  std::vector<AssocMove> moves;
  Bracketing root = b;
  std::string pos;
  // Walking a pointer down the tree: whenever the focus has a compound right
  // factor, rewrite there; otherwise descend into the left factor.
  const Bracketing* cur = &root;
  while (cur->is_node()) {
    if (cur->right().is_node()) {
      AssocMove m{pos, AssocMove::Direction::right_to_left};
      root = apply_move(root, m).take();
      moves.push_back(std::move(m));
      cur = &root.at(pos);
    } else {
      pos += 'L';
      cur = &cur->left();
    }
  }
  return moves;
}

Result<std::vector<AssocMove>> associator_chain(const Bracketing& from, const Bracketing& to) {
  if (from.length() != to.length())
    return Result<std::vector<AssocMove>>::fail(
        cat("length mismatch: ", from.length(), " vs ", to.length()));
  if (from == to) return std::vector<AssocMove>{};
  std::vector<AssocMove> chain = normalize_moves(from);
  std::vector<AssocMove> up = normalize_moves(to);
  for (auto it = up.rbegin(); it != up.rend(); ++it) chain.push_back(it->inverse());
  return chain;
}

Result<std::vector<AssocMove>> chain_with_frozen_segment(const Bracketing& from,
                                                         const Bracketing& to, size_t lo,
                                                         size_t hi) {
  if (from.length() != to.length())
    return Result<std::vector<AssocMove>>::fail(
        cat("length mismatch: ", from.length(), " vs ", to.length()));
  auto pos_from = from.subtree_spanning(lo, hi);
  if (!pos_from)
    return Result<std::vector<AssocMove>>::fail(
        cat("frozen segment in source: ", pos_from.error()));
  auto pos_to = to.subtree_spanning(lo, hi);
  if (!pos_to)
    return Result<std::vector<AssocMove>>::fail(
        cat("frozen segment in target: ", pos_to.error()));
  if (from.at(*pos_from) != to.at(*pos_to))
    return Result<std::vector<AssocMove>>::fail("frozen segment shapes differ");
  // Collapse the frozen subtree to a single leaf on both sides; move
  // addresses transfer verbatim back to the expanded trees.
  Bracketing from_c = from.replace(*pos_from, Bracketing::leaf());
  Bracketing to_c = to.replace(*pos_to, Bracketing::leaf());
  return associator_chain(from_c, to_c);
}

std::vector<AssocMove> legal_moves(const Bracketing& b) {
  std::vector<AssocMove> out;
  struct Item {
    std::string pos;
    const Bracketing* tree;
  };
  std::vector<Item> stack{{"", &b}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (!it.tree->is_node()) continue;
    if (it.tree->left().is_node())
      out.push_back({it.pos, AssocMove::Direction::left_to_right});
    if (it.tree->right().is_node())
      out.push_back({it.pos, AssocMove::Direction::right_to_left});
    stack.push_back({it.pos + 'R', &it.tree->right()});
    stack.push_back({it.pos + 'L', &it.tree->left()});
  }
  std::sort(out.begin(), out.end(), [](const AssocMove& a, const AssocMove& b2) {
    return std::tie(a.position, a.direction) < std::tie(b2.position, b2.direction);
  });
  return out;
}

}  // namespace bipaste

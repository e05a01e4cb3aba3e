#include "ecctree/canonical.hpp"

#include <algorithm>
#include <cstdio>

namespace ecctree {

namespace {

// Codes for every vertex of the subtree hanging below `root`, where
// `blocked` (if not equal to root) is treated as absent.
std::string rooted_code(const Tree& t, Vertex root, Vertex blocked) {
  const std::size_t n = t.order();
  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(n, root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex v = order[head];
    for (Vertex w : t.neighbors(v)) {
      if (w == parent[v] || w == blocked) continue;
      parent[w] = v;
      order.push_back(w);
    }
  }

  std::vector<std::vector<std::string>> child_codes(n);
  std::string result;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    auto& kids = child_codes[v];
    std::sort(kids.begin(), kids.end());
    std::size_t len = 2;
    for (const auto& k : kids) len += k.size();
    std::string code;
    code.reserve(len);
    code.push_back('(');
    for (auto& k : kids) code += k;
    code.push_back(')');
    kids.clear();
    kids.shrink_to_fit();
    if (v == root) {
      result = std::move(code);
    } else {
      child_codes[parent[v]].push_back(std::move(code));
    }
  }
  return result;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

CanonicalForm canonical_form(const Tree& t) {
  auto profile = ecc_profile(t);
  if (profile.center.size() == 1) {
    return CanonicalForm(t.order(), rooted_code(t, profile.center[0], profile.center[0]));
  }
  Vertex a = profile.center[0];
  Vertex b = profile.center[1];
  auto ca = rooted_code(t, a, b);
  auto cb = rooted_code(t, b, a);
  if (cb < ca) std::swap(ca, cb);
  return CanonicalForm(t.order(), "(" + ca + cb + ")");
}

bool is_isomorphic(const Tree& a, const Tree& b) {
  return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

std::string CanonicalForm::hex() const {
  char header[9];
  std::snprintf(header, sizeof header, "%08zx", order_);
  std::string out(header);
  static constexpr char kDigits[] = "0123456789abcdef";
  for (std::size_t i = 0; i < code_.size(); i += 4) {
    unsigned nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nibble <<= 1;
      if (i + j < code_.size() && code_[i + j] == '(') nibble |= 1;
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

CanonicalForm CanonicalForm::from_hex(std::string_view hex) {
  auto bad = [&] { return Error(ErrorCode::ParseError, "bad canonical form '" + std::string(hex) + "'"); };
  if (hex.size() < 9) throw bad();
  std::size_t order = 0;
  for (char c : hex.substr(0, 8)) {
    int d = hex_digit(c);
    if (d < 0) throw bad();
    order = order * 16 + static_cast<std::size_t>(d);
  }
  if (order < 2 || order > kMaxOrder) throw bad();

  std::string code;
  int depth = 0;
  for (char c : hex.substr(8)) {
    int d = hex_digit(c);
    if (d < 0) throw bad();
    for (int bit = 3; bit >= 0 && (code.empty() || depth > 0); --bit) {
      bool open = (d >> bit) & 1;
      if (!open && depth == 0) throw bad();
      depth += open ? 1 : -1;
      code.push_back(open ? '(' : ')');
    }
  }
  if (depth != 0 || (code.size() != 2 * order && code.size() != 2 * order + 2)) throw bad();
  CanonicalForm form(order, std::move(code));
  // Reject codes that decode but are not in canonical (sorted) shape.
  bool ok = false;
  try {
    ok = canonical_form(form.to_tree()) == form;
  } catch (const std::exception&) {
  }
  if (!ok) throw bad();
  return form;
}

Tree CanonicalForm::to_tree() const {
  // A code of 2n+2 symbols has a virtual root whose two children are joined.
  const bool virtual_root = code_.size() == 2 * order_ + 2;
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  std::vector<Vertex> root_children;
  Vertex next = 0;
  bool at_root = true;
  for (char c : code_) {
    if (c == '(') {
      if (at_root && virtual_root) {
        at_root = false;
        stack.push_back(static_cast<Vertex>(-1));
        continue;
      }
      at_root = false;
      Vertex v = next++;
      if (!stack.empty()) {
        if (stack.back() == static_cast<Vertex>(-1)) {
          root_children.push_back(v);
        } else {
          edges.emplace_back(stack.back(), v);
        }
      }
      stack.push_back(v);
    } else {
      stack.pop_back();
    }
  }
  if (virtual_root) edges.emplace_back(root_children.at(0), root_children.at(1));
  return Tree::from_edge_list(order_, edges);
}

}  // namespace ecctree

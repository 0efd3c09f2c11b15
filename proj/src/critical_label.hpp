#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace limbforge::detail {

// Entry (value, critical). A label is strictly decreasing in value; only the
// last entry can be non-critical. A critical entry m marks a node with two
// branches of value m; the tail describes the rest without that node's part.
struct LabelEntry {
  std::size_t value;
  bool critical;
};
using Label = std::vector<LabelEntry>;

inline const Label& leaf_label() {
  static const Label leaf{{0, false}};
  return leaf;
}

// Label of a rooted structure from the labels of its child branches. With
// smooth set the root is a bag whose uplink is cut: a root left with a single
// element is no node at all, so the structure is that element's.
inline Label combine(std::vector<Label> kids, bool smooth = false) {
  if (kids.empty()) return leaf_label();
  if (smooth && kids.size() == 1) return std::move(kids[0]);
  std::size_t m = 0;
  for (const auto& l : kids) m = std::max(m, l[0].value);
  if (m == 0) return {{1, false}};
  std::vector<std::size_t> top;
  for (std::size_t i = 0; i < kids.size(); ++i)
    if (kids[i][0].value == m) top.push_back(i);
  if (top.size() >= 3) return {{m + 1, false}};
  if (top.size() == 2) {
    if (kids[top[0]][0].critical || kids[top[1]][0].critical) return {{m + 1, false}};
    return {{m, true}};
  }
  Label& j = kids[top[0]];
  if (!j[0].critical) return {{m, false}};
  std::vector<Label> rest;
  for (std::size_t i = 0; i < kids.size(); ++i)
    if (i != top[0]) rest.push_back(std::move(kids[i]));
  if (j.size() > 1) rest.emplace_back(j.begin() + 1, j.end());
  Label tail = combine(std::move(rest), smooth);
  if (tail[0].value + 1 > m) return {{m + 1, false}};
  Label out{{m, true}};
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace limbforge::detail

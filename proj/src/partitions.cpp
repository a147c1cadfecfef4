#include "cobord/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cobord/error.hpp"

namespace cobord {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition current;
  // Largest part last-chosen first yields descending lex; collect then sort.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= n; ++k) p[k] += p[k - part];
  return p[n];
}

std::int64_t restricted_partition_count(int n, const std::vector<int>& parts) {
  if (n < 0) return 0;
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part : parts) {
    if (part < 1) continue;
    for (int k = part; k <= n; ++k) p[k] += p[k - part];
  }
  return p[n];
}

std::string partition_key(const Partition& p) {
  Partition asc(p);
  std::sort(asc.begin(), asc.end());
  std::string out;
  for (std::size_t i = 0; i < asc.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(asc[i]);
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw DomainError("bad partition part '" + item + "'");
      p.push_back(v);
    } catch (const std::logic_error&) {
      throw DomainError("bad partition part '" + item + "'");
    }
  }
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

}  // namespace cobord

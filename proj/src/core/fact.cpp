#include "thkg/core/fact.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

namespace thkg {

namespace {

// Shortest representation that round-trips a double.
std::string number_repr(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, end);
}

void append_value(std::string& out, const Value& v) {
  if (v.is_entity()) {
    out += 'e';
    out += v.entity_id();
  } else {
    out += 'n';
    out += number_repr(v.number_value());
  }
}

}  // namespace

std::string triplet_key(const Fact& f) {
  constexpr char sep = '\x1f';
  std::string key = f.s;
  key += sep;
  key += f.r;
  key += sep;
  append_value(key, f.o);

  std::vector<std::string> quals;
  quals.reserve(f.qualifiers.size());
  for (const auto& q : f.qualifiers) {
    std::string item = q.k;
    item += sep;
    append_value(item, q.v);
    quals.push_back(std::move(item));
  }
  std::sort(quals.begin(), quals.end());
  for (const auto& q : quals) {
    key += sep;
    key += q;
  }
  return key;
}

}  // namespace thkg

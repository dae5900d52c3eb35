#pragma once

// Named groups: spec strings such as "S4", "C2xC4", "Q8", "C2^3" and small
// catalogs of pairwise non-isomorphic groups, plus cycle-notation parsing.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "fjh/descriptor.hpp"

namespace fjh {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::size_t parse_count(std::string_view s, std::string_view context) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    fail(ErrorKind::invalid_input, "bad number in group spec '" + std::string(context) + "'");
  return std::stoul(std::string(s));
}

/// (C4 x C2) x| C2 with the generator acting by a^i b^j -> a^i b^(i+j).
inline FiniteGroup group_16_3() {
  FiniteGroup n = direct_product(cyclic(4), cyclic(2));
  return semidirect_product(n, cyclic(2), [](Element h, Element x) {
    if (h == 0) return x;
    Element i = x / 2, j = x % 2;
    return static_cast<Element>(i * 2 + (i + j) % 2);
  });
}

/// Central product C4 o D4: (C4 x C2) x| C2 acting by a^i b^j -> a^(i+2j) b^j.
inline FiniteGroup central_product_c4_d4() {
  FiniteGroup n = direct_product(cyclic(4), cyclic(2));
  return semidirect_product(n, cyclic(2), [](Element h, Element x) {
    if (h == 0) return x;
    Element i = x / 2, j = x % 2;
    return static_cast<Element>(((i + 2 * j) % 4) * 2 + j);
  });
}

inline FiniteGroup named_factor(std::string_view tok) {
  std::string_view whole = tok;
  if (auto caret = tok.find('^'); caret != std::string_view::npos) {
    std::size_t k = parse_count(tok.substr(caret + 1), whole);
    FiniteGroup base = named_factor(tok.substr(0, caret));
    FiniteGroup out;
    for (std::size_t i = 0; i < k; ++i) out = direct_product(out, base);
    return out;
  }
  if (tok == "1" || tok == "e") return FiniteGroup{};
  if (tok == "V4") return direct_product(cyclic(2), cyclic(2));
  if (tok == "G(16,3)") return group_16_3();
  if (tok == "C4oD4") return central_product_c4_d4();
  if (tok == "C4:C4") return metacyclic(4, 4, 3, 0);
  if (tok == "M16") return metacyclic(8, 2, 5, 0);
  if (tok == "SD16") return metacyclic(8, 2, 3, 0);
  if (tok.starts_with("Dic")) return quaternion(parse_count(tok.substr(3), whole));
  if (tok.size() >= 2) {
    std::string_view rest = tok.substr(1);
    switch (tok.front()) {
      case 'C': return cyclic(parse_count(rest, whole));
      case 'D': return dihedral(parse_count(rest, whole));
      case 'S': {
        std::size_t n = parse_count(rest, whole);
        if (n > 8) fail(ErrorKind::cap_exceeded, "symmetric group degree too large");
        return symmetric(n);
      }
      case 'A': {
        std::size_t n = parse_count(rest, whole);
        if (n > 8) fail(ErrorKind::cap_exceeded, "alternating group degree too large");
        return alternating(n);
      }
      case 'Q': {
        std::size_t n = parse_count(rest, whole);
        if (n < 8 || n % 4 != 0) fail(ErrorKind::invalid_input, "quaternion order must be a multiple of 4, at least 8");
        return quaternion(n / 4);
      }
      default: break;
    }
  }
  fail(ErrorKind::invalid_input, "unknown group name '" + std::string(whole) + "'");
}

}  // namespace detail

/// Parses "S5", "C6", "D4" (dihedral of order 8), "Q8", "A5", "Dic3", "C2xC4",
/// "C2^3", and the order-16 names used by order16_catalog(). Factors separated
/// by 'x' are combined by direct product.
inline FiniteGroup parse_group_spec(std::string_view spec, const Limits& limits = {}) {
  spec = detail::trim(spec);
  if (spec.empty()) fail(ErrorKind::invalid_input, "empty group spec");
  FiniteGroup out;
  bool first = true;
  std::size_t start = 0;
  for (std::size_t pos = 0; pos <= spec.size(); ++pos) {
    if (pos < spec.size() && spec[pos] != 'x') continue;
    std::string_view tok = detail::trim(spec.substr(start, pos - start));
    if (tok.empty()) fail(ErrorKind::invalid_input, "empty factor in group spec '" + std::string(spec) + "'");
    FiniteGroup f = detail::named_factor(tok);
    out = first ? std::move(f) : direct_product(out, f);
    first = false;
    start = pos + 1;
  }
  if (out.order() > limits.table_cap) fail(ErrorKind::cap_exceeded, "group exceeds table cap");
  return out;
}

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// One representative of each of the 42 isomorphism classes of order at most 16.
inline std::vector<NamedGroup> order16_catalog() {
  static const char* names[] = {
      "1",    "C2",      "C3",   "C4",   "C2^2",  "C5",     "C6",   "S3",    "C7",   "C8",     "C2xC4",
      "C2^3", "D4",      "Q8",   "C9",   "C3^2",  "C10",    "D5",   "C11",   "C12",  "C2xC6",  "D6",
      "A4",   "Dic3",    "C13",  "C14",  "D7",    "C15",    "C16",  "C4^2",  "C2xC8", "C2^2xC4", "C2^4",
      "C2xD4", "C2xQ8",  "G(16,3)", "C4:C4", "M16", "SD16",  "Q16",  "D8",    "C4oD4"};
  std::vector<NamedGroup> out;
  for (const char* n : names) out.push_back({n, parse_group_spec(n)});
  return out;
}

/// order16_catalog() extended by named groups of orders 17 to 32.
inline std::vector<NamedGroup> order32_catalog() {
  auto out = order16_catalog();
  static const char* more[] = {"C17",    "C18",   "D9",     "C3xC6", "C19",  "C20",   "D10",  "Dic5",
                               "C2xC10", "C21",   "C22",    "D11",   "C23",  "C24",   "S4",   "D12",
                               "Dic6",   "C2xA4", "C3xS3",  "C3xQ8", "C2xD6", "C2^2xC6", "C25", "C5^2",
                               "C26",    "D13",   "C27",    "C3^3",  "C28",  "D14",   "Dic7", "C29",
                               "C30",    "D15",   "C31",    "C32",   "D16",  "Q32",   "C2^5", "C2xC16",
                               "C4xC8",  "C2xD8", "C2^3xC4"};
  for (const char* n : more) out.push_back({n, parse_group_spec(n)});
  return out;
}

// ---------------------------------------------------------------------------
// cycle notation

/// "(1 2 3)(4 5)" on 1-based points; points separated by spaces or commas.
inline Permutation parse_permutation(std::string_view s, std::size_t degree) {
  Permutation p = perm::identity(degree);
  s = detail::trim(s);
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      continue;
    }
    if (s[pos] != '(') fail(ErrorKind::invalid_input, "expected '(' in permutation '" + std::string(s) + "'");
    std::size_t close = s.find(')', pos);
    if (close == std::string_view::npos) fail(ErrorKind::invalid_input, "unbalanced parenthesis in '" + std::string(s) + "'");
    std::vector<std::uint32_t> pts;
    std::string num;
    auto flush = [&]() {
      if (num.empty()) return;
      std::size_t v = detail::parse_count(num, s);
      if (v == 0 || v > degree)
        fail(ErrorKind::invalid_input, "point " + num + " outside 1.." + std::to_string(degree));
      pts.push_back(static_cast<std::uint32_t>(v - 1));
      num.clear();
    };
    for (std::size_t q = pos + 1; q < close; ++q) {
      char c = s[q];
      if (std::isdigit(static_cast<unsigned char>(c))) num += c;
      else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
      else fail(ErrorKind::invalid_input, "unexpected character in permutation '" + std::string(s) + "'");
    }
    flush();
    std::vector<char> seen(degree, 0);
    for (auto x : pts) {
      if (seen[x]) fail(ErrorKind::invalid_input, "repeated point in a cycle of '" + std::string(s) + "'");
      seen[x] = 1;
    }
    // left-to-right product of cycles: apply earlier cycles first
    Permutation c = perm::identity(degree);
    for (std::size_t i = 0; i < pts.size(); ++i) c[pts[i]] = pts[(i + 1) % pts.size()];
    p = perm::compose(p, c);
    pos = close + 1;
  }
  return p;
}

/// "(1 2),(1 2 3 4)": permutations separated by commas outside parentheses.
inline std::vector<Permutation> parse_generators(std::string_view s, std::size_t degree) {
  std::vector<Permutation> out;
  std::size_t depth = 0, start = 0;
  std::string_view body = detail::trim(s);
  auto emit = [&](std::size_t end) {
    std::string_view piece = detail::trim(body.substr(start, end - start));
    if (!piece.empty()) out.push_back(parse_permutation(piece, degree));
  };
  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c == '(') ++depth;
    else if (c == ')') {
      if (depth == 0) fail(ErrorKind::invalid_input, "unbalanced parenthesis in '" + std::string(s) + "'");
      --depth;
    } else if (depth == 0 && c == ',') {
      emit(i);
      start = i + 1;
    }
  }
  if (depth != 0) fail(ErrorKind::invalid_input, "unbalanced parenthesis in '" + std::string(s) + "'");
  emit(body.size());
  return out;
}

}  // namespace fjh

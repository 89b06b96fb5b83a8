#pragma once

#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ovdiam/errors.hpp"

namespace ovdiam {

// Gadget vertex families, in canonical id order.
enum class Family : std::uint8_t { U, V, ABC, AB, ADX, ADY, DC, DCB };

inline constexpr std::array<Family, 8> kAllFamilies = {
    Family::U, Family::V, Family::ABC, Family::AB, Family::ADX, Family::ADY, Family::DC, Family::DCB};

inline constexpr std::string_view family_name(Family f) {
  constexpr std::array<std::string_view, 8> names = {"U",   "V",   "ABC", "AB",
                                                     "ADX", "ADY", "DC",  "DCB"};
  return names[static_cast<std::size_t>(f)];
}

inline constexpr bool is_hub(Family f) { return f == Family::U || f == Family::V; }

inline constexpr bool has_index_fields(Family f) {
  return f == Family::AB || f == Family::ADX || f == Family::ADY || f == Family::DC;
}

inline constexpr std::size_t vector_field_count(Family f) {
  if (is_hub(f)) return 0;
  return has_index_fields(f) ? 2 : 3;
}

// Ordered coordinate triple (i, j, k), 1-based; repeats allowed.
struct IndexTriple {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint32_t k = 0;

  std::array<std::uint32_t, 3> slots() const { return {i, j, k}; }
  friend auto operator<=>(const IndexTriple&, const IndexTriple&) = default;
};

// Identity of a gadget vertex. Vector fields are 0-based positions in S:
//   ABC(a,b,c)  DCB(d,c,b)  AB(a,b;t)  DC(d,c;t)  ADX(a,d;t)  ADY(a,d;t)
// Unused fields stay zero so that defaulted comparison gives the canonical
// (family, then lexicographic) order.
struct VertexLabel {
  Family family = Family::U;
  std::array<std::uint32_t, 3> vec{};
  IndexTriple idx{};

  static VertexLabel u() { return {Family::U, {}, {}}; }
  static VertexLabel v() { return {Family::V, {}, {}}; }
  static VertexLabel abc(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return {Family::ABC, {a, b, c}, {}};
  }
  static VertexLabel dcb(std::uint32_t d, std::uint32_t c, std::uint32_t b) {
    return {Family::DCB, {d, c, b}, {}};
  }
  static VertexLabel ab(std::uint32_t a, std::uint32_t b, IndexTriple t) {
    return {Family::AB, {a, b, 0}, t};
  }
  static VertexLabel dc(std::uint32_t d, std::uint32_t c, IndexTriple t) {
    return {Family::DC, {d, c, 0}, t};
  }
  static VertexLabel adx(std::uint32_t a, std::uint32_t d, IndexTriple t) {
    return {Family::ADX, {a, d, 0}, t};
  }
  static VertexLabel ady(std::uint32_t a, std::uint32_t d, IndexTriple t) {
    return {Family::ADY, {a, d, 0}, t};
  }

  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

struct VertexLabelHash {
  std::size_t operator()(const VertexLabel& l) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(l.family);
    auto mix = [&h](std::uint64_t x) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (auto x : l.vec) mix(x);
    mix(l.idx.i);
    mix(l.idx.j);
    mix(l.idx.k);
    return static_cast<std::size_t>(h);
  }
};

inline std::string to_string(const VertexLabel& l) {
  std::string out(family_name(l.family));
  const std::size_t nvec = vector_field_count(l.family);
  if (nvec == 0) return out;
  out += '(';
  for (std::size_t i = 0; i < nvec; ++i) {
    if (i) out += ',';
    out += std::to_string(l.vec[i]);
  }
  if (has_index_fields(l.family)) {
    out += ';' + std::to_string(l.idx.i) + ',' + std::to_string(l.idx.j) + ',' +
           std::to_string(l.idx.k);
  }
  out += ')';
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const VertexLabel& l) {
  return os << to_string(l);
}

// Inverse of to_string. Throws std::invalid_argument on grammar errors.
inline VertexLabel parse_label(std::string_view text) {
  auto fail = [&text]() -> VertexLabel {
    throw std::invalid_argument("malformed vertex label \"" + std::string(text) + "\"");
  };
  const auto open = text.find('(');
  const auto name = text.substr(0, open);
  Family fam{};
  bool found = false;
  for (auto f : kAllFamilies) {
    if (family_name(f) == name) {
      fam = f;
      found = true;
    }
  }
  if (!found) return fail();
  VertexLabel l{fam, {}, {}};
  if (is_hub(fam)) return open == std::string_view::npos ? l : fail();
  if (open == std::string_view::npos || text.back() != ')') return fail();

  auto body = text.substr(open + 1, text.size() - open - 2);
  std::vector<std::uint32_t> numbers;
  std::size_t semicolon_at = 0;
  std::size_t pos = 0;
  while (true) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(body.data() + pos, body.data() + body.size(), value);
    if (ec != std::errc{} || ptr == body.data() + pos) return fail();
    numbers.push_back(value);
    pos = static_cast<std::size_t>(ptr - body.data());
    if (pos == body.size()) break;
    if (body[pos] == ';') {
      if (semicolon_at != 0) return fail();
      semicolon_at = numbers.size();
    } else if (body[pos] != ',') {
      return fail();
    }
    ++pos;
  }
  const std::size_t nvec = vector_field_count(fam);
  if (has_index_fields(fam)) {
    if (numbers.size() != nvec + 3 || semicolon_at != nvec) return fail();
    l.idx = {numbers[nvec], numbers[nvec + 1], numbers[nvec + 2]};
    if (l.idx.i == 0 || l.idx.j == 0 || l.idx.k == 0) return fail();
  } else if (numbers.size() != nvec || semicolon_at != 0) {
    return fail();
  }
  for (std::size_t i = 0; i < nvec; ++i) l.vec[i] = numbers[i];
  return l;
}

}  // namespace ovdiam

template <>
struct std::hash<ovdiam::VertexLabel> : ovdiam::VertexLabelHash {};

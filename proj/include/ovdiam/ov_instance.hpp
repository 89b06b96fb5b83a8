#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ovdiam/bitvector.hpp"
#include "ovdiam/errors.hpp"

namespace ovdiam {

// The vector set S of an OV instance. S is a sequence: duplicates are legal
// and vector identity is the position in the sequence.
class OvInstance {
 public:
  OvInstance(std::size_t ell, std::vector<BitVector> vectors)
      : ell_(ell), vectors_(std::move(vectors)) {
    if (ell_ == 0) throw std::invalid_argument("vector dimension must be >= 1");
    if (vectors_.empty()) throw std::invalid_argument("instance must hold >= 1 vector");
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      if (vectors_[i].size() != ell_) {
        throw std::invalid_argument("vector " + std::to_string(i) + " has length " +
                                    std::to_string(vectors_[i].size()) + ", expected " +
                                    std::to_string(ell_));
      }
    }
  }

  std::size_t size() const noexcept { return vectors_.size(); }
  std::size_t dimension() const noexcept { return ell_; }
  const BitVector& operator[](std::size_t i) const { return vectors_[i]; }
  const BitVector& at(std::size_t i) const { return vectors_.at(i); }
  std::span<const BitVector> vectors() const noexcept { return vectors_; }

  // 1-based coordinate access, matching [ell].
  bool bit(std::size_t vector, std::size_t coord) const {
    return vectors_[vector].test(coord - 1);
  }

  friend bool operator==(const OvInstance&, const OvInstance&) = default;

 private:
  std::size_t ell_;
  std::vector<BitVector> vectors_;
};

// k vector indices whose coordinate-wise product is zero everywhere.
struct OrthWitness {
  std::vector<std::size_t> indices;

  std::size_t arity() const noexcept { return indices.size(); }
  friend bool operator==(const OrthWitness&, const OrthWitness&) = default;
};

inline std::string to_string(const OrthWitness& w) {
  std::string out;
  for (std::size_t i = 0; i < w.indices.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.indices[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format: "N ell" header, then N rows of exactly ell characters in {0,1}.

inline OvInstance parse_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(1, "missing header \"N ell\"");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::istringstream header(line);
  long long n = 0;
  long long ell = 0;
  std::string extra;
  if (!(header >> n >> ell) || (header >> extra)) {
    throw ParseError(line_no, "malformed header \"" + line + "\", expected \"N ell\"");
  }
  if (n < 1 || ell < 1) {
    throw ParseError(line_no, "header values must be positive, got \"" + line + "\"");
  }

  std::vector<BitVector> rows;
  rows.reserve(static_cast<std::size_t>(n));
  while (rows.size() < static_cast<std::size_t>(n)) {
    if (!std::getline(in, line)) {
      throw ParseError(line_no + 1, "expected " + std::to_string(n) + " rows, found " +
                                        std::to_string(rows.size()));
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != static_cast<std::size_t>(ell)) {
      throw ParseError(line_no, "row " + std::to_string(rows.size() + 1) + " has length " +
                                    std::to_string(line.size()) + ", expected ell=" +
                                    std::to_string(ell));
    }
    try {
      rows.push_back(BitVector::from_string(line));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line != "\r") {
      throw ParseError(line_no, "unexpected content after " + std::to_string(n) + " rows");
    }
  }
  return OvInstance(static_cast<std::size_t>(ell), std::move(rows));
}

inline OvInstance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

inline void write_instance(std::ostream& out, const OvInstance& inst) {
  out << inst.size() << ' ' << inst.dimension() << '\n';
  for (const auto& v : inst.vectors()) out << v.to_string() << '\n';
}

inline std::string write_instance(const OvInstance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

// ---------------------------------------------------------------------------
// Brute-force oracles. Tuples range over indices WITH repetition.

namespace detail {

inline void check_indices(const OvInstance& inst, std::span<const std::size_t> indices) {
  for (auto i : indices) {
    if (i >= inst.size()) {
      throw std::out_of_range("vector index " + std::to_string(i) + " out of range [0, " +
                              std::to_string(inst.size()) + ")");
    }
  }
}

// AND of the selected vectors, word by word.
inline std::vector<std::uint64_t> common_ones(const OvInstance& inst,
                                              std::span<const std::size_t> indices) {
  auto first = inst[indices.front()].words();
  std::vector<std::uint64_t> acc(first.begin(), first.end());
  for (std::size_t t = 1; t < indices.size(); ++t) {
    auto w = inst[indices[t]].words();
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] &= w[i];
  }
  return acc;
}

inline bool all_zero(std::span<const std::uint64_t> words) {
  return std::all_of(words.begin(), words.end(), [](auto w) { return w == 0; });
}

}  // namespace detail

inline bool is_orthogonal(const OvInstance& inst, std::span<const std::size_t> indices) {
  if (indices.empty()) throw std::invalid_argument("empty tuple");
  detail::check_indices(inst, indices);
  return detail::all_zero(detail::common_ones(inst, indices));
}

inline bool is_orthogonal(const OvInstance& inst, std::initializer_list<std::size_t> indices) {
  return is_orthogonal(inst, std::span<const std::size_t>(indices.begin(), indices.size()));
}

// Minimum 1-based coordinate where every selected vector is 1; nullopt iff the
// tuple is orthogonal.
inline std::optional<std::size_t> first_common_one(const OvInstance& inst,
                                                   std::span<const std::size_t> indices) {
  if (indices.size() < 2 || indices.size() > 4) {
    throw std::invalid_argument("first_common_one takes 2 to 4 vector indices");
  }
  detail::check_indices(inst, indices);
  const auto acc = detail::common_ones(inst, indices);
  for (std::size_t w = 0; w < acc.size(); ++w) {
    if (acc[w] != 0) {
      return w * BitVector::kWordBits + static_cast<std::size_t>(std::countr_zero(acc[w])) + 1;
    }
  }
  return std::nullopt;
}

inline std::optional<std::size_t> first_common_one(const OvInstance& inst,
                                                   std::initializer_list<std::size_t> indices) {
  return first_common_one(inst, std::span<const std::size_t>(indices.begin(), indices.size()));
}

// Lexicographically first orthogonal k-tuple (row-major over indices with
// repetition), or nullopt. Exhaustive O(N^k * ell / 64) scan; a prefix whose
// AND is already zero completes with all-zero indices, which is the
// lexicographic minimum among its completions.
inline std::optional<OrthWitness> find_orthogonal_tuple(const OvInstance& inst, std::size_t k) {
  if (k < 2 || k > 4) throw std::invalid_argument("arity must be 2, 3 or 4");
  const std::size_t n = inst.size();
  const std::size_t words = inst[0].words().size();

  std::vector<std::size_t> tuple(k, 0);
  std::vector<std::vector<std::uint64_t>> prefix(k, std::vector<std::uint64_t>(words));

  // Depth-first in lexicographic order; prefix[d] holds the AND of tuple[0..d].
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    for (std::size_t idx = 0; idx < n; ++idx) {
      tuple[depth] = idx;
      auto w = inst[idx].words();
      for (std::size_t i = 0; i < words; ++i) {
        prefix[depth][i] = depth == 0 ? w[i] : (prefix[depth - 1][i] & w[i]);
      }
      if (detail::all_zero(prefix[depth])) {
        std::fill(tuple.begin() + static_cast<std::ptrdiff_t>(depth) + 1, tuple.end(), 0);
        return true;
      }
      if (depth + 1 < k && self(self, depth + 1)) return true;
    }
    return false;
  };
  if (search(search, 0)) return OrthWitness{tuple};
  return std::nullopt;
}

// Every orthogonal k-tuple with repetition, in lexicographic order.
inline std::vector<OrthWitness> all_orthogonal_tuples(const OvInstance& inst, std::size_t k) {
  if (k < 2 || k > 4) throw std::invalid_argument("arity must be 2, 3 or 4");
  std::vector<OrthWitness> out;
  std::vector<std::size_t> tuple(k, 0);
  auto walk = [&](auto&& self, std::size_t depth) -> void {
    if (depth == k) {
      if (is_orthogonal(inst, tuple)) out.push_back(OrthWitness{tuple});
      return;
    }
    for (std::size_t idx = 0; idx < inst.size(); ++idx) {
      tuple[depth] = idx;
      self(self, depth + 1);
    }
  };
  walk(walk, 0);
  return out;
}

}  // namespace ovdiam

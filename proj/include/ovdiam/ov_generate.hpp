#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ovdiam/ov_instance.hpp"
#include "ovdiam/random.hpp"

namespace ovdiam {

enum class GenMode {
  NoQuadruple,       // no orthogonal 4-tuple (hence no orthogonal triple)
  PlantedQuadruple,  // an orthogonal 4-tuple but no orthogonal triple
};

inline std::string_view to_string(GenMode m) {
  return m == GenMode::NoQuadruple ? "no-quad" : "planted";
}

inline GenMode parse_gen_mode(std::string_view s) {
  if (s == "no-quad" || s == "no-quadruple") return GenMode::NoQuadruple;
  if (s == "planted" || s == "planted-quadruple") return GenMode::PlantedQuadruple;
  throw std::invalid_argument("unknown mode \"" + std::string(s) +
                              "\" (expected no-quad or planted)");
}

struct GenParams {
  std::size_t n = 4;
  std::size_t ell = 4;
  GenMode mode = GenMode::NoQuadruple;
  double density = 0.85;  // probability of a 1 in a free coordinate
  std::uint64_t seed = 1;
  std::size_t max_attempts = 10000;
};

struct GenResult {
  OvInstance instance;
  std::optional<OrthWitness> witness;  // set in planted mode
  std::size_t attempts = 0;
};

class GenerationBudgetExhausted : public std::runtime_error {
 public:
  explicit GenerationBudgetExhausted(std::size_t attempts)
      : std::runtime_error("attempt budget exhausted after " + std::to_string(attempts) +
                           " attempts; parameters make the requested mode improbable") {}
};

namespace detail {

inline BitVector random_vector(std::mt19937_64& rng, std::size_t ell, double density) {
  BitVector v(ell);
  for (std::size_t i = 0; i < ell; ++i) v.set(i, unit_draw(rng) < density);
  return v;
}

// Four vectors at distinct positions that are jointly orthogonal but where
// each of them is the only zero on at least one coordinate, so every triple
// of them shares a one. Needs n >= 4 and ell >= 4; otherwise the sample is
// plain random and the certifier rejects it.
inline std::vector<BitVector> planted_sample(std::mt19937_64& rng, const GenParams& p) {
  std::vector<BitVector> rows;
  rows.reserve(p.n);
  for (std::size_t i = 0; i < p.n; ++i) rows.push_back(random_vector(rng, p.ell, p.density));
  if (p.n < 4 || p.ell < 4) return rows;

  std::vector<std::size_t> positions(p.n);
  std::iota(positions.begin(), positions.end(), 0);
  for (std::size_t i = 0; i < 4; ++i) {
    std::swap(positions[i], positions[i + index_draw(rng, p.n - i)]);
  }
  std::vector<std::size_t> coords(p.ell);
  std::iota(coords.begin(), coords.end(), 0);
  for (std::size_t i = 0; i + 1 < p.ell; ++i) {
    std::swap(coords[i], coords[i + index_draw(rng, p.ell - i)]);
  }
  for (std::size_t c = 0; c < p.ell; ++c) {
    const std::size_t owner = c < 4 ? c : index_draw(rng, 4);
    for (std::size_t r = 0; r < 4; ++r) {
      const bool one = r != owner && (c < 4 || unit_draw(rng) < p.density);
      rows[positions[r]].set(coords[c], one);
    }
  }
  return rows;
}

}  // namespace detail

// Rejection sampler certified by find_orthogonal_tuple. Deterministic in
// params.seed.
inline GenResult gen_instance(const GenParams& params) {
  if (params.n < 1 || params.ell < 1) throw std::invalid_argument("n and ell must be >= 1");
  if (!(params.density > 0.0 && params.density <= 1.0)) {
    throw std::invalid_argument("density must lie in (0, 1]");
  }
  std::mt19937_64 rng(params.seed);
  for (std::size_t attempt = 1; attempt <= params.max_attempts; ++attempt) {
    std::vector<BitVector> rows;
    if (params.mode == GenMode::PlantedQuadruple) {
      rows = detail::planted_sample(rng, params);
    } else {
      rows.reserve(params.n);
      for (std::size_t i = 0; i < params.n; ++i) {
        rows.push_back(detail::random_vector(rng, params.ell, params.density));
      }
    }
    OvInstance inst(params.ell, std::move(rows));
    if (params.mode == GenMode::NoQuadruple) {
      if (!find_orthogonal_tuple(inst, 4)) return {std::move(inst), std::nullopt, attempt};
    } else if (!find_orthogonal_tuple(inst, 3)) {
      if (auto quad = find_orthogonal_tuple(inst, 4)) {
        return {std::move(inst), std::move(quad), attempt};
      }
    }
  }
  throw GenerationBudgetExhausted(params.max_attempts);
}

}  // namespace ovdiam

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "roadcolor/digraph.hpp"

namespace roadcolor {

enum class Family { Random, CycleTrees, BunchedLayers, FigureFixture };

const char* family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name);

struct GenSpec {
  std::size_t n = 1;
  std::size_t k = 2;
  std::uint64_t seed = 0;
  std::size_t period = 1;
  Family family = Family::Random;
};

/// 64-bit linear congruential generator: state = state * 6364136223846793005
/// + 1442695040888963407 (mod 2^64), output = state >> 32. below(m) = output % m.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint32_t next() { return static_cast<std::uint32_t>(engine_() >> 32); }
  std::uint32_t below(std::uint32_t m) { return next() % m; }

 private:
  std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0>
      engine_;
};

/// Strongly connected graph of out-degree k and period exactly spec.period.
/// FigureFixture ignores n and k and picks a drawn instance by seed.
/// Throws Unsatisfiable, Shape.
Digraph gen_random(const GenSpec& spec);

}  // namespace roadcolor

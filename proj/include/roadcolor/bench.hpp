#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "roadcolor/generator.hpp"

namespace roadcolor {

struct BenchRecord {
  Family family = Family::Random;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::uint64_t op_count = 0;
  std::uint64_t search_op_count = 0;  // first stable-pair search only
  double wall_ms = 0;
  std::size_t flips = 0;
  std::size_t iterations = 0;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  double slope = 0;         // log median op_count against log n
  double search_slope = 0;  // same for search_op_count
};

/// Least-squares slope of log y against log x. NaN with fewer than two distinct x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Runs find_coloring on gen_random({n, k, seed, 1, family}) for every size and seed.
BenchResult bench_scaling(Family family, const std::vector<std::size_t>& sizes, std::size_t k,
                          const std::vector<std::uint64_t>& seeds);

/// Header line then one line per record: family,n,k,seed,op_count,wall_ms,flips,iterations
void write_table(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace roadcolor

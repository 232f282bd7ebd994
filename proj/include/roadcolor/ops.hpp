#pragma once

#include <cstdint>

namespace roadcolor {

/// Abstract basic-operation tallies. Always per run, never global.
struct OpCounter {
  std::uint64_t visits = 0;   // states or edges touched by analyses and walks
  std::uint64_t flips = 0;
  std::uint64_t unions = 0;
  std::uint64_t merges = 0;   // merge recursion steps, including no-op ones

  std::uint64_t total() const noexcept { return visits + flips + unions + merges; }

  OpCounter& operator+=(const OpCounter& o) noexcept {
    visits += o.visits;
    flips += o.flips;
    unions += o.unions;
    merges += o.merges;
    return *this;
  }
};

}  // namespace roadcolor

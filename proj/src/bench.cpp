#include "roadcolor/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "roadcolor/engine.hpp"

namespace roadcolor {

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (std::set<double>(x.begin(), x.end()).size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2;
}

}  // namespace

BenchResult bench_scaling(Family family, const std::vector<std::size_t>& sizes, std::size_t k,
                          const std::vector<std::uint64_t>& seeds) {
  BenchResult out;
  std::map<std::size_t, std::vector<double>> total, search;
  for (std::size_t n : sizes) {
    for (std::uint64_t seed : seeds) {
      const Digraph g = gen_random({n, k, seed, 1, family});
      const auto start = std::chrono::steady_clock::now();
      const EngineReport rep = find_coloring(g);
      const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
      BenchRecord r{family, g.size(), g.degree(), seed, rep.ops.total(), rep.first_search_ops.total(),
                    took.count(), rep.flips, rep.iterations};
      total[r.n].push_back(static_cast<double>(r.op_count));
      search[r.n].push_back(static_cast<double>(std::max<std::uint64_t>(r.search_op_count, 1)));
      out.records.push_back(r);
    }
  }
  std::vector<double> xs, ys, ss;
  for (const auto& [n, ops] : total) {
    xs.push_back(static_cast<double>(n));
    ys.push_back(std::max(median(ops), 1.0));
    ss.push_back(median(search[n]));
  }
  out.slope = loglog_slope(xs, ys);
  out.search_slope = loglog_slope(xs, ss);
  return out;
}

void write_table(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "family,n,k,seed,op_count,wall_ms,flips,iterations\n";
  for (const BenchRecord& r : records) {
    out << family_name(r.family) << ',' << r.n << ',' << r.k << ',' << r.seed << ',' << r.op_count << ','
        << r.wall_ms << ',' << r.flips << ',' << r.iterations << '\n';
  }
}

}  // namespace roadcolor

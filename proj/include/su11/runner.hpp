#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace su11 {

// One fully resolved invocation.  The CLI layer owns the precedence rules
// (flags over config file over environment over defaults) and hands the
// outcome here.
struct RunConfig {
  std::string command;
  long long l = 1;
  long long n = 80;
  long long trials = 2000;
  std::uint64_t seed = 1;
  int threads = 1;
  double s_lo = -10.0;
  double s_hi = 10.0;
  std::size_t bins = 40;
  std::size_t points = 41;  // grid size for distribution and theory tables
  double r_max = 0.7;
  double w_max = 0.6;
  std::size_t quadrature_points = std::size_t{1} << 22;
  double tail_eps = 1e-12;
  std::string kind = "density";  // theory-table: density|correlation|finite-n
  std::vector<std::complex<double>> at;  // kacrice-eval points
  std::string output;
  std::string format = "csv";  // csv | svg (svg writes the plot as well)
  std::string dump_zeros;      // optional per-trial zeros CSV
  std::string compare_a, compare_b;
  double tolerance = 1e-9;  // compare threshold
};

// Executes config.command, writing a short human summary to `out`.
// Returns the process exit status: 0 on success, 1 when compare finds a
// difference beyond the tolerance.
int run(const RunConfig& config, std::ostream& out);

}  // namespace su11

#pragma once

#include "gjgf/problem.hpp"
#include "gjgf/rational_function.hpp"

namespace gjgf {

// Ground-truth request: enumerate every word of length 0..max_length and sum
// the weighted contributions directly. The cap bounds the m^N blowup.
struct OracleRequest {
  Problem problem;
  int max_length = 0;
  int cap = 12;
};

// Exact series prefix obtained by explicit enumeration. Shares nothing with
// the engines except the polynomial arithmetic: occurrence counting and word
// weighting are implemented from scratch here.
SeriesPrefix brute_force_series(const OracleRequest& request);

}  // namespace gjgf

#pragma once

// Labelled order patterns inside M_w. Both detectors only consider
// quadruples {m_{i,a}, m_{i,b}, m_{j,c}, m_{j,d}} drawn from two chains with
// i < j, b < a, c < d and a + c = b + d, where m_{i,a} > m_{j,d} and
// m_{i,b} > m_{j,c}. A parallelogram has m_{i,b} and m_{j,d} incomparable;
// a C4-parallelogram has m_{i,b} > m_{j,d}.
//
// The witness returned is the smallest by (i, j, a, d, b).

#include <array>
#include <optional>

#include "mposet/join_irr.hpp"
#include "mposet/poset.hpp"

namespace mposet {

std::optional<PatternWitness> find_parallelogram(const MPoset& m);
std::optional<PatternWitness> find_c4_parallelogram(const MPoset& m);

std::array<Label, 4> witness_labels(const MPoset& m, const PatternWitness& w);

}  // namespace mposet

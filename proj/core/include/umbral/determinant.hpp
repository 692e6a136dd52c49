#pragma once

#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Exact determinant of a square rational matrix.  Rows are scaled to
/// integers first, then eliminated with fraction-free Bareiss pivoting to
/// keep intermediate values small.
Rational det_bareiss(const std::vector<std::vector<Rational>>& m);

}  // namespace umbral

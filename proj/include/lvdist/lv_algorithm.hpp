#pragma once

// Forward direction of the Lusztig-Vogan bijection for GL_n:
//
//     LV = kappa . E^{-1} . phi : dominant weights -> Omega_n
//
// phi builds a weighted diagram column by column, E^{-1} shifts each column
// by a zero-sum arithmetic progression, and kappa records row sums grouped by
// row length. E and phi^{-1} are provided for round-trip checks.

#include "lvdist/core.hpp"

#include <vector>

namespace lvdist {

/// Run of a weight whose distinct values are consecutive integers.
using Clump = Weight;

/// Column numbering of phi. `one` is the standard map; `zero` is the shifted
/// variant phi' whose first column is column 0, flipping every parity test.
enum class ColumnBase : unsigned { zero = 0, one = 1 };

/// Minimal split of `w` into contiguous clumps; adjacent clumps are separated
/// by a gap of at least 2.
std::vector<Clump> maximal_clumps(const Weight& w);

/// Column-by-column construction of the weighted diagram. Throws
/// InternalError (with the partial diagram in the message) if a selected
/// value has no eligible row.
WeightedDiagram phi(const Weight& w, ColumnBase base = ColumnBase::one);

/// Sorts every diagram entry into one weakly decreasing sequence.
Weight phi_inverse(const WeightedDiagram& x);

/// X'_{ij} = X_{ij} + 2 m_{ij} - (c_j - 1), where m_{ij} counts entries of
/// column j whose (value, -row) pair is lexicographically smaller.
WeightedDiagram apply_E(const WeightedDiagram& x);

/// Adds (-(c-1), -(c-3), ..., c-1) to each column of height c. Requires
/// every column to drop by at least 2 between consecutive entries; throws
/// DomainError naming the first offending column otherwise.
WeightedDiagram apply_E_inverse(const WeightedDiagram& x);

/// mu_i = dom of the row sums of rows of length i; s = longest row.
OmegaElement kappa(const WeightedDiagram& x);

OmegaElement lv(const Weight& w, ColumnBase base = ColumnBase::one);

} // namespace lvdist

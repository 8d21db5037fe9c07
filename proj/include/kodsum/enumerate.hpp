#pragma once

#include <set>
#include <vector>

#include "kodsum/fpgroup.hpp"
#include "kodsum/glue.hpp"
#include "kodsum/torusbundle.hpp"

namespace kodsum {

/// Every valid GluingData of both forms with all parameters in [-bound, bound],
/// in a fixed order (even before odd, then lexicographic).
std::vector<GluingData> gluing_grid(Int bound);

/// normal_form(glue_bundle(j, k, g)).tag over gluing_grid(bound).
/// Runs the grid in parallel with OpenMP; the result is a set, so it does not
/// depend on scheduling.
std::set<FamilyTag> enumerate_table(ComplementKind j, ComplementKind k, Int bound);

/// Single-threaded reference for enumerate_table.
std::set<FamilyTag> enumerate_table_serial(ComplementKind j, ComplementKind k, Int bound);

struct GridRecord {
    GluingData gluing;
    TorusBundle bundle;
    FamilyTag tag;
    NormalFormTrace trace;
    Presentation presentation;
    AbelianInvariants abelianization;
};

/// Per-grid-point data, in gluing_grid order.
std::vector<GridRecord> enumerate_records(ComplementKind j, ComplementKind k, Int bound);

struct OracleMismatch {
    Int j;
    Int k;
    GluingData gluing;
    AbelianInvariants from_presentation;
    AbelianInvariants from_bundle;
};

/// Compares abelianize(glue_presentation) with h1(glue_bundle) for all
/// (j, k) and every grid point; returns the disagreements in grid order.
std::vector<OracleMismatch> cross_oracle_sweep(Int bound);
std::vector<OracleMismatch> cross_oracle_sweep_serial(Int bound);

/// Number of (j, k, g) triples the sweep visits.
std::size_t cross_oracle_size(Int bound);

} // namespace kodsum

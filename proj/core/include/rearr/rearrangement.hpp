#pragma once

#include <span>

#include "rearr/profile.hpp"

namespace rearr {

/// One cell of a discretized field: the value |u| takes on the cell and the
/// cell's Lebesgue measure.
struct CellSample {
    double value = 0.0;
    double measure = 0.0;
};

/// Measure of {|u| > s}. Throws for s < 0 (strict inequality at the level).
double distribution_function(std::span<const CellSample> samples, double s);

/// Step profile obtained by sorting cells by value descending and
/// accumulating measure; ties merge into a single step. Equimeasurable with
/// the input, and int u* = sum value * measure exactly.
MonotoneProfile decreasing_rearrangement(std::span<const CellSample> samples);

/// Measure of {u* > s} read off a profile; exact for step data.
double profile_distribution(const MonotoneProfile& u, double s);

} // namespace rearr

#pragma once

// Text, CSV and JSON renderings of tables, oracle grids and reports. Color
// only ever touches the text form.

#include <string>

#include "bihilb/experiments.hpp"
#include "bihilb/hilbert.hpp"
#include "bihilb/staircase.hpp"

namespace bihilb {

enum class Format { Text, Csv, Json };

/// "text" | "csv" | "json"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& name);

/// Region tint of a cell: overlap of Gamma_0 with a positive Gamma_i,
/// positive Gamma_i only, Gamma_0 only, Gamma_{-1}, or none.
enum class Tint { None, Overlap, Positive, Zero, MinusOne };

Tint tint_of(const Classification& c);

std::string render_table(const HFTable& table, Format format, bool color);

/// Oracle grid; with a spec the text form is tinted by region.
std::string render_grid(const IntGrid& grid, Format format, bool color, const RegionSpec* spec = nullptr);

std::string render_classification(const Classification& c, Format format);
std::string render_staircase(const Staircase& s, Format format);

std::string render_report(const VerifyReport& r, Format format);
std::string render_report(const GenericReport& r, Format format);
std::string render_report(const DoublePrimeReport& r, Format format);

}  // namespace bihilb

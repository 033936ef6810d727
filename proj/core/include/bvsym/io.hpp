#ifndef BVSYM_IO_HPP
#define BVSYM_IO_HPP

#include <string>
#include <vector>

#include "bvsym/bv_function.hpp"
#include "bvsym/geometry.hpp"
#include "bvsym/rearrange.hpp"
#include "bvsym/symmetrize.hpp"

namespace bvsym {

/// What a function file contains.
enum class FunctionKind { Samples, Bv1d, Radial };

struct FunctionFile {
    FunctionKind kind = FunctionKind::Samples;
    std::vector<MeasuredSample> samples;
    BVFunction1D bv1d;
    RadialBVFunction radial;
};

/// Parses a function JSON file ({"cells": ...}, {"domain": ...} or
/// {"n": ..., "profile": ...}).  Malformed input raises
/// std::runtime_error naming the offending field.
FunctionFile read_function_json(const std::string& path);

std::string bv1d_to_json(const BVFunction1D& u);
std::string radial_to_json(const RadialBVFunction& u);
std::string samples_to_json(const std::vector<MeasuredSample>& cells);

/// (s, value) rows; full-precision decimals.
void write_step_csv(const std::string& path, const StepFunction& f);

/// Step data back from CSV rows (s, value).
std::vector<MeasuredSample> read_step_csv(const std::string& path);

/// CSV with a JSON header line carrying n, R, b and the singular mass.
void write_symmetrized_csv(const std::string& path, const SymmetrizedProfile& p);

Polygon read_polygon_json(const std::string& path);

/// Shortest decimal that round-trips the double.
std::string render_double(double v);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace bvsym

#endif

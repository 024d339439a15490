#pragma once

#include <string>
#include <utility>

#include "cactoidlab/approximation.hpp"
#include "cactoidlab/cactoid.hpp"
#include "cactoidlab/metric_space.hpp"
#include "cactoidlab/surface.hpp"

namespace cactoidlab {

// All serializers emit deterministic, versioned payloads: fixed key order,
// scalars as exact decimal or "p/q" strings, two-space indentation. Every
// parser checks "format_version" and throws ParseError with the first
// offending location.

inline constexpr int kFormatVersion = 1;

std::string metric_to_json(const FiniteMetricSpace& x);
FiniteMetricSpace metric_from_json(const std::string& text);

// Surface text format ("loff"), line-oriented:
//   loff 1
//   <nv> <ne> <nf>
//   v <label>
//   e <u> <v> <length>
//   f <a> <b> <c>
// Blank lines and #-comments allowed. The loader validates all surface
// invariants and reports the first violation with its line number.
std::string surface_to_text(const TriSurface& s);
TriSurface surface_from_text(const std::string& text);

std::string cactoid_to_json(const CactoidGraph& g, const GluingHistory& h);
std::pair<CactoidGraph, GluingHistory> cactoid_from_json(const std::string& text);

std::string certificate_to_json(const ConvergenceCertificate& cert);
ConvergenceCertificate certificate_from_json(const std::string& text);

}  // namespace cactoidlab

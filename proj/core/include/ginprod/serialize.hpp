#pragma once

#include <string>

#include "ginprod/moments.hpp"
#include "ginprod/montecarlo.hpp"
#include "ginprod/wick.hpp"

namespace ginprod {

/// Canonical JSON for a TracePolynomial:
///   {"sigma_power": s,
///    "terms": [{"partition": [m_1,...], "n_power": e, "num": "...", "den": "..."}]}
/// with terms sorted lexicographically by (partition, n_power).
std::string trace_polynomial_json(const TracePolynomial& poly, int indent = -1);

std::string moment_result_json(const MomentResult& r, int indent = -1);
std::string moment_result_csv(const MomentResult& r);  // with header line

std::string estimate_json(const Word& w, const MCConfig& cfg, const Estimate& e,
                          int indent = -1);
std::string estimate_csv(const Word& w, const MCConfig& cfg, const Estimate& e);

/// CSV rows (r, empirical_cdf, theory_cdf).
std::string spectrum_cdf_csv(const SpectrumReport& rep);
/// CSV rows (bin_center, density, theory, count).
std::string density_csv(const ScalarDensityReport& rep);
/// Radial eigenvalue histogram in the same (bin_center, density, theory,
/// count) schema; theory is the radial pdf (2/n) r^{2/n-1} / sigma^{2/n}.
std::string spectrum_density_csv(const SpectrumReport& rep, int bins);

}  // namespace ginprod

#include "ginprod/serialize.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace ginprod {

namespace {

using nlohmann::json;

std::string dump(const json& j, int indent) { return indent < 0 ? j.dump() : j.dump(indent); }

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

json rational_json(const BigRational& q) {
  return json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

json laurent_json(const NLaurent& p) {
  json coeffs = json::array();
  for (const auto& [e, c] : p.coefficients()) {
    json t = rational_json(c);
    t["n_power"] = e;
    coeffs.push_back(std::move(t));
  }
  return json{{"coefficients", std::move(coeffs)}, {"str", p.str()}};
}

}  // namespace

std::string trace_polynomial_json(const TracePolynomial& poly, int indent) {
  json terms = json::array();
  // std::map iteration is already the canonical (partition, n_power) order.
  for (const auto& [key, c] : poly.terms()) {
    json t;
    t["partition"] = key.first;
    t["n_power"] = key.second;
    t["num"] = numerator(c).str();
    t["den"] = denominator(c).str();
    terms.push_back(std::move(t));
  }
  return dump(json{{"sigma_power", poly.sigma_power()}, {"terms", std::move(terms)}}, indent);
}

std::string moment_result_json(const MomentResult& r, int indent) {
  json j;
  j["word"] = r.word.str();
  j["factors"] = r.spec.n;
  j["mode"] = r.mode == MomentMode::LargeN ? "large_n" : "finite_n";
  j["sigma_power"] = r.sigma_power;
  j["sigmas"] = r.spec.sigmas;
  if (r.tc_provenance.empty())
    j["tc_provenance"] = nullptr;
  else
    j["tc_provenance"] = r.tc_provenance;
  if (r.mode == MomentMode::LargeN) {
    j["value"] = rational_json(r.value);
    j["value_str"] = to_string(r.value);
    j["numeric"] = r.numeric();
  } else {
    j["value"] = laurent_json(r.value_n);
    j["value_str"] = r.value_n.str();
  }
  return dump(j, indent);
}

std::string moment_result_csv(const MomentResult& r) {
  std::ostringstream os;
  os << "word,factors,mode,sigma_power,tc_provenance,value\n";
  os << r.word.str() << "," << r.spec.n << ","
     << (r.mode == MomentMode::LargeN ? "large_n" : "finite_n") << "," << r.sigma_power << ","
     << (r.tc_provenance.empty() ? "none" : r.tc_provenance) << ",";
  if (r.mode == MomentMode::LargeN)
    os << to_string(r.value);
  else
    os << "\"" << r.value_n.str() << "\"";
  os << "\n";
  return os.str();
}

std::string estimate_json(const Word& w, const MCConfig& cfg, const Estimate& e, int indent) {
  json j;
  j["word"] = w.str();
  j["factors"] = cfg.spec.n;
  j["N"] = cfg.N;
  j["samples"] = e.samples;
  j["seed"] = cfg.seed;
  j["sigmas"] = cfg.spec.sigmas;
  j["mean"] = e.mean;
  j["stderr"] = e.stderr_;
  j["imag_mean"] = e.imag_mean;
  return dump(j, indent);
}

std::string estimate_csv(const Word& w, const MCConfig& cfg, const Estimate& e) {
  std::ostringstream os;
  os << "word,factors,N,samples,seed,sigma,mean,stderr,imag_mean\n";
  os << w.str() << "," << cfg.spec.n << "," << cfg.N << "," << e.samples << "," << cfg.seed << ","
     << fmt(cfg.spec.sigma()) << "," << fmt(e.mean) << "," << fmt(e.stderr_) << ","
     << fmt(e.imag_mean) << "\n";
  return os.str();
}

std::string spectrum_cdf_csv(const SpectrumReport& rep) {
  std::ostringstream os;
  os << "r,empirical_cdf,theory_cdf\n";
  const double M = static_cast<double>(rep.radii.size());
  for (std::size_t i = 0; i < rep.radii.size(); ++i) {
    os << fmt(rep.radii[i]) << "," << fmt(static_cast<double>(i + 1) / M) << ","
       << fmt(rep.theory_cdf(rep.radii[i])) << "\n";
  }
  return os.str();
}

std::string density_csv(const ScalarDensityReport& rep) {
  std::ostringstream os;
  os << "bin_center,density,theory,count\n";
  for (const auto& b : rep.bins)
    os << fmt(b.center) << "," << fmt(b.density) << "," << fmt(b.theory_density) << "," << b.count
       << "\n";
  return os.str();
}

std::string spectrum_density_csv(const SpectrumReport& rep, int bins) {
  std::ostringstream os;
  os << "bin_center,density,theory,count\n";
  if (rep.radii.empty() || bins < 1) return os.str();
  const double r_hi = std::max(rep.sigma, rep.radii.back()) * 1.0000001;
  const double width = r_hi / bins;
  std::vector<long> counts(bins, 0);
  for (double r : rep.radii) ++counts[std::min<int>(static_cast<int>(r / width), bins - 1)];
  const double total = static_cast<double>(rep.radii.size());
  for (int i = 0; i < bins; ++i) {
    const double center = (i + 0.5) * width;
    const double density = static_cast<double>(counts[i]) / (total * width);
    const double theory =
        center < rep.sigma
            ? 2.0 / rep.n * std::pow(center / rep.sigma, 2.0 / rep.n - 1.0) / rep.sigma
            : 0.0;
    os << fmt(center) << "," << fmt(density) << "," << fmt(theory) << "," << counts[i] << "\n";
  }
  return os.str();
}

}  // namespace ginprod

#pragma once

// Text syntax and JSON/CSV documents.
//
// Element syntax: an integer for a prime field (reduced mod p, a leading '-'
// allowed); for an extension, the comma-separated coefficients over the base,
// lowest first, each wrapped in brackets when the base is itself an
// extension. A bare integer is also accepted and means its image in F_p.
// Form and polynomial syntax: comma-separated coefficients, lowest index
// first; over an extension field each coefficient is bracketed.
//
// Every JSON document carries "kind", "schema_version" and "library_version".

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fillcurve/binform.hpp"
#include "fillcurve/construct.hpp"
#include "fillcurve/curve.hpp"
#include "fillcurve/orbits.hpp"

namespace fillcurve {

using Json = nlohmann::json;

/// All parse functions throw Error(Errc::parse) on malformed text.
Fel parse_element(const Field& F, const std::string& text);
std::vector<Fel> parse_coeffs(const Field& F, const std::string& text);
BinForm parse_form(const Field& F, const std::string& text);
UPoly parse_poly(const Field& F, const std::string& text);

std::vector<std::string> element_strings(const std::vector<Fel>& xs);
inline std::vector<std::string> form_strings(const BinForm& f) { return element_strings(f.coeffs()); }
inline std::vector<std::string> poly_strings(const UPoly& p) { return element_strings(p.coeffs()); }

struct WitnessDoc {
  std::vector<std::string> alpha_minpoly, beta_minpoly;
  int compositum_degree = 0;
  std::string alpha, beta;
  bool operator==(const WitnessDoc&) const = default;
};

struct ReportDoc {
  std::uint64_t q = 0;
  std::vector<std::string> f, g;
  bool space_filling = true;
  bool smooth = true;
  std::string method;
  std::optional<WitnessDoc> witness;
  int factors_examined = 0;
  int gcds_computed = 0;
  bool operator==(const ReportDoc&) const = default;
};

struct OrbitDoc {
  std::vector<std::string> rep;
  std::uint64_t size = 0;
  std::string factor_type;
  bool operator==(const OrbitDoc&) const = default;
};

struct OrbitsDoc {
  std::uint64_t q = 0;
  std::uint64_t total = 0;
  std::vector<OrbitDoc> orbits;
  bool operator==(const OrbitsDoc&) const = default;
};

struct CensusDoc {
  std::uint64_t q = 0;
  std::uint64_t gq_size = 0;
  std::vector<OrbitDoc> orbits;
  std::vector<std::vector<int>> matrix;  // matrix[i][j]: f in orbit i, g in orbit j
  std::uint64_t total_pairs = 0;
  std::uint64_t total_smooth_pairs = 0;
  bool operator==(const CensusDoc&) const = default;
};

struct SampleDoc {
  std::uint64_t q = 0, n = 0, seed = 0, smooth = 0;
  bool operator==(const SampleDoc&) const = default;
};

struct TraceDoc {
  std::string method;
  std::optional<std::string> lambda1, lambda2, k;
  std::vector<std::vector<std::string>> excluded_quadratics;
  std::optional<std::vector<std::string>> chosen_quadratic;
  bool operator==(const TraceDoc&) const = default;
};

struct ConstructDoc {
  std::uint64_t q = 0;
  std::vector<std::string> f, g;
  TraceDoc trace;
  bool operator==(const ConstructDoc&) const = default;
};

struct SymmetricDoc {
  std::uint64_t q = 0;
  int variant = 0;
  std::uint64_t index = 0;
  std::string lambda;
  std::vector<std::string> f;
  bool operator==(const SymmetricDoc&) const = default;
};

ReportDoc make_report_doc(const BinForm& f, const BinForm& g, const SmoothnessReport& r);
OrbitsDoc make_orbits_doc(const OrbitTable& t);
CensusDoc make_census_doc(const CensusResult& c);
SampleDoc make_sample_doc(const SampleResult& s);
ConstructDoc make_construct_doc(const BinForm& f, const Partner& p);
SymmetricDoc make_symmetric_doc(std::uint64_t q, int variant, std::uint64_t index, const BinForm& f);

Json to_json(const ReportDoc& d);
Json to_json(const OrbitsDoc& d);
Json to_json(const CensusDoc& d);
Json to_json(const SampleDoc& d);
Json to_json(const ConstructDoc& d);
Json to_json(const SymmetricDoc& d);

/// Throw Error(Errc::parse) on a wrong kind, schema version or shape.
ReportDoc report_from_json(const Json& j);
OrbitsDoc orbits_from_json(const Json& j);
CensusDoc census_from_json(const Json& j);
SampleDoc sample_from_json(const Json& j);
ConstructDoc construct_from_json(const Json& j);
SymmetricDoc symmetric_from_json(const Json& j);

/// CSV layouts (version kSchemaVersion), one header row each:
///   report:    q,f,g,space_filling,smooth,method,compositum_degree
///   orbits:    orbit,size,factor_type,rep
///   census:    f_orbit,g_orbit,f_size,g_size,smooth
///   sample:    q,n,seed,smooth
///   construct: q,f,g,method
///   symmetric: q,variant,index,lambda,f
std::string to_csv(const ReportDoc& d);
std::string to_csv(const OrbitsDoc& d);
std::string to_csv(const CensusDoc& d);
std::string to_csv(const SampleDoc& d);
std::string to_csv(const ConstructDoc& d);
std::string to_csv(const SymmetricDoc& d);

/// Pretty JSON text with a trailing newline.
std::string dump(const Json& j);

}  // namespace fillcurve

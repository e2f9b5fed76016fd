#include "fillcurve/io.hpp"

#include <cctype>
#include <sstream>

#include "fillcurve/version.hpp"

namespace fillcurve {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(Errc::parse, msg); }

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Comma-separated items at bracket depth 0.
std::vector<std::string> split_top(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']' && --depth < 0) parse_fail("unbalanced ']' in \"" + text + "\"");
    if (ch == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) parse_fail("unbalanced '[' in \"" + text + "\"");
  out.push_back(trim(cur));
  return out;
}

bool is_integer(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Fel integer_element(const Field& F, const std::string& s) {
  if (!is_integer(s)) parse_fail("expected an integer, got \"" + s + "\"");
  try {
    return Fel::from_int(F, std::stoll(s));
  } catch (const std::out_of_range&) {
    parse_fail("integer out of range: " + s);
  }
}

std::string unbracket(const std::string& s) {
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') return trim(s.substr(1, s.size() - 2));
  return s;
}

Fel coefficient(const Field& F, const std::string& token) {
  if (token.empty()) parse_fail("empty coefficient");
  if (F->is_prime_field() || is_integer(token)) return integer_element(F, token);
  if (token.front() != '[') parse_fail("extension-field coefficient must be bracketed: \"" + token + "\"");
  return parse_element(F, unbracket(token));
}

}  // namespace

Fel parse_element(const Field& F, const std::string& raw) {
  const std::string text = trim(raw);
  if (F->is_prime_field() || is_integer(text)) return integer_element(F, text);
  const auto parts = split_top(text);
  if (static_cast<int>(parts.size()) != F->degree())
    parse_fail("element \"" + text + "\" needs " + std::to_string(F->degree()) + " coefficients");
  std::vector<Fel> cs;
  const Field& B = F->base();
  for (const auto& p : parts) {
    if (p.empty()) parse_fail("empty coefficient in \"" + text + "\"");
    cs.push_back(B->is_prime_field() ? integer_element(B, p) : parse_element(B, unbracket(p)));
  }
  return Fel::from_base_coeffs(F, cs);
}

std::vector<Fel> parse_coeffs(const Field& F, const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) parse_fail("empty coefficient list");
  std::vector<Fel> out;
  for (const auto& tok : split_top(text)) out.push_back(coefficient(F, tok));
  return out;
}

BinForm parse_form(const Field& F, const std::string& text) {
  const auto cs = parse_coeffs(F, text);
  if (cs.size() < 2) parse_fail("a form needs at least two coefficients");
  return BinForm(F, cs);
}

UPoly parse_poly(const Field& F, const std::string& text) { return UPoly(F, parse_coeffs(F, text)); }

std::vector<std::string> element_strings(const std::vector<Fel>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

// ---------------------------------------------------------------- documents

ReportDoc make_report_doc(const BinForm& f, const BinForm& g, const SmoothnessReport& r) {
  ReportDoc d;
  d.q = f.field()->order_u64();
  d.f = form_strings(f);
  d.g = form_strings(g);
  d.space_filling = verify_space_filling(build_curve(f, g));
  d.smooth = r.smooth;
  d.method = method_name(r.method);
  if (r.witness) {
    const auto& w = *r.witness;
    d.witness = WitnessDoc{poly_strings(w.alpha_minpoly()), poly_strings(w.beta_minpoly()), w.compositum_degree(),
                           w.alpha().to_string(), w.beta().to_string()};
  }
  d.factors_examined = r.stats.factors_examined;
  d.gcds_computed = r.stats.gcds_computed;
  return d;
}

namespace {

OrbitDoc orbit_doc(const Orbit& o) { return OrbitDoc{form_strings(o.rep), o.size(), o.factor_type}; }

}  // namespace

OrbitsDoc make_orbits_doc(const OrbitTable& t) {
  OrbitsDoc d;
  d.q = t.q;
  d.total = t.total;
  for (const auto& o : t.orbits) d.orbits.push_back(orbit_doc(o));
  return d;
}

CensusDoc make_census_doc(const CensusResult& c) {
  CensusDoc d;
  d.q = c.q;
  d.gq_size = c.table.total;
  for (const auto& o : c.table.orbits) d.orbits.push_back(orbit_doc(o));
  for (const auto& row : c.smooth) d.matrix.emplace_back(row.begin(), row.end());
  d.total_pairs = d.gq_size * d.gq_size;
  d.total_smooth_pairs = static_cast<std::uint64_t>(c.total_smooth_pairs);
  return d;
}

SampleDoc make_sample_doc(const SampleResult& s) { return SampleDoc{s.q, s.n, s.seed, s.smooth}; }

ConstructDoc make_construct_doc(const BinForm& f, const Partner& p) {
  ConstructDoc d;
  d.q = f.field()->order_u64();
  d.f = form_strings(f);
  d.g = form_strings(p.g);
  const auto& t = p.trace;
  d.trace.method = t.method;
  if (t.lambda1) d.trace.lambda1 = t.lambda1->to_string();
  if (t.lambda2) d.trace.lambda2 = t.lambda2->to_string();
  if (t.k) d.trace.k = t.k->to_string();
  for (const auto& m : t.excluded_quadratics) d.trace.excluded_quadratics.push_back(poly_strings(m));
  if (t.chosen_quadratic) d.trace.chosen_quadratic = poly_strings(*t.chosen_quadratic);
  return d;
}

SymmetricDoc make_symmetric_doc(std::uint64_t q, int variant, std::uint64_t index, const BinForm& f) {
  return SymmetricDoc{q, variant, index, f.coeff(f.degree()).to_string(), form_strings(f)};
}

// ---------------------------------------------------------------- JSON

namespace {

Json header(const char* kind) {
  return Json{{"kind", kind}, {"schema_version", kSchemaVersion}, {"library_version", kLibraryVersion}};
}

void check_header(const Json& j, const char* kind) {
  if (!j.is_object()) parse_fail("expected a JSON object");
  if (j.value("kind", std::string()) != kind) parse_fail(std::string("expected kind \"") + kind + "\"");
  if (j.value("schema_version", -1) != kSchemaVersion)
    parse_fail("unsupported schema_version; expected " + std::to_string(kSchemaVersion));
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) parse_fail(std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("bad value for \"") + key + "\": " + e.what());
  }
}

template <class T>
std::optional<T> optional_field(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<T>(j, key);
}

template <class T>
Json nullable(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json orbit_json(const OrbitDoc& o) { return Json{{"rep", o.rep}, {"size", o.size}, {"factor_type", o.factor_type}}; }

OrbitDoc orbit_from(const Json& j) {
  return OrbitDoc{field<std::vector<std::string>>(j, "rep"), field<std::uint64_t>(j, "size"),
                  field<std::string>(j, "factor_type")};
}

std::vector<OrbitDoc> orbits_from(const Json& j) {
  std::vector<OrbitDoc> out;
  for (const auto& o : field<Json>(j, "orbits")) out.push_back(orbit_from(o));
  return out;
}

}  // namespace

Json to_json(const ReportDoc& d) {
  Json j = header("report");
  j["q"] = d.q;
  j["f"] = d.f;
  j["g"] = d.g;
  j["space_filling"] = d.space_filling;
  j["smooth"] = d.smooth;
  j["method"] = d.method;
  if (d.witness) {
    j["witness"] = Json{{"alpha_minpoly", d.witness->alpha_minpoly},
                        {"beta_minpoly", d.witness->beta_minpoly},
                        {"compositum_degree", d.witness->compositum_degree},
                        {"alpha", d.witness->alpha},
                        {"beta", d.witness->beta}};
  } else {
    j["witness"] = nullptr;
  }
  j["stats"] = Json{{"factors_examined", d.factors_examined}, {"gcds_computed", d.gcds_computed}};
  return j;
}

ReportDoc report_from_json(const Json& j) {
  check_header(j, "report");
  ReportDoc d;
  d.q = field<std::uint64_t>(j, "q");
  d.f = field<std::vector<std::string>>(j, "f");
  d.g = field<std::vector<std::string>>(j, "g");
  d.space_filling = field<bool>(j, "space_filling");
  d.smooth = field<bool>(j, "smooth");
  d.method = field<std::string>(j, "method");
  if (auto w = optional_field<Json>(j, "witness")) {
    d.witness = WitnessDoc{field<std::vector<std::string>>(*w, "alpha_minpoly"),
                           field<std::vector<std::string>>(*w, "beta_minpoly"), field<int>(*w, "compositum_degree"),
                           field<std::string>(*w, "alpha"), field<std::string>(*w, "beta")};
  }
  const Json stats = field<Json>(j, "stats");
  d.factors_examined = field<int>(stats, "factors_examined");
  d.gcds_computed = field<int>(stats, "gcds_computed");
  if (d.smooth == d.witness.has_value()) parse_fail("smooth must be true exactly when witness is null");
  return d;
}

Json to_json(const OrbitsDoc& d) {
  Json j = header("orbits");
  j["q"] = d.q;
  j["total"] = d.total;
  j["orbits"] = Json::array();
  for (const auto& o : d.orbits) j["orbits"].push_back(orbit_json(o));
  return j;
}

OrbitsDoc orbits_from_json(const Json& j) {
  check_header(j, "orbits");
  return OrbitsDoc{field<std::uint64_t>(j, "q"), field<std::uint64_t>(j, "total"), orbits_from(j)};
}

Json to_json(const CensusDoc& d) {
  Json j = header("census");
  j["q"] = d.q;
  j["gq_size"] = d.gq_size;
  j["orbits"] = Json::array();
  for (const auto& o : d.orbits) j["orbits"].push_back(orbit_json(o));
  j["matrix"] = d.matrix;
  j["total_pairs"] = d.total_pairs;
  j["total_smooth_pairs"] = d.total_smooth_pairs;
  return j;
}

CensusDoc census_from_json(const Json& j) {
  check_header(j, "census");
  CensusDoc d;
  d.q = field<std::uint64_t>(j, "q");
  d.gq_size = field<std::uint64_t>(j, "gq_size");
  d.orbits = orbits_from(j);
  d.matrix = field<std::vector<std::vector<int>>>(j, "matrix");
  d.total_pairs = field<std::uint64_t>(j, "total_pairs");
  d.total_smooth_pairs = field<std::uint64_t>(j, "total_smooth_pairs");
  if (d.matrix.size() != d.orbits.size()) parse_fail("matrix size does not match the orbit count");
  for (const auto& row : d.matrix)
    if (row.size() != d.orbits.size()) parse_fail("matrix is not square");
  return d;
}

Json to_json(const SampleDoc& d) {
  Json j = header("sample");
  j["q"] = d.q;
  j["n"] = d.n;
  j["seed"] = d.seed;
  j["smooth"] = d.smooth;
  return j;
}

SampleDoc sample_from_json(const Json& j) {
  check_header(j, "sample");
  return SampleDoc{field<std::uint64_t>(j, "q"), field<std::uint64_t>(j, "n"), field<std::uint64_t>(j, "seed"),
                   field<std::uint64_t>(j, "smooth")};
}

Json to_json(const ConstructDoc& d) {
  Json j = header("construct");
  j["q"] = d.q;
  j["f"] = d.f;
  j["g"] = d.g;
  j["trace"] = Json{{"method", d.trace.method},
                    {"lambda1", nullable(d.trace.lambda1)},
                    {"lambda2", nullable(d.trace.lambda2)},
                    {"k", nullable(d.trace.k)},
                    {"excluded_quadratics", d.trace.excluded_quadratics},
                    {"chosen_quadratic", nullable(d.trace.chosen_quadratic)}};
  return j;
}

ConstructDoc construct_from_json(const Json& j) {
  check_header(j, "construct");
  ConstructDoc d;
  d.q = field<std::uint64_t>(j, "q");
  d.f = field<std::vector<std::string>>(j, "f");
  d.g = field<std::vector<std::string>>(j, "g");
  const Json t = field<Json>(j, "trace");
  d.trace.method = field<std::string>(t, "method");
  d.trace.lambda1 = optional_field<std::string>(t, "lambda1");
  d.trace.lambda2 = optional_field<std::string>(t, "lambda2");
  d.trace.k = optional_field<std::string>(t, "k");
  d.trace.excluded_quadratics = field<std::vector<std::vector<std::string>>>(t, "excluded_quadratics");
  d.trace.chosen_quadratic = optional_field<std::vector<std::string>>(t, "chosen_quadratic");
  return d;
}

Json to_json(const SymmetricDoc& d) {
  Json j = header("symmetric");
  j["q"] = d.q;
  j["variant"] = d.variant;
  j["index"] = d.index;
  j["lambda"] = d.lambda;
  j["f"] = d.f;
  return j;
}

SymmetricDoc symmetric_from_json(const Json& j) {
  check_header(j, "symmetric");
  return SymmetricDoc{field<std::uint64_t>(j, "q"), field<int>(j, "variant"), field<std::uint64_t>(j, "index"),
                      field<std::string>(j, "lambda"), field<std::vector<std::string>>(j, "f")};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- CSV

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string joined(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += xs[i].find(',') == std::string::npos ? xs[i] : "[" + xs[i] + "]";
  }
  return out;
}

}  // namespace

std::string to_csv(const ReportDoc& d) {
  std::ostringstream os;
  os << "q,f,g,space_filling,smooth,method,compositum_degree\n"
     << d.q << ',' << csv_cell(joined(d.f)) << ',' << csv_cell(joined(d.g)) << ',' << d.space_filling << ','
     << d.smooth << ',' << d.method << ',' << (d.witness ? std::to_string(d.witness->compositum_degree) : "") << '\n';
  return os.str();
}

std::string to_csv(const OrbitsDoc& d) {
  std::ostringstream os;
  os << "orbit,size,factor_type,rep\n";
  for (std::size_t i = 0; i < d.orbits.size(); ++i)
    os << i << ',' << d.orbits[i].size << ',' << csv_cell(d.orbits[i].factor_type) << ','
       << csv_cell(joined(d.orbits[i].rep)) << '\n';
  return os.str();
}

std::string to_csv(const CensusDoc& d) {
  std::ostringstream os;
  os << "f_orbit,g_orbit,f_size,g_size,smooth\n";
  for (std::size_t i = 0; i < d.orbits.size(); ++i)
    for (std::size_t j = 0; j < d.orbits.size(); ++j)
      os << i << ',' << j << ',' << d.orbits[i].size << ',' << d.orbits[j].size << ',' << d.matrix[i][j] << '\n';
  return os.str();
}

std::string to_csv(const SampleDoc& d) {
  std::ostringstream os;
  os << "q,n,seed,smooth\n" << d.q << ',' << d.n << ',' << d.seed << ',' << d.smooth << '\n';
  return os.str();
}

std::string to_csv(const ConstructDoc& d) {
  std::ostringstream os;
  os << "q,f,g,method\n"
     << d.q << ',' << csv_cell(joined(d.f)) << ',' << csv_cell(joined(d.g)) << ',' << d.trace.method << '\n';
  return os.str();
}

std::string to_csv(const SymmetricDoc& d) {
  std::ostringstream os;
  os << "q,variant,index,lambda,f\n"
     << d.q << ',' << d.variant << ',' << d.index << ',' << csv_cell(d.lambda) << ',' << csv_cell(joined(d.f)) << '\n';
  return os.str();
}

}  // namespace fillcurve

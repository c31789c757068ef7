#include "mapwalk/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace mapwalk {

namespace {

using nlohmann::json;

json rational_json(const Rational& q) {
  return json{{"exact", to_fraction_string(q)}, {"float", to_double(q)}};
}

const char* tristate_name(Tristate t) {
  switch (t) {
    case Tristate::yes:
      return "yes";
    case Tristate::no:
      return "no";
    default:
      return "indeterminate";
  }
}

const char* odd_prime_case_name(OddPrimeCase c) {
  switch (c) {
    case OddPrimeCase::case_i:
      return "i";
    case OddPrimeCase::case_ii:
      return "ii";
    case OddPrimeCase::case_iii:
      return "iii";
    default:
      return "none";
  }
}

}  // namespace

json build_report(const Map& map, const Incidence& inc, const SpectralData& spectral,
                  const AnalysisReport& analysis, const std::string& source,
                  const AnalysisOptions& options) {
  json doc;

  MapProfile profile = map_profile(map);
  json map_summary{
      {"vertices", map.vertex_count},
      {"edges", map.edge_count},
      {"faces", map.face_count},
      {"genus", map.genus},
      {"arcs", map.dart_count},
      {"vertex_degrees", map.vertex_degrees},
      {"face_degrees", map.face_degrees},
      {"circular", profile.circular},
  };
  if (profile.uniform_vertex_degree && profile.uniform_face_degree)
    map_summary["type"] = {{"face_degree", *profile.uniform_face_degree},
                           {"vertex_degree", *profile.uniform_vertex_degree}};
  else
    map_summary["type"] = nullptr;
  map_summary["incidence_multiplicity"] =
      profile.incidence_multiplicity ? json(*profile.incidence_multiplicity) : json(nullptr);
  doc["map"] = std::move(map_summary);

  json spectral_summary{
      {"dim_plus_one", spectral.dim_plus1},
      {"dim_minus_one", spectral.dim_minus1},
      {"rank_c", spectral.rank_c},
  };
  json chat = json::array();
  for (const ChatEig& e : spectral.chat_eigs)
    chat.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  spectral_summary["chat_eigenvalues"] = std::move(chat);
  json ueigs = json::array();
  for (const UEigenvalue& e : spectral.u_eigs)
    ueigs.push_back(
        {{"re", e.value.real()}, {"im", e.value.imag()}, {"multiplicity", e.multiplicity}});
  spectral_summary["u_eigenvalues"] = std::move(ueigs);
  RationalSpectrum cc = rational_eigenvalues(QMatrix(inc.C * inc.C.transpose()));
  spectral_summary["cc_rational"] = cc.all_rational;
  if (cc.all_rational) {
    json roots = json::array();
    for (const auto& [value, mult] : cc.roots) {
      json entry = rational_json(value);
      entry["multiplicity"] = mult;
      roots.push_back(std::move(entry));
    }
    spectral_summary["cc_eigenvalues"] = std::move(roots);
  }
  doc["spectral"] = std::move(spectral_summary);

  json a;
  json pst = json::array();
  for (const PstPair& p : analysis.pst_pairs)
    pst.push_back({{"u", p.u}, {"v", p.v}, {"time", p.time}});
  a["pst_pairs"] = std::move(pst);
  if (!analysis.general_pst_pairs.empty()) {
    json general = json::array();
    for (const PstPair& p : analysis.general_pst_pairs)
      general.push_back({{"u", p.u}, {"v", p.v}, {"time", p.time}});
    a["general_pst_pairs"] = std::move(general);
  }
  json periodic = json::array();
  for (const VertexPeriod& p : analysis.periodic_vertices)
    periodic.push_back({{"vertex", p.vertex}, {"time", p.time}});
  a["periodic_vertices"] = std::move(periodic);
  a["map_period"] = analysis.map_period ? json(*analysis.map_period) : json(nullptr);
  a["period_power_is_identity"] = analysis.period_power_is_identity;
  a["identity_power"] = analysis.identity_power ? json(*analysis.identity_power) : json(nullptr);
  a["identity_power_constraint"] =
      analysis.identity_power_constraint ? json(*analysis.identity_power_constraint) : json(nullptr);
  a["characterizations"] = {
      {"quasi_tree_bouquet", analysis.quasi_tree_bouquet},
      {"u_squared_identity", analysis.u2.holds},
      {"rational_cc_spectrum", analysis.rational_cc_spectrum},
      {"odd_prime_case", odd_prime_case_name(analysis.odd_prime_case)},
  };
  if (analysis.odd_prime) a["characterizations"]["odd_prime"] = *analysis.odd_prime;
  json cosp = json::array();
  for (const CospectralWitness& w : analysis.cospectral_pairs)
    cosp.push_back({{"u", w.u},
                    {"v", w.v},
                    {"divisor", w.divisor},
                    {"strongly_cospectral", tristate_name(w.strongly_cospectral)}});
  a["cospectral_pairs"] = std::move(cosp);
  json reverse = json::array();
  for (const ReverseTransfer& r : analysis.variants.reverse)
    reverse.push_back({{"u", r.u}, {"v", r.v}, {"time", r.time}});
  json vertex_face = json::array();
  for (const VertexFaceTransfer& r : analysis.variants.vertex_face)
    vertex_face.push_back({{"vertex", r.vertex}, {"face", r.face}, {"time", r.time}});
  a["variant_transfers"] = {{"reverse", std::move(reverse)},
                            {"vertex_face", std::move(vertex_face)}};
  a["bounds"] = {{"totient_period_bound", analysis.period_time_bound.get_str()}};
  a["primitive_orders_advisory"] = analysis.primitive_orders;
  if (analysis.automorphisms)
    a["automorphisms"] = {{"order", analysis.automorphisms->order},
                          {"vertex_transitive", analysis.automorphisms->vertex_transitive},
                          {"reflexible", analysis.automorphisms->reflexible}};
  a["horizon"] = analysis.horizon;
  if (!analysis.map_period || !analysis.identity_power)
    a["horizon_note"] = "not detected within " + std::to_string(analysis.horizon) +
                        " steps; absence within the horizon is not nonexistence";
  doc["analysis"] = std::move(a);

  doc["config"] = {{"max_steps", options.max_steps},
                   {"tol", options.tol},
                   {"general_pst", options.general_pst},
                   {"source", source}};
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  return doc;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out << content;
    if (!out.good()) throw std::runtime_error("short write to '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
}

}  // namespace mapwalk

#include "intpts/records.hpp"

#include <ostream>

namespace intpts {

namespace {

Json rational(const Rational& q) { return to_string(q); }

Json place_list(const std::vector<Place>& places) {
  Json a = Json::array();
  for (const auto& p : places) a.push_back(p.to_string());
  return a;
}

}  // namespace

Json record(const WeilValue& v) { return v.to_string(); }

Json record(const LevelVector& levels) { return levels.to_string(); }

Json record(const PlaceSet& places) {
  return place_list(std::vector<Place>(places.begin(), places.end()));
}

Json record(const WeilReport& r) {
  Json j;
  j["record"] = "weil";
  j["point"] = r.point.to_string();
  j["pass"] = r.pass;
  j["on_subscheme"] = r.on_subscheme;
  Json places = Json::array();
  for (const auto& c : r.places) {
    Json pc;
    pc["place"] = c.value.place.to_string();
    pc["value"] = record(c.value);
    pc["bound"] = c.bound ? rational(*c.bound) : Json(nullptr);
    pc["exempt"] = c.exempt;
    pc["within"] = c.within;
    places.push_back(std::move(pc));
  }
  j["places"] = std::move(places);
  j["offending"] = place_list(r.offending);
  if (r.unresolved_cofactor) j["unresolved_cofactor"] = r.unresolved_cofactor->get_str();
  return j;
}

Json record(const Classification& c) {
  Json j;
  j["record"] = "classification";
  j["classical_total"] = c.classical_total;
  j["classical_arch"] = c.classical_arch;
  j["everywhere_witness"] = record(c.everywhere_witness);
  j["s_witness"] = record(c.s_witness);
  j["support_growth"] = c.support_growth;
  Json arch = Json::array();
  for (const auto& a : c.arch_growth) arch.push_back(rational(a));
  j["arch_growth"] = std::move(arch);
  return j;
}

Json record(const EmittedPoint& e) {
  Json j;
  j["record"] = "point";
  j["point"] = e.point.to_string();
  if (e.parameter) j["parameter"] = e.parameter->to_string();
  if (e.multiple) j["multiple"] = *e.multiple;
  j["levels"] = record(e.levels);
  j["exempt"] = record(e.exempt);
  j["pass"] = e.report.pass;
  return j;
}

Json record(const CloudPoint& p) {
  Json j;
  j["record"] = "point";
  j["point"] = p.point.to_string();
  j["curve"] = p.curve_index;
  if (p.parameter) j["parameter"] = p.parameter->to_string();
  j["levels"] = record(p.levels);
  j["exempt"] = record(p.exempt);
  j["pass"] = p.report.pass;
  return j;
}

Json record(const CurveDiagnostic& d) {
  Json j;
  j["record"] = "curve";
  j["curve"] = d.curve_index;
  j["map"] = d.curve;
  j["kind"] = d.kind;
  j["found"] = d.found;
  j["error"] = d.error ? Json(std::string(to_string(*d.error))) : Json(nullptr);
  if (!d.message.empty()) j["message"] = d.message;
  return j;
}

Json record(const TorsionCertificate& c) {
  Json j;
  j["torsion"] = c.torsion;
  j["order"] = c.order;
  j["multiples_checked"] = c.multiples.size();
  return j;
}

Json record(const FiberOutcome& f) {
  Json j;
  j["record"] = "fiber";
  j["t0"] = rational(f.t0);
  if (f.fiber) {
    j["curve"] = f.fiber->curve.to_string();
    j["section_point"] = f.fiber->point.to_string();
    j["scale"] = f.fiber->u.get_str();
  }
  if (f.certificate) j["certificate"] = record(*f.certificate);
  if (f.levels) j["levels"] = record(*f.levels);
  Json pts = Json::array();
  for (const auto& e : f.points) pts.push_back(record(e));
  j["points"] = std::move(pts);
  j["exhausted"] = f.exhausted;
  j["skipped"] = f.skipped ? Json(std::string(to_string(*f.skipped))) : Json(nullptr);
  if (!f.diagnostic.empty()) j["diagnostic"] = f.diagnostic;
  return j;
}

Json record(const DegreeVerdict& v) {
  Json j;
  j["record"] = "certificate";
  j["degree"] = v.degree;
  j["verdict"] = v.pass ? "PASS" : "FAIL";
  j["rank"] = v.rank;
  j["expected"] = v.expected;
  return j;
}

void write_record(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

}  // namespace intpts

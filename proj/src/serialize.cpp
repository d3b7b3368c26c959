#include "dwb/serialize.hpp"

namespace dwb {

namespace {

json fields_json(const Fields& f) {
  json out = json::object();
  for (const auto& [k, v] : f) out[k] = v;
  return out;
}

}  // namespace

json to_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

json to_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back(to_json(c));
  return out;
}

json to_json(const PellPair& p, const std::string& var) {
  return {{"n", p.n}, {"s", p.s.to_string(var)}, {"f", p.f.to_string(var)}, {"g", p.g.to_string(var)}};
}

json to_json(const WitnessReport& r) {
  json w = json::array();
  for (const auto& f : r.witnesses) w.push_back(fields_json(f));
  json out = {{"system", r.system},
              {"inputs", fields_json(r.inputs)},
              {"verdict", to_string(r.verdict)},
              {"witnesses", w},
              {"fold_count", r.fold_count},
              {"conditions", to_json(r.checks)},
              {"notes", r.notes}};
  out["bound"] = r.bound ? json(*r.bound) : json(nullptr);
  return out;
}

json to_json(const SpecialFormIndex& i) { return {{"n", i.n}, {"p", i.p}, {"m", i.m}}; }

json to_json(const CycloProductSpec& s) {
  json idx = json::array();
  for (const auto& i : s.indices) idx.push_back(to_json(i));
  return {{"sign", s.sign}, {"indices", idx}, {"total_degree", s.total_degree()}};
}

json to_json(const ApproxPoint& a) {
  json recs = json::array();
  for (const auto& r : a.records) {
    json off = json::array();
    for (const auto& [j, v] : r.off_index_nonzero) off.push_back({{"j", j}, {"order", to_json(v)}});
    recs.push_back({{"index", to_json(r.index)},
                    {"lift", r.lift.get_str()},
                    {"order", to_json(r.measured)},
                    {"target", r.target},
                    {"off_index_checked", r.off_index_checked},
                    {"off_index_nonzero", off}});
  }
  return {{"c", a.c.get_str()}, {"modulus", a.modulus.get_str()}, {"ell", a.ell}, {"records", recs}};
}

json to_json(const PdividesProbe& p) {
  return {{"index", to_json(p.index)},
          {"norm", p.norm.get_str()},
          {"norm_exponent", p.norm_exponent},
          {"target", p.target},
          {"local_order", to_json(p.local_order)}};
}

json to_json(const FormDiagnosis& d) {
  json symbols = json::object();
  for (const auto& [v, s] : d.symbols) symbols[v.to_string()] = s;
  json aniso = json::array();
  for (const auto& v : d.anisotropic_places) aniso.push_back(v.to_string());
  return {{"a", d.a.get_str()},
          {"b", d.b.get_str()},
          {"symbols", symbols},
          {"anisotropic_places", aniso},
          {"globally_isotropic", d.globally_isotropic}};
}

json to_json(const EisensteinCert& c, const std::string&) {
  json vals = json::array();
  for (const auto& v : c.valuations) vals.push_back(to_json(v));
  return {{"p", c.p},
          {"degree", c.degree},
          {"r", c.r},
          {"valuations", vals},
          {"checks", to_json(c.checks)},
          {"verdict", c.verdict}};
}

json to_json(const XiTriple& x) {
  return {{"xi1", x.xi1.get_str()}, {"xi2", x.xi2.get_str()}, {"xi3", x.xi3.get_str()}};
}

json to_json(const PadicXi& x) {
  json locals = json::array();
  for (const auto& l : x.locals) {
    locals.push_back({{"p", l.p}, {"r", l.r}, {"h", l.h.to_string("W")}, {"certificate", to_json(l.cert)}});
  }
  return {{"xi", to_json(x.xi)}, {"F", x.F.to_string()}, {"locals", locals}};
}

json to_json(const RealXi& x) {
  return {{"xi", to_json(x.xi)},
          {"h", x.h.to_string()},
          {"real_roots", x.real_roots},
          {"used_fallback", x.used_fallback}};
}

json to_json(const ParityGate& g) {
  return {{"h", g.h.to_string()},
          {"ord_g", to_json(g.ord_g)},
          {"ord_h", to_json(g.ord_h)},
          {"h_even", g.h_even},
          {"biconditional", g.biconditional}};
}

json to_json(const ParTuple& t) {
  return {{"n", t.n.get_str()}, {"b", t.b.get_str()}, {"c", t.c.get_str()},
          {"d", t.d.get_str()}, {"g", t.g.get_str()}, {"v", t.v.get_str()}};
}

json to_json(const ParVerdict& v) {
  return {{"accepted", v.accepted}, {"conditions", to_json(v.conditions)}};
}

json to_json(const FiveSquaresResult& r) {
  json parts = json::array();
  if (r.found) {
    for (const auto& p : r.parts) parts.push_back(p.to_string());
  }
  return {{"found", r.found}, {"exhausted", r.exhausted}, {"g", r.g}, {"parts", parts}, {"count", r.count}};
}

}  // namespace dwb

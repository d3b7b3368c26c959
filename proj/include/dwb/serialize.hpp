#pragma once

#include "dwb/cyclo.hpp"
#include "dwb/defsys.hpp"
#include "dwb/parcheck.hpp"
#include "dwb/pell.hpp"
#include "dwb/qforms.hpp"
#include "dwb/report.hpp"

namespace dwb {

json to_json(const Valuation& v);  // integer, or "inf"
json to_json(const PellPair& p, const std::string& var = "t");
json to_json(const WitnessReport& r);
json to_json(const SpecialFormIndex& i);
json to_json(const CycloProductSpec& s);
json to_json(const ApproxPoint& a);
json to_json(const PdividesProbe& p);
json to_json(const FormDiagnosis& d);
json to_json(const EisensteinCert& c, const std::string& var = "T");
json to_json(const XiTriple& x);
json to_json(const PadicXi& x);
json to_json(const RealXi& x);
json to_json(const ParityGate& g);
json to_json(const ParTuple& t);
json to_json(const ParVerdict& v);
json to_json(const FiveSquaresResult& r);
json to_json(const std::vector<Check>& checks);

}  // namespace dwb

// JSON serialization for weights, operators and polynomial families, plus
// the CSV weight grid. Rationals travel as "num/den" strings so files stay
// exact; dumps use the library's sorted object keys, which makes a
// serialize/parse/serialize round trip byte-identical.
#pragma once

#include <json.hpp>

#include "mxop/diffop.hpp"
#include "mxop/weight.hpp"

namespace mxop {

using Json = nlohmann::json;

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);

Json qmat_to_json(const QMat& m);
QMat qmat_from_json(const Json& j);

Json polymat_to_json(const PolyMat& m);
PolyMat polymat_from_json(const Json& j);

Json ratmat_to_json(const RatMat& m);
RatMat ratmat_from_json(const Json& j);

Json kernel_to_json(const Kernel& k);
Kernel kernel_from_json(const Json& j);

Json support_to_json(const Support& s);
Support support_from_json(const Json& j);

Json weight_to_json(const WeightSpec& w);
WeightSpec weight_from_json(const Json& j);

Json op_to_json(const DiffOp& d);
DiffOp op_from_json(const Json& j);

// Two-space indented dump with a trailing newline, the one format every
// file writer here uses.
std::string dump_json(const Json& j);

// One line per grid point t = lo, lo+step, ..., up to hi: the values
// t, w11, w12, w21, w22 of the continuous part times cont_scale. No header.
std::string weight_grid_csv(const WeightSpec& w, double lo, double hi, double step,
                            double cont_scale = 1.0);

}  // namespace mxop

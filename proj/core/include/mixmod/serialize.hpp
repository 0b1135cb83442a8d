#pragma once

// JSON encodings of the value types. Complex numbers are [re, im] pairs;
// arrays are row-major in axis order. Exponents may be the string "inf".

#include <nlohmann/json.hpp>

#include "mixmod/gabor.hpp"
#include "mixmod/kernel.hpp"
#include "mixmod/mixed_norm.hpp"
#include "mixmod/types.hpp"
#include "mixmod/wilson.hpp"

namespace mixmod {

using Json = nlohmann::json;

/// Malformed or inconsistent JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Signal& f);
Signal signal_from_json(const Json& j);

Json to_json(const CoeffArray& a);
CoeffArray coeff_array_from_json(const Json& j);

Json to_json(const GaborSystem& sys);
GaborSystem gabor_system_from_json(const Json& j);

Json to_json(const WilsonBasis& basis);
WilsonBasis wilson_basis_from_json(const Json& j);

/// Only the "one" and "poly" weight kinds are representable.
Json to_json(const MixedNormSpec& spec);
MixedNormSpec mixed_norm_spec_from_json(const Json& j);

Json to_json(const KernelOperator& k);
KernelOperator kernel_from_json(const Json& j);

Json to_json(const KNSymbol& tau);
KNSymbol symbol_from_json(const Json& j);

/// A finite number, or "inf"/"-inf" for infinities.
Json real_to_json(double v);
double real_from_json(const Json& j);

}  // namespace mixmod

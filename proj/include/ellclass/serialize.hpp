#pragma once

#include <exception>
#include <string>

#include "json.hpp"

#include "ellclass/efun.hpp"
#include "ellclass/identities.hpp"
#include "ellclass/linkpattern.hpp"

namespace ellclass {

using Json = nlohmann::ordered_json;

/// "%.17g": enough digits to round-trip a double.
std::string format_double(double v);

/// [re, im] as decimal strings.
Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const GaussRational& c);
GaussRational gauss_from_json(const Json& j);

/// {"x1": "1", "mu2": "-1/2"}.
Json to_json(const LinearForm& f);
LinearForm linear_form_from_json(const Json& j);

/// Upper-triangle triples [["x1", "mu1", "1/2"], ...].
Json to_json(const QForm& q);
QForm qform_from_json(const Json& j);

Json to_json(const Permutation& w);
Permutation permutation_from_json(const Json& j);

/// Node table {"nodes": [...], "root": k}; children refer to earlier node indices,
/// so shared subtrees are stored once.
Json to_json(const EFun& f);
/// Rebuilds through the EFun factories and checks every recorded type.
EFun efun_from_json(const Json& j);

Json to_json(const PointAssignment& pt);
Json to_json(const ThetaPolynomial& p);
Json to_json(const IdentityReport& r);

/// {"error": {"kind": ..., "message": ..., "offset"?: ..., "path"?: ...}}.
Json error_json(const std::exception& e);

}  // namespace ellclass

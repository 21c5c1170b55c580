#include "ellclass/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <string_view>

#include "ellclass/errors.hpp"

namespace ellclass {

namespace {

Error bad(const std::string& what) { return Error(ErrorKind::InvalidArgument, "malformed JSON: " + what); }

double parse_double(const Json& j) {
  if (!j.is_string()) throw bad("expected a decimal string");
  const std::string s = j.get<std::string>();
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw bad("bad number '" + s + "'");
  return v;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw bad("expected a rational string");
  return parse_rational(j.get<std::string>());
}

const char* kind_name(EFun::Kind k) {
  switch (k) {
    case EFun::Kind::Sum: return "sum";
    case EFun::Kind::Product: return "product";
    case EFun::Kind::Scale: return "scale";
    case EFun::Kind::Delta: return "delta";
    case EFun::Kind::Theta: return "theta";
    case EFun::Kind::InvTheta: return "inv_theta";
    case EFun::Kind::XPermuted: return "x_permuted";
  }
  return "?";
}

EFun::Kind kind_from_name(const std::string& s) {
  static const std::map<std::string, EFun::Kind, std::less<>> table = {
      {"sum", EFun::Kind::Sum},     {"product", EFun::Kind::Product},     {"scale", EFun::Kind::Scale},
      {"delta", EFun::Kind::Delta}, {"theta", EFun::Kind::Theta},         {"inv_theta", EFun::Kind::InvTheta},
      {"x_permuted", EFun::Kind::XPermuted},
  };
  auto it = table.find(s);
  if (it == table.end()) throw bad("unknown node kind '" + s + "'");
  return it->second;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json to_json(Complex z) { return Json::array({format_double(z.real()), format_double(z.imag())}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw bad("complex value must be [re, im]");
  return {parse_double(j[0]), parse_double(j[1])};
}

Json to_json(const GaussRational& c) { return Json::array({to_string(c.re), to_string(c.im)}); }

GaussRational gauss_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw bad("constant must be [re, im]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Json to_json(const LinearForm& f) {
  Json out = Json::object();
  for (const auto& [s, c] : f.terms()) out[s.name()] = to_string(c);
  return out;
}

LinearForm linear_form_from_json(const Json& j) {
  if (!j.is_object()) throw bad("linear form must be an object");
  LinearForm f;
  for (const auto& [key, value] : j.items()) f.add(Symbol::parse(key), rational_from_json(value));
  return f;
}

Json to_json(const QForm& q) {
  Json out = Json::array();
  for (const auto& [key, c] : q.entries()) out.push_back(Json::array({key.first.name(), key.second.name(), to_string(c)}));
  return out;
}

QForm qform_from_json(const Json& j) {
  if (!j.is_array()) throw bad("quadratic form must be an array of triples");
  QForm q;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string()) throw bad("bad quadratic form triple");
    q.add_entry(Symbol::parse(t[0].get<std::string>()), Symbol::parse(t[1].get<std::string>()), rational_from_json(t[2]));
  }
  return q;
}

Json to_json(const Permutation& w) { return Json(w.images()); }

Permutation permutation_from_json(const Json& j) {
  if (!j.is_array()) throw bad("permutation must be an array");
  std::vector<int> images;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw bad("permutation entries must be integers");
    images.push_back(v.get<int>());
  }
  return Permutation(std::move(images));
}

Json to_json(const EFun& f) {
  Json nodes = Json::array();
  std::map<const EFun::Node*, std::size_t> ids;
  std::function<std::size_t(const EFun&)> visit = [&](const EFun& g) -> std::size_t {
    if (auto it = ids.find(g.node()); it != ids.end()) return it->second;
    Json children = Json::array();
    for (const EFun& c : g.children()) children.push_back(visit(c));
    Json rec;
    rec["kind"] = kind_name(g.kind());
    switch (g.kind()) {
      case EFun::Kind::Delta:
        rec["a"] = to_json(g.arg_a());
        rec["b"] = to_json(g.arg_b());
        break;
      case EFun::Kind::Theta:
      case EFun::Kind::InvTheta:
        rec["a"] = to_json(g.arg_a());
        break;
      case EFun::Kind::Scale:
        rec["constant"] = to_json(g.constant());
        break;
      case EFun::Kind::XPermuted:
        rec["perm"] = to_json(g.permutation());
        break;
      default:
        break;
    }
    if (!children.empty()) rec["children"] = std::move(children);
    rec["type"] = to_json(g.type());
    nodes.push_back(std::move(rec));
    const std::size_t id = nodes.size() - 1;
    ids.emplace(g.node(), id);
    return id;
  };
  const std::size_t root = visit(f);
  Json out;
  out["nodes"] = std::move(nodes);
  out["root"] = root;
  return out;
}

EFun efun_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("root")) throw bad("expression needs nodes and root");
  const Json& nodes = j.at("nodes");
  if (!nodes.is_array()) throw bad("nodes must be an array");
  std::vector<EFun> built;
  built.reserve(nodes.size());
  for (const Json& rec : nodes) {
    if (!rec.is_object() || !rec.contains("kind") || !rec["kind"].is_string()) throw bad("node needs a kind");
    std::vector<EFun> children;
    if (rec.contains("children")) {
      for (const Json& c : rec["children"]) {
        if (!c.is_number_unsigned() || c.get<std::size_t>() >= built.size()) throw bad("child index out of order");
        children.push_back(built[c.get<std::size_t>()]);
      }
    }
    auto only_child = [&]() -> EFun {
      if (children.size() != 1) throw bad("node needs exactly one child");
      return children.front();
    };
    const EFun::Kind kind = kind_from_name(rec["kind"].get<std::string>());
    const QForm recorded = rec.contains("type") ? qform_from_json(rec["type"]) : QForm();
    EFun node = EFun::one();
    switch (kind) {
      case EFun::Kind::Sum:
        node = children.empty() ? EFun::zero(recorded) : EFun::sum(std::move(children));
        break;
      case EFun::Kind::Product: node = EFun::product(std::move(children)); break;
      case EFun::Kind::Scale: node = EFun::scale(gauss_from_json(rec.at("constant")), only_child()); break;
      case EFun::Kind::Delta:
        node = EFun::delta_leaf(linear_form_from_json(rec.at("a")), linear_form_from_json(rec.at("b")));
        break;
      case EFun::Kind::Theta: node = EFun::theta_leaf(linear_form_from_json(rec.at("a"))); break;
      case EFun::Kind::InvTheta: node = EFun::inv_theta_leaf(linear_form_from_json(rec.at("a"))); break;
      case EFun::Kind::XPermuted:
        node = EFun::x_permuted(permutation_from_json(rec.at("perm")), only_child());
        break;
    }
    if (rec.contains("type") && node.type() != recorded) throw bad("recorded type does not match node");
    built.push_back(node);
  }
  const Json& root = j.at("root");
  if (!root.is_number_unsigned() || root.get<std::size_t>() >= built.size()) throw bad("root index out of range");
  return built[root.get<std::size_t>()];
}

Json to_json(const PointAssignment& pt) {
  Json out = Json::object();
  for (const auto& [s, v] : pt.values()) out[s.name()] = to_json(v);
  return out;
}

Json to_json(const ThetaPolynomial& p) {
  Json monomials = Json::array();
  for (const ThetaMonomial& m : p.monomials()) {
    Json factors = Json::array();
    for (const auto& [arg, e] : m.exponents) factors.push_back(Json{{"arg", arg.to_string()}, {"exponent", e}});
    monomials.push_back(Json{{"coefficient", to_json(m.coefficient)}, {"factors", std::move(factors)}});
  }
  return Json{{"monomials", std::move(monomials)}, {"type", to_json(p.type())}};
}

Json to_json(const IdentityReport& r) {
  Json out;
  out["name"] = r.name;
  out["passed"] = r.passed;
  out["samples"] = r.samples;
  out["max_relative_residual"] = format_double(r.max_relative_residual);
  out["tolerance"] = format_double(r.tolerance);
  out["resamples"] = r.resamples;
  out["vacuous"] = r.vacuous;
  out["detail"] = r.detail;
  return out;
}

Json error_json(const std::exception& e) {
  Json err;
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err["kind"] = std::string(error_kind_name(pe->kind()));
    err["message"] = pe->what();
    err["offset"] = pe->offset();
  } else if (const auto* pole = dynamic_cast<const PoleError*>(&e)) {
    err["kind"] = std::string(error_kind_name(pole->kind()));
    err["message"] = pole->what();
    err["path"] = pole->path();
  } else if (const auto* ee = dynamic_cast<const Error*>(&e)) {
    err["kind"] = std::string(error_kind_name(ee->kind()));
    err["message"] = ee->what();
  } else {
    err["kind"] = "InternalError";
    err["message"] = e.what();
  }
  return Json{{"error", std::move(err)}};
}

}  // namespace ellclass

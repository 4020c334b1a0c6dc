#pragma once

#include <json.hpp>

#include "cuspwatch/cuspwatch.hpp"

namespace cuspwatch::io {

using Json = nlohmann::ordered_json;

/// Malformed user input (exit 64).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Json parse(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

// ---- readers -----------------------------------------------------------------

inline Rational rational(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const PreconditionError& e) {
      throw InputError(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("rational values must be integers or \"p/q\" strings");
}

inline QVec vec(const Json& j) {
  if (!j.is_array()) throw InputError("expected a JSON array of rationals");
  QVec v;
  for (const auto& x : j) v.push_back(rational(x));
  return v;
}

inline std::vector<QVec> vecs(const Json& j) {
  if (!j.is_array()) throw InputError("expected a JSON array of vectors");
  std::vector<QVec> out;
  for (const auto& x : j) out.push_back(vec(x));
  return out;
}

inline QMat mat(const Json& j) {
  auto rows = vecs(j);
  if (rows.empty()) throw InputError("empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw InputError("ragged matrix");
  return QMat::from_rows(rows);
}

/// Rational vector given as "a,b,c" or a JSON array.
inline QVec csv_vec(const std::string& text) {
  if (!text.empty() && text.front() == '[') return vec(parse(text, "vector"));
  QVec v;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    try {
      v.push_back(parse_rational(text.substr(start, end - start)));
    } catch (const PreconditionError& e) {
      throw InputError(e.what());
    }
    start = end + 1;
  }
  return v;
}

// ---- writers -----------------------------------------------------------------

inline Json to_json(const Rational& r) { return scalar_str(r); }

inline Json to_json(const QVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_str(x));
  return a;
}

inline Json to_json(const ZVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

inline Json to_json(const std::vector<QVec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

inline Json to_json(const QMat& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

inline Json to_json(const Quad3& q) { return Json{{"a", scalar_str(q.a())}, {"b", scalar_str(q.b())}, {"d", 3}}; }

inline Json to_json(const QuadMat& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    a.push_back(row);
  }
  return a;
}

inline Json to_json(const LogValue& v) { return Json{{"exact", v.symbolic()}, {"decimal", v.decimal(output_digits())}}; }

inline Json to_json(const Character& c) {
  Json coeffs = Json::array();
  for (auto x : c.coeffs()) coeffs.push_back(x);
  return Json{{"name", c.str()}, {"coeffs", coeffs}};
}

inline Json to_json(const Tuple& t) {
  Json a = Json::array();
  for (auto x : t) a.push_back(x + 1);
  return a;
}

inline Json to_json(const RadicalWitness& r) {
  return Json{{"n", r.n}, {"j", r.j}, {"basis", to_json(r.basis)}, {"dim_u", r.dim_u()}};
}

inline Json to_json(const Gauge& f) {
  switch (f.kind()) {
    case Gauge::Kind::Zero:
      return Json{{"kind", "zero"}};
    case Gauge::Kind::Linear:
      return Json{{"kind", "linear"}, {"slope", scalar_str(f.slope())}};
    case Gauge::Kind::Tabulated:
      break;
  }
  Json t = Json::array();
  for (const auto& [r, v] : f.table()) t.push_back(Json::array({scalar_str(r), scalar_str(v)}));
  return Json{{"kind", "tabulated"}, {"table", t}};
}

inline Json to_json(const CoverElement& e) {
  Json psi = Json::array(), d = Json::array(), restricted = Json::array();
  for (std::size_t i = 0; i < e.psi.size(); ++i) {
    psi.push_back(to_json(e.psi[i]));
    d.push_back(to_json(e.d(i)));
    restricted.push_back(to_json(e.functionals[i]));
  }
  return Json{{"witness", to_json(e.witness)}, {"psi", psi}, {"d", d}, {"restricted", restricted},
              {"gauge", to_json(e.gauge)}};
}

inline Json to_json(const WitnessVector& w, const SubgroupSpec& a) {
  Json comps = Json::array();
  for (const auto& [lam, size] : w.components)
    comps.push_back(Json{{"character", to_json(lam)}, {"norm", scalar_str(size)}});
  ShrinkCone c = ray_shrink_set(w, a);
  Json out{{"components", comps}, {"cone", to_json(c.positive)}, {"cone_empty", c.empty}};
  if (w.radical) out["radical"] = to_json(*w.radical);
  return out;
}

inline Json to_json(const DivergenceCertificate& c) {
  Json fan = Json::array();
  for (const auto& f : c.fan) {
    Json face{{"signs", f.signs}, {"direction", to_json(f.interior)}};
    face["witness"] = f.witness ? Json(*f.witness) : Json(nullptr);
    fan.push_back(face);
  }
  Json out{{"certified", c.certified}, {"arrangement", to_json(c.arrangement)}, {"fan", fan}};
  out["uncovered"] = c.uncovered ? to_json(*c.uncovered) : Json(nullptr);
  return out;
}

inline Json to_json(const Quaternion& q) { return to_json(QVec(q.x.begin(), q.x.end())); }

inline Json to_json(const QuatMat2& m) {
  Json a = Json::array();
  for (const auto& row : m.e) a.push_back(Json::array({to_json(row[0]), to_json(row[1])}));
  return a;
}

}  // namespace cuspwatch::io

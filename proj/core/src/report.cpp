#include "polysurj/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace polysurj {

using nlohmann::json;

namespace {

std::string render_point(const std::vector<Rational>& pt) {
  std::string s = "(";
  for (std::size_t i = 0; i < pt.size(); ++i) s += (i ? ", " : "") + to_string(pt[i]);
  return s + ")";
}

std::string render_interval(const Isolation& iso) {
  if (iso.is_exact()) return to_string(*iso.exact_root);
  return "[" + to_string(iso.lo) + ", " + to_string(iso.hi) + "]";
}

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_string(r));
  return a;
}

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json det_json(const DetStatus& d) {
  json j;
  j["kind"] = to_string(d.kind);
  j["nvars"] = d.determinant.nvars();
  j["determinant"] = render(d.determinant);
  j["value"] = d.value ? json(to_string(*d.value)) : json(nullptr);
  j["point"] = rationals(d.point);
  j["other_point"] = rationals(d.other_point);
  return j;
}

json certificate_json(const Certificate& c) {
  json j;
  j["verdict"] = to_string(c.verdict);
  j["via"] = c.via;
  j["reason"] = c.reason;
  j["witness"] = rationals(c.witness);
  j["assumptions"] = c.assumptions;
  json ev;
  ev["systems"] = json::array();
  for (const auto& s : c.systems) ev["systems"].push_back({{"name", s.name}, {"nvars", s.nvars}, {"forms", s.forms}});
  ev["subverdicts"] = json::array();
  for (const auto& s : c.subverdicts)
    ev["subverdicts"].push_back(
        {{"name", s.name}, {"outcome", to_string(s.outcome)}, {"detail", s.detail}, {"gate", s.gate}});
  ev["det_status"] = c.det ? det_json(*c.det) : json(nullptr);
  ev["bezout"] = c.bezout ? integer_json(*c.bezout) : json(nullptr);
  ev["parity_claim"] = c.parity_claim;
  ev["det_is_unit"] = c.det_is_unit ? json(*c.det_is_unit) : json(nullptr);
  j["evidence"] = std::move(ev);
  return j;
}

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("certificate JSON: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' is not a string");
  return v.get<std::string>();
}

std::vector<Rational> rationals_from(const json& a) {
  if (!a.is_array()) bad("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& e : a) {
    if (!e.is_string()) bad("rational entries must be strings");
    out.push_back(parse_rational(e.get<std::string>()));
  }
  return out;
}

Integer integer_from(const json& v) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) return Integer(v.get<std::string>());
  bad("bezout must be an integer or a decimal string");
}

SubVerdict::Outcome outcome_from(const std::string& s) {
  for (auto o : {SubVerdict::Outcome::Passed, SubVerdict::Outcome::Failed, SubVerdict::Outcome::Inconclusive,
                 SubVerdict::Outcome::Info})
    if (to_string(o) == s) return o;
  bad("unknown outcome '" + s + "'");
}

DetStatus::Kind kind_from(const std::string& s) {
  for (auto k : {DetStatus::Kind::ConstantNonzero, DetStatus::Kind::PositiveByMonomialTest,
                 DetStatus::Kind::VanishWitness, DetStatus::Kind::SignChange, DetStatus::Kind::AssumedNonvanishing,
                 DetStatus::Kind::Unknown})
    if (to_string(k) == s) return k;
  bad("unknown determinant status '" + s + "'");
}

Certificate certificate_from(const json& j) {
  Certificate c;
  auto verdict = verdict_from_string(string_field(j, "verdict"));
  if (!verdict) bad("unknown verdict");
  c.verdict = *verdict;
  c.via = string_field(j, "via");
  c.reason = string_field(j, "reason");
  c.witness = rationals_from(field(j, "witness"));
  for (const auto& a : field(j, "assumptions")) c.assumptions.push_back(a.get<std::string>());
  const json& ev = field(j, "evidence");
  for (const auto& s : field(ev, "systems")) {
    SystemRecord r;
    r.name = string_field(s, "name");
    r.nvars = field(s, "nvars").get<std::size_t>();
    for (const auto& f : field(s, "forms")) r.forms.push_back(f.get<std::string>());
    c.systems.push_back(std::move(r));
  }
  for (const auto& s : field(ev, "subverdicts"))
    c.subverdicts.push_back(
        {string_field(s, "name"), outcome_from(string_field(s, "outcome")), string_field(s, "detail"),
         field(s, "gate").get<bool>()});
  const json& det = field(ev, "det_status");
  if (!det.is_null()) {
    DetStatus d;
    d.kind = kind_from(string_field(det, "kind"));
    const auto nvars = field(det, "nvars").get<std::size_t>();
    d.determinant = parse_poly(string_field(det, "determinant"), nvars);
    const json& value = field(det, "value");
    if (!value.is_null()) d.value = parse_rational(value.get<std::string>());
    d.point = rationals_from(field(det, "point"));
    d.other_point = rationals_from(field(det, "other_point"));
    c.det = std::move(d);
  }
  const json& bezout = field(ev, "bezout");
  if (!bezout.is_null()) c.bezout = integer_from(bezout);
  c.parity_claim = field(ev, "parity_claim").get<bool>();
  const json& unit = field(ev, "det_is_unit");
  if (!unit.is_null()) c.det_is_unit = unit.get<bool>();
  enforce_evidence(c);
  return c;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
}

json isolation_json(const Isolation& iso) {
  return {{"lo", to_string(iso.lo)}, {"hi", to_string(iso.hi)}, {"exact", iso.is_exact()}};
}

}  // namespace

std::string to_text(const Certificate& c) {
  std::ostringstream out;
  out << "[" << c.via << "] " << to_string(c.verdict) << "\n";
  if (!c.reason.empty()) out << "  reason: " << c.reason << "\n";
  if (!c.witness.empty()) out << "  witness: " << render_point(c.witness) << "\n";
  for (const auto& a : c.assumptions) out << "  assumption: " << a << "\n";
  for (const auto& s : c.systems) {
    out << "  system " << s.name << ":\n";
    for (const auto& f : s.forms) out << "    " << f << " = 0\n";
  }
  for (const auto& s : c.subverdicts)
    out << "  " << (s.gate ? "gate " : "note ") << s.name << ": " << to_string(s.outcome)
        << (s.detail.empty() ? "" : " (" + s.detail + ")") << "\n";
  if (c.det) out << "  determinant status: " << to_string(c.det->kind) << "\n";
  if (c.bezout) out << "  bezout number: " << c.bezout->get_str() << "\n";
  if (c.parity_claim) out << "  every finite real fiber has odd cardinality\n";
  if (c.det_is_unit) out << "  determinant is a nonzero constant: " << (*c.det_is_unit ? "yes" : "no") << "\n";
  return out.str();
}

std::string to_text(const FiberReport& r) {
  std::ostringstream out;
  out << "fiber over " << render_point(r.target) << ": " << to_string(r.status);
  if (r.status != FiberReport::Status::InfiniteOverC) out << ", count " << r.count();
  out << ", parity " << to_string(r.parity) << ", bezout number " << r.bezout.get_str() << "\n";
  for (const auto& b : r.points) out << "  x in " << render_interval(b.x) << ", y in " << render_interval(b.y) << "\n";
  return out.str();
}

std::string to_json_string(const Certificate& c) { return certificate_json(c).dump(2); }

std::string to_json_string(const std::vector<Certificate>& certs) {
  json doc;
  doc["certificates"] = json::array();
  for (const auto& c : certs) doc["certificates"].push_back(certificate_json(c));
  return doc.dump(2);
}

std::string to_json_string(const FiberReport& r) {
  json j;
  j["target"] = rationals(r.target);
  j["status"] = to_string(r.status);
  j["count"] = r.count();
  j["parity"] = to_string(r.parity);
  j["bezout"] = integer_json(r.bezout);
  j["points"] = json::array();
  for (const auto& b : r.points) j["points"].push_back({{"x", isolation_json(b.x)}, {"y", isolation_json(b.y)}});
  return j.dump(2);
}

Certificate certificate_from_json(std::string_view text) {
  try {
    return certificate_from(parse_document(text));
  } catch (const json::exception& e) {
    bad(e.what());
  } catch (const ParseError& e) {
    bad(e.what());
  }
}

std::vector<Certificate> certificates_from_json(std::string_view text) {
  try {
    json doc = parse_document(text);
    std::vector<Certificate> out;
    for (const auto& c : field(doc, "certificates")) out.push_back(certificate_from(c));
    return out;
  } catch (const json::exception& e) {
    bad(e.what());
  } catch (const ParseError& e) {
    bad(e.what());
  }
}

}  // namespace polysurj

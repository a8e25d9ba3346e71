#include "outerstring/io.hpp"

#include <fstream>
#include <sstream>

namespace outerstring {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    if (auto colon = msg.rfind(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
    throw Error(ErrorKind::ParseError, location(text, e.byte) + ": " + msg);
  }
}

Rational coordinate(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>())));
  if (j.is_number_unsigned()) return Rational(BigInt(std::to_string(j.get<unsigned long long>())));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      bad(where, e.what());
    }
  }
  if (j.is_number_float()) bad(where, "floating-point coordinates are not exact; write \"0.5\" or \"1/2\"");
  bad(where, "expected an integer, a decimal string, or \"p/q\"");
}

std::vector<std::string> id_list(const Json& j, const char* key) {
  if (!j.contains(key)) bad(key, "missing");
  const Json& a = j.at(key);
  if (!a.is_array()) bad(key, "expected an array of ids");
  std::vector<std::string> out;
  for (const auto& x : a) {
    if (!x.is_string()) bad(key, "expected an array of ids");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::string id_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) bad(key, "expected a curve id");
  return j.at(key).get<std::string>();
}

Json ids(const CurveFamily& f, const CurveSet& s) { return Json(f.ids_of(s)); }

}  // namespace

std::vector<GroundedCurve> parse_family_curves(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object() || !j.contains("curves")) bad("top level", "expected an object with key \"curves\"");
  const Json& curves = j.at("curves");
  if (!curves.is_array()) bad("curves", "expected an array");
  std::vector<GroundedCurve> out;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const std::string where = "curves[" + std::to_string(i) + "]";
    const Json& c = curves[i];
    if (!c.is_object()) bad(where, "expected an object");
    if (!c.contains("id") || !c.at("id").is_string()) bad(where + ".id", "expected a string");
    if (!c.contains("vertices") || !c.at("vertices").is_array()) bad(where + ".vertices", "expected an array");
    GroundedCurve g{c.at("id").get<std::string>(), {}};
    const Json& vs = c.at("vertices");
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const std::string vw = where + ".vertices[" + std::to_string(k) + "]";
      if (!vs[k].is_array() || vs[k].size() != 2) bad(vw, "expected [x, y]");
      g.vertices.push_back(Point{coordinate(vs[k][0], vw + "[0]"), coordinate(vs[k][1], vw + "[1]")});
    }
    out.push_back(std::move(g));
  }
  return out;
}

CurveFamily parse_family(std::string_view text) { return validate_family(parse_family_curves(text)); }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << text;
}

CurveFamily load_family(const std::string& path) { return parse_family(read_text(path)); }

Json coordinate_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(to_string(q));
}

Json family_json(std::span<const GroundedCurve> curves) {
  Json arr = Json::array();
  for (const auto& c : curves) {
    Json vs = Json::array();
    for (const auto& p : c.vertices) vs.push_back(Json::array({coordinate_json(p.x), coordinate_json(p.y)}));
    arr.push_back(Json{{"id", c.id}, {"vertices", vs}});
  }
  return Json{{"curves", arr}};
}

Json family_json(const CurveFamily& f) { return family_json(std::span<const GroundedCurve>(f.curves())); }

Json skeleton_json(const CurveFamily& f, const Skeleton& sk) {
  return Json{{"u", f[sk.u].id}, {"v", f[sk.v].id}, {"supports", ids(f, sk.supports)}};
}

Json bracket_json(const CurveFamily& f, const Bracket& br) {
  Json s_of = Json::array();
  for (const auto& e : br.entries()) s_of.push_back(Json{{"p", f[e.p].id}, {"s", f[e.s].id}});
  return Json{{"P", ids(f, br.P())}, {"S", ids(f, br.S())}, {"s_of", s_of}};
}

Json clique_system_json(const CurveFamily& f, const CliqueSystem& cs) {
  Json cliques = Json::array(), anchors = Json::array(), sides = Json::array();
  for (std::size_t j = 0; j < cs.size(); ++j) {
    const auto& a = cs.cliques[j];
    cliques.push_back(ids(f, a.clique));
    anchors.push_back(Json{{"l", f[a.l].id}, {"r", f[a.r].id}});
    Json row = Json::array();
    for (std::size_t i = 0; i < j; ++i) row.push_back(std::string(to_string(cs.sides[j][i])));
    sides.push_back(row);
  }
  return Json{{"cliques", cliques}, {"anchors", anchors}, {"sides", sides}};
}

Json report_json(const CurveFamily& f, const ExtractionReport& rep) {
  Json steps = Json::array();
  for (const auto& s : rep.steps) {
    Json values = Json::object();
    for (const auto& [k, v] : s.values) values[k] = v;
    steps.push_back(Json{{"name", s.name}, {"chi_values", values}, {"chosen_ids", s.chosen}});
  }
  Json out{{"outcome", std::string(to_string(rep.outcome))}, {"procedure", rep.procedure}};
  out["structure"] = rep.structure.empty() ? Json(nullptr) : Json(rep.structure);
  out["steps"] = steps;
  if (rep.failure)
    out["failure"] = Json{{"step", rep.failure->step}, {"threshold", rep.failure->threshold}, {"measured", rep.failure->measured}};
  else
    out["failure"] = nullptr;
  if (!rep.found()) {
    out["result"] = nullptr;
  } else if (rep.structure == "bracket_system") {
    Json brackets = Json::array();
    for (const auto& b : rep.brackets) brackets.push_back(bracket_json(f, b));
    Json clique = Json::array();
    for (auto c : rep.clique) clique.push_back(f[c].id);
    out["result"] = Json{{"brackets", brackets}, {"clique", clique}};
  } else if (rep.structure == "clique_system") {
    out["result"] = clique_system_json(f, *rep.clique_system);
  } else if (rep.structure == "skeleton") {
    out["result"] = Json{{"skeleton", skeleton_json(f, *rep.skeleton)}, {"supported", ids(f, rep.subfamily)}};
  } else {
    out["result"] = Json{{"subfamily", ids(f, rep.subfamily)}};
  }
  return out;
}

Skeleton parse_skeleton(const IntersectionGraph& g, std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) bad("top level", "expected an object");
  const auto supports = id_list(j, "supports");
  return make_skeleton(g, id_field(j, "u"), id_field(j, "v"), supports);
}

Bracket parse_bracket(const CurveFamily& f, std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) bad("top level", "expected an object");
  const auto p = id_list(j, "P");
  const auto s = id_list(j, "S");
  Bracket br = build_bracket(f, f.set_of(p), f.set_of(s));
  if (j.contains("s_of")) {
    const Json& m = j.at("s_of");
    if (!m.is_array()) bad("s_of", "expected an array");
    for (const auto& e : m) {
      if (!e.is_object()) bad("s_of", "expected {p, s} objects");
      const std::string pid = id_field(e, "p"), sid = id_field(e, "s");
      if (br.s_of(f.require(pid)) != f.require(sid))
        bad("s_of", "'" + pid + "' first hits '" + f[br.s_of(f.require(pid))].id + "', not '" + sid + "'");
    }
  }
  return br;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace outerstring

#include "skein/io.hpp"

#include <fstream>
#include <sstream>

namespace skein {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError("malformed JSON: " + what, line, column);
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

FieldTag parse_field_tag(std::string_view text) {
  if (text == "QA") return FieldTag::Base;
  if (text == "QAm2") return FieldTag::Extended;
  throw ParseError("unknown coefficient field '" + std::string(text) + "' (expected QA or QAm2)");
}

std::string_view field_tag_name(FieldTag tag) { return tag == FieldTag::Base ? "QA" : "QAm2"; }

std::string_view field_label(FieldTag tag) { return tag == FieldTag::Base ? "rational" : "localized"; }

namespace detail {

const Json& member(const Json& doc, const std::string& key, const std::string& where) {
  if (!doc.is_object()) throw ParseError((where.empty() ? "/" : where) + ": expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError((where.empty() ? "/" : where) + ": missing member '" + key + "'");
  return *it;
}

int int_member(const Json& doc, const std::string& key, const std::string& where) {
  const Json& v = member(doc, key, where);
  if (!v.is_number_integer()) throw ParseError(where + "/" + key + ": expected an integer");
  return v.get<int>();
}

std::string string_member(const Json& doc, const std::string& key, const std::string& where) {
  const Json& v = member(doc, key, where);
  if (!v.is_string()) throw ParseError(where + "/" + key + ": expected a string");
  return v.get<std::string>();
}

const Json& term_list(const Json& doc, const std::string& where) {
  const Json& terms = doc.is_object() ? member(doc, "terms", where) : doc;
  if (!terms.is_array()) throw ParseError((where.empty() ? "/" : where) + ": expected a list of terms");
  return terms;
}

}  // namespace detail

FieldTag presentation_field(const Json& doc) {
  if (!doc.is_object() || !doc.contains("coeff")) return FieldTag::Base;
  return parse_field_tag(detail::string_member(doc, "coeff", ""));
}

Json to_json(const ExponentPair& a) { return Json::array({a.p, a.q}); }

Json to_json(const NewtonPolygon& poly) {
  Json vertices = Json::array();
  for (const auto& v : poly.vertices()) vertices.push_back(to_json(v));
  return {{"kind", to_string(poly.kind())},
          {"vertices", vertices},
          {"slopes", to_json(slopes(poly))},
          {"symmetric", poly.is_symmetric()}};
}

Json to_json(const std::set<Slope>& slopes) {
  Json out = Json::array();
  for (const auto& s : slopes) out.push_back(to_string(s));
  return out;
}

Json to_json(const VertexCheck& check) {
  Json failing = Json::array();
  for (const auto& v : check.failing) failing.push_back(to_json(v));
  return {{"ok", check.ok}, {"failing_vertices", failing}};
}

Json to_json(const FillingReport& report) {
  Json out = {{"slope", to_string(report.slope)},
              {"direction", to_json(report.slope.direction())},
              {"excluded", report.excluded},
              {"excluded_slopes", to_json(report.excluded_slopes)}};
  if (report.excluded) {
    out["generators"] = Json::array();
    out["total_bound"] = nullptr;
    return out;
  }
  Json gens = Json::array();
  for (const auto& g : report.generators) {
    Json classes = Json::array();
    for (const auto& c : g.classes) classes.push_back(to_json(c.representative()));
    gens.push_back({{"generator", g.generator},
                    {"zero", g.zero},
                    {"lambda", to_json(g.band.lam)},
                    {"epsilon", to_json(g.band.eps)},
                    {"M", g.band.M},
                    {"top_vertex", to_json(g.band.top)},
                    {"classes", classes},
                    {"bound", g.bound}});
  }
  out["generators"] = gens;
  out["total_bound"] = *report.total;
  out["bound_note"] =
      "per-generator bound = number of classes with |lambda| <= M and epsilon in {0,1} modulo +-1, equal to 3M+2 "
      "(implementation-derived); 0 for a zero generator. The classes span; they are not claimed to be a basis.";
  return out;
}

}  // namespace skein

#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "skein/annihilator.hpp"
#include "skein/expr.hpp"
#include "skein/filling.hpp"

namespace skein {

// JSON documents. Objects are nlohmann::json, whose keys are kept sorted, so
// dumps are byte-stable; scalars are strings in the expression grammar.

using Json = nlohmann::json;

/// Parses a document; syntax errors become ParseError with line and column.
Json parse_json(std::string_view text);
Json read_json_file(const std::filesystem::path& path);

/// "QA" or "QAm2".
FieldTag parse_field_tag(std::string_view text);
std::string_view field_tag_name(FieldTag tag);
/// "rational" for Q(A), "localized" for Q(A)(m2).
std::string_view field_label(FieldTag tag);

namespace detail {

/// doc[key], or a ParseError naming the JSON location.
const Json& member(const Json& doc, const std::string& key, const std::string& where);
int int_member(const Json& doc, const std::string& key, const std::string& where);
std::string string_member(const Json& doc, const std::string& key, const std::string& where);
/// The array itself, or the "terms" member of an object.
const Json& term_list(const Json& doc, const std::string& where);

template <class K>
K scalar_at(const Json& doc, const std::string& key, const std::string& where) {
  const std::string text = string_member(doc, key, where);
  try {
    return parse_scalar<K>(text);
  } catch (const ParseError& e) {
    throw ParseError(where + "/" + key + ": " + e.what());
  }
}

}  // namespace detail

Json to_json(const ExponentPair& a);
Json to_json(const NewtonPolygon& poly);
Json to_json(const std::set<Slope>& slopes);
Json to_json(const FillingReport& report);

/// Records {p, q, coeff} in class order, one per canonical representative.
template <class K>
Json to_json(const SymmetricElement<K>& x) {
  Json out = Json::array();
  for (const auto& [cls, c] : x) out.push_back({{"p", cls.p()}, {"q", cls.q()}, {"coeff", to_string(c)}});
  return out;
}

/// Accepts a record list or {"terms": [...]}; indices must be canonical
/// representatives and appear once.
template <class K>
SymmetricElement<K> element_from_json(const Json& doc) {
  SymmetricElement<K> out;
  std::set<SymmetricClass> seen;
  const Json& terms = detail::term_list(doc, "");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "/" + std::to_string(i);
    const ExponentPair a{detail::int_member(terms[i], "p", where), detail::int_member(terms[i], "q", where)};
    if (!SymmetricClass::is_canonical(a))
      throw ParseError(where + ": index " + to_string(a) + " is not a canonical class representative");
    if (!seen.insert(SymmetricClass(a)).second) throw ParseError(where + ": index " + to_string(a) + " appears twice");
    out.add(SymmetricClass(a), detail::scalar_at<K>(terms[i], "coeff", where));
  }
  return out;
}

/// Records {p, q, copies, coeff}: copies parallel curves of the primitive
/// direction (p, q); copies = 0 with (p, q) = (0, 0) is the empty multicurve.
template <class K>
Json to_json(const SkeinElement<K>& x) {
  Json out = Json::array();
  for (const auto& [mono, c] : x) {
    const ExponentPair d = mono.is_empty() ? ExponentPair{} : mono.direction().representative();
    out.push_back({{"p", d.p}, {"q", d.q}, {"copies", mono.copies()}, {"coeff", to_string(c)}});
  }
  return out;
}

template <class K>
SkeinElement<K> skein_from_json(const Json& doc) {
  SkeinElement<K> out;
  const Json& terms = detail::term_list(doc, "");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "/" + std::to_string(i);
    const ExponentPair d{detail::int_member(terms[i], "p", where), detail::int_member(terms[i], "q", where)};
    const int copies = detail::int_member(terms[i], "copies", where);
    if (copies < 0) throw ParseError(where + ": negative number of copies");
    const K c = detail::scalar_at<K>(terms[i], "coeff", where);
    if (copies == 0) {
      out.add(CurveMonomial::empty(), c);
      continue;
    }
    try {
      out.add(CurveMonomial(d, static_cast<unsigned>(copies)), c);
    } catch (const PreconditionError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return out;
}

/// {"terms": [{p, q, coeff}]}, coeff being c_{p,q} (the (0,0) entry is the
/// coefficient of e_{0,0}).
template <class K>
Json to_json(const AnnihilatingRelation<K>& r) {
  Json terms = Json::array();
  for (const auto& [cls, c] : r.terms()) terms.push_back({{"p", cls.p()}, {"q", cls.q()}, {"coeff", to_string(c)}});
  return {{"terms", terms}};
}

template <class K>
AnnihilatingRelation<K> relation_from_json(const Json& doc) {
  std::vector<RelationTerm<K>> raw;
  const Json& terms = detail::term_list(doc, "");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "/terms/" + std::to_string(i);
    raw.push_back({{detail::int_member(terms[i], "p", where), detail::int_member(terms[i], "q", where)},
                   detail::scalar_at<K>(terms[i], "coeff", where)});
  }
  return validate_relation(raw);
}

/// Records {l_degree, a} with a a polynomial in A and m; zero a_i are omitted.
template <class K>
Json to_json(const PeripheralPoly<K>& poly) {
  Json out = Json::array();
  for (std::size_t i = 0; i < poly.coefficients().size(); ++i)
    if (!poly.coefficients()[i].is_zero_poly())
      out.push_back({{"l_degree", i}, {"a", poly_to_string(poly.coefficients()[i])}});
  return out;
}

Json to_json(const VertexCheck& check);

/// A presentation document: the free module, the longitude action, the
/// analysed vectors and the target among them.
template <class K>
struct PresentationDocument {
  KnotPresentation<K> presentation;
  /// Named module vectors: the unit vectors of the generators, or the
  /// document's "elements" when present.
  std::vector<std::pair<std::string, Vector<UPoly<K>>>> elements;
  std::string target;

  const Vector<UPoly<K>>& element(const std::string& name) const {
    for (const auto& [n, v] : elements)
      if (n == name) return v;
    throw PreconditionError("unknown generator or element '" + name + "'");
  }
};

/// The "coeff" member, "QA" when absent.
FieldTag presentation_field(const Json& doc);

template <class K>
PresentationDocument<K> presentation_from_json(const Json& doc) {
  PresentationDocument<K> out;
  const Json& gens = detail::member(doc, "generators", "");
  if (!gens.is_array()) throw ParseError("/generators: expected an array of names");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_string()) throw ParseError("/generators/" + std::to_string(i) + ": expected a string");
    out.presentation.generators.push_back(gens[i].get<std::string>());
  }
  const Json& rows = detail::member(doc, "longitude_action", "");
  if (!rows.is_array()) throw ParseError("/longitude_action: expected an array of rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto cols = n == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows[0].is_array() ? rows[0].size() : 0);
  Matrix<UPoly<K>> L(n, cols);
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::string where = "/longitude_action/" + std::to_string(i);
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw PreconditionError(where + ": rows of the longitude action must have equal length");
    for (Eigen::Index j = 0; j < cols; ++j) {
      const Json& entry = row[static_cast<std::size_t>(j)];
      if (!entry.is_string()) throw ParseError(where + "/" + std::to_string(j) + ": expected a polynomial string");
      try {
        L(i, j) = parse_poly_in_m<K>(entry.get<std::string>());
      } catch (const ParseError& e) {
        throw ParseError(where + "/" + std::to_string(j) + ": " + e.what());
      }
    }
  }
  out.presentation.longitude = std::move(L);
  out.presentation.validate();

  if (doc.contains("elements")) {
    const Json& elems = doc.at("elements");
    if (!elems.is_object()) throw ParseError("/elements: expected an object of named vectors");
    for (const auto& [name, vec] : elems.items()) {
      const std::string where = "/elements/" + name;
      if (!vec.is_array() || vec.size() != out.presentation.generators.size())
        throw PreconditionError(where + ": expected one polynomial per generator");
      Vector<UPoly<K>> v(static_cast<Eigen::Index>(vec.size()));
      for (std::size_t j = 0; j < vec.size(); ++j) {
        if (!vec[j].is_string()) throw ParseError(where + "/" + std::to_string(j) + ": expected a polynomial string");
        try {
          v(static_cast<Eigen::Index>(j)) = parse_poly_in_m<K>(vec[j].template get<std::string>());
        } catch (const ParseError& e) {
          throw ParseError(where + "/" + std::to_string(j) + ": " + e.what());
        }
      }
      out.elements.emplace_back(name, std::move(v));
    }
  } else {
    for (std::size_t i = 0; i < out.presentation.generators.size(); ++i)
      out.elements.emplace_back(out.presentation.generators[i], out.presentation.generator_vector(i));
  }
  out.target = doc.contains("target") ? detail::string_member(doc, "target", "")
                                      : (out.elements.empty() ? std::string() : out.elements.front().first);
  return out;
}

}  // namespace skein

#pragma once

#include <json.hpp>

#include "filigrad/catalog.hpp"
#include "filigrad/grading.hpp"

namespace filigrad {

using json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline std::string dump_doc(const json& doc) { return doc.dump(2) + "\n"; }

/// AlgebraDoc: versioned, index-origin-tagged structure constants. Key order
/// and reduced "p/q" coefficient strings make serialization byte-stable.
inline json algebra_to_json(const LieAlgebra& a, int basis_origin = 1,
                            json provenance = nullptr) {
  json doc;
  doc["schema_version"] = "1";
  doc["dim"] = a.dim;
  doc["basis_origin"] = basis_origin;
  doc["basis"] = a.basis_labels;
  json brackets = json::array();
  for (const auto& [ij, v] : a.table) {
    json entry;
    entry["i"] = ij.first + basis_origin;
    entry["j"] = ij.second + basis_origin;
    json terms = json::array();
    for (const auto& [k, c] : v) terms.push_back({{"k", k + basis_origin}, {"coeff", rat_str(c)}});
    entry["terms"] = std::move(terms);
    brackets.push_back(std::move(entry));
  }
  doc["brackets"] = std::move(brackets);
  if (!provenance.is_null()) doc["provenance"] = std::move(provenance);
  return doc;
}

inline LieAlgebra algebra_from_json(const json& doc) {
  try {
    if (doc.at("schema_version").get<std::string>() != "1")
      throw ParseError("unsupported schema_version");
    std::size_t dim = doc.at("dim").get<std::size_t>();
    long origin = doc.value("basis_origin", 1);
    std::vector<std::string> labels;
    if (doc.contains("basis")) labels = doc.at("basis").get<std::vector<std::string>>();
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> tbl;
    for (const auto& entry : doc.at("brackets")) {
      long i = entry.at("i").get<long>() - origin;
      long j = entry.at("j").get<long>() - origin;
      if (i < 0 || j < 0 || i >= static_cast<long>(dim) || j >= static_cast<long>(dim) || i >= j)
        throw ParseError("bracket indices out of range");
      SparseVec v;
      for (const auto& t : entry.at("terms")) {
        long k = t.at("k").get<long>() - origin;
        if (k < 0 || k >= static_cast<long>(dim)) throw ParseError("term index out of range");
        v.emplace_back(static_cast<std::size_t>(k), parse_rat(t.at("coeff").get<std::string>()));
      }
      tbl[{static_cast<std::size_t>(i), static_cast<std::size_t>(j)}] = std::move(v);
    }
    return make_lie(dim, std::move(tbl), std::move(labels));
  } catch (const json::exception& e) {
    throw ParseError(std::string("algebra doc: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("algebra doc: ") + e.what());
  }
}

/// GradingDoc: canonical group plus one degree array per basis vector
/// (free coordinates first, then torsion residues).
inline json grading_to_json(const Grading& g) {
  json doc;
  doc["schema_version"] = "1";
  json group;
  group["free_rank"] = g.group.free_rank;
  json tors = json::array();
  for (const auto& d : g.group.torsion) tors.push_back(d.get_str());
  group["torsion"] = std::move(tors);
  doc["group"] = std::move(group);
  json degrees = json::array();
  for (const auto& d : g.degree) {
    json row = json::array();
    for (const auto& x : d.free_part) row.push_back(x.get_str());
    for (const auto& x : d.torsion_part) row.push_back(x.get_str());
    degrees.push_back(std::move(row));
  }
  doc["degrees"] = std::move(degrees);
  if (!g.name.empty()) doc["name"] = g.name;
  return doc;
}

inline Grading grading_from_json(const json& doc, LieAlgebra algebra) {
  try {
    if (doc.at("schema_version").get<std::string>() != "1")
      throw ParseError("unsupported schema_version");
    FGAbelianGroup group;
    group.free_rank = doc.at("group").at("free_rank").get<std::size_t>();
    for (const auto& t : doc.at("group").at("torsion")) {
      Int d(t.get<std::string>());
      if (d < 2) throw ParseError("torsion factors must be >= 2");
      if (!group.torsion.empty() && sgn(d % group.torsion.back()) != 0)
        throw ParseError("torsion factors must form a divisibility chain");
      group.torsion.push_back(d);
    }
    Grading g{std::move(algebra), group, {}, doc.value("name", "")};
    if (doc.at("degrees").size() != g.algebra.dim)
      throw ParseError("degree count differs from the algebra dimension");
    for (const auto& row : doc.at("degrees")) {
      if (row.size() != group.free_rank + group.torsion.size())
        throw ParseError("degree width differs from the group rank");
      GroupElement e = zero_element(group);
      std::size_t idx = 0;
      for (std::size_t f = 0; f < group.free_rank; ++f)
        e.free_part[f] = Int(row[idx++].get<std::string>());
      for (std::size_t t = 0; t < group.torsion.size(); ++t)
        e.torsion_part[t] = mod_reduce(Int(row[idx++].get<std::string>()), group.torsion[t]);
      g.degree.push_back(std::move(e));
    }
    return g;
  } catch (const json::exception& e) {
    throw ParseError(std::string("grading doc: ") + e.what());
  }
}

inline json spec_to_json(const ModelSpec& spec) {
  json p;
  p["kind"] = kind_str(spec.kind);
  p["n"] = spec.n;
  if (spec.kind == Kind::A || spec.kind == Kind::B) {
    p["p"] = spec.p;
    json alphas = json::array();
    for (const auto& a : spec.alphas) alphas.push_back(rat_str(a));
    p["alphas"] = std::move(alphas);
  }
  return p;
}

}  // namespace filigrad

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "filigrad/smith.hpp"

namespace filigrad {

/// Finitely generated abelian group in canonical form:
/// Z_{d_1} x ... x Z_{d_t} x Z^free_rank with 2 <= d_1 | d_2 | ... | d_t.
struct FGAbelianGroup {
  std::size_t free_rank = 0;
  IntVec torsion;

  bool operator==(const FGAbelianGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  std::string str() const {
    if (is_trivial()) return "0";
    std::string s;
    for (const auto& d : torsion) {
      if (!s.empty()) s += " x ";
      s += "Z_" + d.get_str();
    }
    if (free_rank > 0) {
      if (!s.empty()) s += " x ";
      s += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    }
    return s;
  }
};

/// Element of an FGAbelianGroup: integer free coordinates plus reduced
/// residues against the invariant factors.
struct GroupElement {
  IntVec free_part;
  IntVec torsion_part;

  bool operator==(const GroupElement& o) const {
    return free_part == o.free_part && torsion_part == o.torsion_part;
  }
  bool operator<(const GroupElement& o) const {
    if (free_part != o.free_part) return free_part < o.free_part;
    return torsion_part < o.torsion_part;
  }

  std::string str() const {
    std::string s = "(";
    bool first = true;
    for (const auto& x : free_part) {
      if (!first) s += ",";
      s += x.get_str();
      first = false;
    }
    for (const auto& x : torsion_part) {
      if (!first) s += ",";
      s += x.get_str() + "~";
      first = false;
    }
    return s + ")";
  }
};

inline Int mod_reduce(const Int& x, const Int& d) {
  Int r = x % d;
  if (sgn(r) < 0) r += d;
  return r;
}

inline GroupElement zero_element(const FGAbelianGroup& g) {
  return {IntVec(g.free_rank, Int(0)), IntVec(g.torsion.size(), Int(0))};
}

inline GroupElement add(const FGAbelianGroup& g, const GroupElement& x, const GroupElement& y) {
  GroupElement z = zero_element(g);
  for (std::size_t i = 0; i < g.free_rank; ++i) z.free_part[i] = x.free_part[i] + y.free_part[i];
  for (std::size_t i = 0; i < g.torsion.size(); ++i)
    z.torsion_part[i] = mod_reduce(x.torsion_part[i] + y.torsion_part[i], g.torsion[i]);
  return z;
}

inline GroupElement neg(const FGAbelianGroup& g, const GroupElement& x) {
  GroupElement z = zero_element(g);
  for (std::size_t i = 0; i < g.free_rank; ++i) z.free_part[i] = -x.free_part[i];
  for (std::size_t i = 0; i < g.torsion.size(); ++i)
    z.torsion_part[i] = mod_reduce(-x.torsion_part[i], g.torsion[i]);
  return z;
}

inline GroupElement scale(const FGAbelianGroup& g, const Int& c, const GroupElement& x) {
  GroupElement z = zero_element(g);
  for (std::size_t i = 0; i < g.free_rank; ++i) z.free_part[i] = c * x.free_part[i];
  for (std::size_t i = 0; i < g.torsion.size(); ++i)
    z.torsion_part[i] = mod_reduce(c * x.torsion_part[i], g.torsion[i]);
  return z;
}

/// Z^gens modulo the row space of `relations`, plus the images of the
/// standard generators in the canonical quotient.
struct Cokernel {
  FGAbelianGroup group;
  std::vector<GroupElement> gen_images;
};

inline Cokernel cokernel(const IntMatrix& relations, std::size_t gens) {
  if (relations.cols != gens && relations.rows != 0)
    throw std::invalid_argument("cokernel: relation width mismatch");
  // Columns of relations^T generate the subgroup; U carries it onto diag(S)*Z^k.
  IntMatrix mt(gens, relations.rows);
  for (std::size_t i = 0; i < relations.rows; ++i)
    for (std::size_t j = 0; j < gens; ++j) mt.at(j, i) = relations.at(i, j);
  SmithResult snf = smith_normal_form(mt);

  IntVec diag(gens, Int(0));
  const std::size_t nmin = std::min(mt.rows, mt.cols);
  for (std::size_t i = 0; i < nmin; ++i) diag[i] = snf.S.at(i, i);

  FGAbelianGroup g;
  std::vector<std::size_t> tors_pos, free_pos;
  for (std::size_t i = 0; i < gens; ++i) {
    if (diag[i] == 0)
      free_pos.push_back(i);
    else if (diag[i] > 1)
      tors_pos.push_back(i);
  }
  for (auto i : tors_pos) g.torsion.push_back(diag[i]);
  g.free_rank = free_pos.size();

  Cokernel out{g, {}};
  for (std::size_t j = 0; j < gens; ++j) {
    GroupElement e = zero_element(g);
    for (std::size_t t = 0; t < tors_pos.size(); ++t)
      e.torsion_part[t] = mod_reduce(snf.U.at(tors_pos[t], j), g.torsion[t]);
    for (std::size_t f = 0; f < free_pos.size(); ++f) e.free_part[f] = snf.U.at(free_pos[f], j);
    out.gen_images.push_back(std::move(e));
  }
  return out;
}

/// Canonical form of Z^free x prod Z_{factors[i]} (factors need not be
/// invariant factors; 0 entries count as free summands).
inline FGAbelianGroup canonical_group(std::size_t free, const IntVec& factors) {
  std::size_t gens = free + factors.size();
  IntMatrix rel(factors.size(), gens);
  for (std::size_t i = 0; i < factors.size(); ++i) rel.at(i, free + i) = factors[i];
  return cokernel(rel, gens).group;
}

/// Homomorphism between canonical-form groups, given by the images of the
/// source generators (free generators first, then the torsion generators).
struct GroupHom {
  FGAbelianGroup src;
  FGAbelianGroup dst;
  std::vector<GroupElement> gen_images;

  bool valid() const {
    if (gen_images.size() != src.free_rank + src.torsion.size()) return false;
    for (std::size_t t = 0; t < src.torsion.size(); ++t) {
      GroupElement img = scale(dst, src.torsion[t], gen_images[src.free_rank + t]);
      if (!(img == zero_element(dst))) return false;
    }
    return true;
  }

  GroupElement apply(const GroupElement& x) const {
    GroupElement y = zero_element(dst);
    for (std::size_t i = 0; i < src.free_rank; ++i)
      y = add(dst, y, scale(dst, x.free_part[i], gen_images[i]));
    for (std::size_t t = 0; t < src.torsion.size(); ++t)
      y = add(dst, y, scale(dst, x.torsion_part[t], gen_images[src.free_rank + t]));
    return y;
  }
};

/// Does some surjection a ->> b exist? (free ranks plus aligned divisibility
/// of invariant factors, largest first, with spare free generators of a
/// allowed to cover torsion factors of b)
inline bool surjects_onto(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  if (b.free_rank > a.free_rank) return false;
  std::size_t spare = a.free_rank - b.free_rank;
  // torsion lists are ascending; compare largest-to-largest
  std::size_t ta = a.torsion.size(), tb = b.torsion.size();
  for (std::size_t j = 0; j < tb; ++j) {
    // j-th largest factor of b
    const Int& d = b.torsion[tb - 1 - j];
    if (j < spare) continue;  // covered by a free generator of a
    std::size_t idx = j - spare;
    if (idx >= ta) return false;
    const Int& c = a.torsion[ta - 1 - idx];
    if (sgn(c % d) != 0) return false;
  }
  return true;
}

inline GroupHom identity_hom(const FGAbelianGroup& g) {
  GroupHom h{g, g, {}};
  for (std::size_t i = 0; i < g.free_rank; ++i) {
    GroupElement e = zero_element(g);
    e.free_part[i] = 1;
    h.gen_images.push_back(e);
  }
  for (std::size_t t = 0; t < g.torsion.size(); ++t) {
    GroupElement e = zero_element(g);
    e.torsion_part[t] = 1;
    h.gen_images.push_back(e);
  }
  return h;
}

}  // namespace filigrad

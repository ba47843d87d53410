// filigrad: construct, inspect, verify, enumerate, and classify abelian
// group gradings on filiform nilpotent Lie algebras, with exact arithmetic.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "filigrad/cohomology.hpp"
#include "filigrad/derivations.hpp"
#include "filigrad/grading.hpp"
#include "filigrad/io.hpp"

using namespace filigrad;

namespace {

Kind parse_kind(const std::string& s) {
  if (s == "L") return Kind::L;
  if (s == "Q") return Kind::Q;
  if (s == "A") return Kind::A;
  if (s == "B") return Kind::B;
  throw InvalidSpec("unknown kind '" + s + "' (expected L, Q, A or B)");
}

RatVec parse_alphas(const std::string& s) {
  RatVec out;
  std::size_t pos = 0;
  while (pos <= s.size() && !s.empty()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    out.push_back(parse_rat(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

ModelSpec build_spec(const std::string& kind, std::size_t n, std::size_t p,
                     const std::string& alphas) {
  ModelSpec spec{parse_kind(kind), n, p, parse_alphas(alphas)};
  // surplus zero entries are tolerated, anything else is an input error
  std::size_t need = ModelSpec::alpha_count(spec.kind, spec.n, spec.p);
  while (spec.alphas.size() > need && sgn(spec.alphas.back()) == 0) spec.alphas.pop_back();
  spec.validate();
  return spec;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + out_path);
  f << text;
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string algebra_text(const LieAlgebra& a) {
  std::string s = "dim " + std::to_string(a.dim) + "\n";
  for (const auto& [ij, v] : a.table) {
    s += "[" + a.basis_labels[ij.first] + "," + a.basis_labels[ij.second] + "] =";
    bool first = true;
    for (const auto& [k, c] : v) {
      std::string coeff = rat_str(c);
      if (coeff == "1")
        coeff = "";
      else if (coeff == "-1")
        coeff = "-";
      else
        coeff += " ";
      s += (first ? " " : " + ") + coeff + a.basis_labels[k];
      first = false;
    }
    s += "\n";
  }
  return s;
}

std::string partition_text(const Grading& g, int origin) {
  std::string s;
  for (const auto& blk : partition_of(g)) {
    s += "{";
    for (std::size_t t = 0; t < blk.size(); ++t)
      s += (t ? " " : "") + std::to_string(blk[t] + origin);
    s += "}";
  }
  return s;
}

std::string degrees_text(const Grading& g) {
  std::string s;
  for (std::size_t b = 0; b < g.degree.size(); ++b)
    s += (b ? " " : "") + g.algebra.basis_labels[b] + ":" + g.degree[b].str();
  return s;
}

json grading_report_json(const Grading& g, int origin) {
  json row;
  if (!g.name.empty()) row["name"] = g.name;
  row["universal_group"] = g.group.str();
  row["partition"] = partition_text(g, origin);
  json degs = json::array();
  for (const auto& d : g.degree) degs.push_back(d.str());
  row["degrees"] = std::move(degs);
  return row;
}

int cmd_make(const ModelSpec& spec, const std::string& fmt, const std::string& out,
             int origin) {
  LieAlgebra a = make_model(spec);
  if (fmt == "text")
    emit(spec.str() + "\n" + algebra_text(a), out);
  else
    emit(dump_doc(algebra_to_json(a, origin, spec_to_json(spec))), out);
  return 0;
}

int cmd_classify(const ModelSpec& spec, const std::string& fmt, const std::string& out,
                 int origin) {
  Classification cls = classify(spec);
  std::vector<Grading> enumerated = enumerate_factor_gradings(spec);
  auto stated = stated_grading_counts(spec);

  if (fmt == "text") {
    std::string s = "classification of " + spec.str() + "\n";
    for (const auto& row : cls.rows) {
      s += "  " + row.name + "  U = " + row.stated_group.str() + "  " +
           partition_text(row.grading, origin) + "\n    degrees " +
           degrees_text(row.grading) + "\n";
    }
    s += "representatives: " + std::to_string(cls.rows.size()) + "\n";
    s += "enumerated partitions: " + std::to_string(enumerated.size()) + "\n";
    s += std::string("representatives vs enumerated: ") +
         (cls.rows.size() == enumerated.size() ? "AGREE" : "DISAGREE") + "\n";
    for (const auto& [label, value] : stated)
      s += "stated " + label + " = " + value.get_str() + " vs enumerated: " +
           (Int(enumerated.size()) == value ? "AGREE" : "DISAGREE") + "\n";
    emit(s, out);
    return 0;
  }
  json doc;
  doc["spec"] = spec_to_json(spec);
  json rows = json::array();
  for (const auto& row : cls.rows) {
    json r = grading_report_json(row.grading, origin);
    r["name"] = row.name;
    r["stated_group"] = row.stated_group.str();
    rows.push_back(std::move(r));
  }
  doc["representatives"] = std::move(rows);
  doc["enumerated_count"] = enumerated.size();
  doc["representatives_vs_enumerated"] =
      cls.rows.size() == enumerated.size() ? "AGREE" : "DISAGREE";
  json counts = json::array();
  for (const auto& [label, value] : stated)
    counts.push_back({{"formula", label},
                      {"value", value.get_str()},
                      {"verdict", Int(enumerated.size()) == value ? "AGREE" : "DISAGREE"}});
  doc["stated_counts"] = std::move(counts);
  emit(dump_doc(doc), out);
  return 0;
}

int cmd_enumerate(const ModelSpec& spec, const std::string& fmt, const std::string& out,
                  int origin) {
  std::vector<Grading> gs = enumerate_factor_gradings(spec);
  if (fmt == "text") {
    std::string s = "factor-gradings of the standard grading of " + spec.str() + "\n";
    for (const auto& g : gs)
      s += "  " + partition_text(g, origin) + "  U = " + g.group.str() + "\n";
    s += "count: " + std::to_string(gs.size()) + "\n";
    emit(s, out);
    return 0;
  }
  json doc;
  doc["spec"] = spec_to_json(spec);
  json rows = json::array();
  for (const auto& g : gs) rows.push_back(grading_report_json(g, origin));
  doc["gradings"] = std::move(rows);
  doc["count"] = gs.size();
  emit(dump_doc(doc), out);
  return 0;
}

int cmd_check(const std::string& algebra_file, const std::string& grading_file,
              const std::string& fmt, const std::string& out) {
  LieAlgebra a = algebra_from_json(read_json_file(algebra_file));
  Grading g = grading_from_json(read_json_file(grading_file), a);
  if (auto v = verify_grading(g)) {
    std::string s = "violation: [" + a.basis_labels[v->i] + "," + a.basis_labels[v->j] +
                    "] has the component of " + a.basis_labels[v->witness] +
                    " outside degree d_i + d_j\n";
    emit(s, out);
    return 1;
  }
  auto [u, remapped] = universal_group(g);
  if (fmt == "text")
    emit("ok\nuniversal group: " + u.str() + "\n", out);
  else {
    json doc;
    doc["ok"] = true;
    doc["universal_group"] = u.str();
    doc["universal_degrees"] = grading_report_json(remapped, 1)["degrees"];
    emit(dump_doc(doc), out);
  }
  return 0;
}

int cmd_cn(const std::string& algebra_file, const std::string& fmt, const std::string& out) {
  LieAlgebra a = algebra_from_json(read_json_file(algebra_file));
  auto info = is_filiform(a);
  std::size_t rank = diagonal_derivation_dim(a);
  bool cn = is_characteristically_nilpotent(a);
  std::size_t der_dim = derivation_space(a).size();
  if (fmt == "text") {
    std::string s;
    s += "filiform: " + std::string(info.filiform ? "true" : "false") + "\n";
    s += "nilindex: " + std::to_string(info.nilindex) + "\n";
    s += "rank: " + std::to_string(rank) + "\n";
    s += "char_nilpotent: " + std::string(cn ? "true" : "false") + "\n";
    s += "der_dim: " + std::to_string(der_dim) + "\n";
    emit(s, out);
  } else {
    json doc;
    doc["filiform"] = info.filiform;
    doc["nilindex"] = info.nilindex;
    doc["rank"] = rank;
    doc["char_nilpotent"] = cn;
    doc["der_dim"] = der_dim;
    emit(dump_doc(doc), out);
  }
  return 0;
}

int cmd_deform(std::size_t n, const std::vector<std::string>& term_args, const std::string& fmt,
               const std::string& out, int origin) {
  std::vector<std::tuple<std::size_t, std::size_t, Rat>> terms;
  for (const auto& t : term_args) {
    auto c1 = t.find(',');
    auto c2 = t.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw InvalidSpec("--term expects k,s,coeff");
    terms.emplace_back(std::stoul(t.substr(0, c1)), std::stoul(t.substr(c1 + 1, c2 - c1 - 1)),
                       parse_rat(t.substr(c2 + 1)));
  }
  LieAlgebra a = deform(mu0_L(n + 1), psi_sum(n, terms));
  json prov;
  prov["type"] = "deformation";
  prov["n"] = n;
  json pterms = json::array();
  for (const auto& [k, s, c] : terms)
    pterms.push_back({{"k", k}, {"s", s}, {"coeff", rat_str(c)}});
  prov["terms"] = std::move(pterms);
  if (fmt == "text")
    emit(algebra_text(a), out);
  else
    emit(dump_doc(algebra_to_json(a, origin, std::move(prov))), out);
  return 0;
}

int cmd_zk(const std::string& algebra_file, std::size_t k, const std::string& fmt,
           const std::string& out) {
  LieAlgebra a = algebra_from_json(read_json_file(algebra_file));
  Grading g = cn_zk_grading(a, k);
  if (fmt == "text")
    emit("Z_" + std::to_string(k) + "-grading (" + g.name + ")\n" + degrees_text(g) + "\n", out);
  else
    emit(dump_doc(grading_to_json(g)), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gradings on filiform nilpotent Lie algebras, exactly"};
  app.require_subcommand(1);

  std::string kind, alphas, fmt = "json", out, algebra_file, grading_file;
  std::size_t n = 0, p = 0, k = 0;
  int origin = 1;
  std::vector<std::string> term_args;

  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("kind", kind, "model kind: L, Q, A or B")->required();
    cmd->add_option("n", n, "dimension")->required();
    cmd->add_option("--p", p, "shift parameter (kinds A, B)");
    cmd->add_option("--alphas", alphas, "comma-separated rational parameters (kinds A, B)");
  };
  auto add_io = [&](CLI::App* cmd, bool with_origin = true) {
    cmd->add_option("--format", fmt, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", out, "output file (default stdout)");
    if (with_origin)
      cmd->add_option("--basis-origin", origin, "index origin for documents")
          ->check(CLI::IsMember({0, 1}));
  };

  CLI::App* mk = app.add_subcommand("make", "construct a catalog model as an algebra document");
  add_spec(mk);
  add_io(mk);
  CLI::App* cl = app.add_subcommand("classify", "classification table with counts");
  add_spec(cl);
  add_io(cl);
  CLI::App* en = app.add_subcommand("enumerate", "all factor-gradings of the standard grading");
  add_spec(en);
  add_io(en);
  CLI::App* ch = app.add_subcommand("check", "verify a grading document against an algebra");
  ch->add_option("algebra", algebra_file, "AlgebraDoc json file")->required();
  ch->add_option("grading", grading_file, "GradingDoc json file")->required();
  add_io(ch, false);
  CLI::App* cn = app.add_subcommand("cn", "filiform/nilindex/rank/characteristic nilpotency");
  cn->add_option("algebra", algebra_file, "AlgebraDoc json file")->required();
  add_io(cn, false);
  CLI::App* df = app.add_subcommand("deform", "mu0 + sum of psi_{k,s} cocycles on dim n+1");
  df->add_option("n", n, "n (ambient L_{n+1})")->required();
  df->add_option("--term", term_args, "k,s,coeff (repeatable)")->required();
  add_io(df);
  CLI::App* zk = app.add_subcommand("zk", "Z_k-grading of a deformed algebra document");
  zk->add_option("algebra", algebra_file, "AlgebraDoc json file")->required();
  zk->add_option("k", k, "modulus, 2 < k < n-2")->required();
  add_io(zk, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (mk->parsed()) return cmd_make(build_spec(kind, n, p, alphas), fmt, out, origin);
    if (cl->parsed()) return cmd_classify(build_spec(kind, n, p, alphas), fmt, out, origin);
    if (en->parsed()) return cmd_enumerate(build_spec(kind, n, p, alphas), fmt, out, origin);
    if (ch->parsed()) return cmd_check(algebra_file, grading_file, fmt, out);
    if (cn->parsed()) return cmd_cn(algebra_file, fmt, out);
    if (df->parsed()) return cmd_deform(n, term_args, fmt, out, origin);
    if (zk->parsed()) return cmd_zk(algebra_file, k, fmt, out);
  } catch (const JacobiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& v : e.violations)
      std::cerr << "  triple (" << v.i + 1 << "," << v.j + 1 << "," << v.k + 1 << ")\n";
    return 2;
  } catch (const NotACocycle& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

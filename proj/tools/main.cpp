// Batch front end: parses arrangement / Bernstein-Sato / resolution / zeta
// files, dispatches the library operations, and reports verdicts.
// Exit codes: 0 = holds or success, 1 = violated, 2 = input error.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "torsupp/torsupp.hpp"

using namespace torsupp;
using nlohmann::json;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInputError = 2;

std::vector<Int> parse_int_vector(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw io::ParseError("empty entry in vector '" + s + "'");
    out.emplace_back(tok);
  }
  if (out.empty()) throw io::ParseError("empty vector '" + s + "'");
  return out;
}

IntMatrix parse_int_matrix(const std::string& s) {
  std::vector<std::vector<Int>> rows;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_int_vector(row));
  if (rows.empty()) throw io::ParseError("empty matrix '" + s + "'");
  IntMatrix m(int(rows.size()), int(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw io::ParseError("ragged matrix '" + s + "'");
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(int(i), int(j)) = rows[i][j];
  }
  return m;
}

QVec parse_point(const std::string& s) {
  QVec out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(rat_from_string(tok));
  return out;
}

std::vector<int> parse_permutation(const std::string& s, int r) {
  std::vector<int> pi;
  for (const Int& x : parse_int_vector(s)) pi.push_back(int(x.get_si()) - 1);  // 1-based input
  if (int(pi.size()) != r) throw io::ParseError("permutation length must be " + std::to_string(r));
  std::vector<bool> seen(r, false);
  for (int v : pi) {
    if (v < 0 || v >= r || seen[v]) throw io::ParseError("not a permutation: '" + s + "'");
    seen[v] = true;
  }
  return pi;
}

std::string tpoly_to_string(const TPoly& p) {
  std::ostringstream out;
  bool first = true;
  for (size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    Int c = p[i];
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c > 0 ? "+" : "-");
    }
    Int a = c > 0 ? c : Int(-c);
    if (a != 1 || i == 0) out << a.get_str();
    if (i >= 1) {
      out << "t";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

void emit(bool json_mode, const json& j, const std::string& text) {
  if (json_mode)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json verdict_json(const std::string& status, json details = json::object()) {
  details["status"] = status;
  return details;
}

// --- subcommand bodies ------------------------------------------------------

int cmd_arr_info(const std::string& file, bool json_mode) {
  MultiArrangement a = io::load_arrangement(file);
  auto edges = intersection_lattice(a);
  if (json_mode) {
    json out = io::to_json(a);
    out["degrees"] = json::array();
    for (const Int& d : degrees(a)) out["degrees"].push_back(io::detail::int_to(d));
    out["central"] = is_central(a);
    out["edges"] = json::array();
    for (const auto& e : edges) {
      json ej = io::edge_to_json(e);
      auto s = total_splitting(a, e);
      ej["dense"] = s.blocks.size() == 1;
      ej["blocks"] = s.blocks;
      json degs = json::array();
      for (const auto& d : s.degree_vectors) degs.push_back(io::detail::int_vec_to(d));
      ej["degree_vectors"] = std::move(degs);
      json cp = json::array();
      for (const Int& c : char_poly(a, e)) cp.push_back(io::detail::int_to(c));
      ej["char_poly"] = std::move(cp);
      ej["proj_euler_char"] = io::detail::int_to(proj_euler_char(a, e));
      out["edges"].push_back(std::move(ej));
    }
    std::cout << out.dump(2) << "\n";
    return kExitHolds;
  }
  std::ostringstream out;
  out << "arrangement: n=" << a.n << " r=" << a.r << " hyperplanes=" << a.hyperplanes.size()
      << (is_central(a) ? " central" : "") << "\n";
  for (size_t h = 0; h < a.hyperplanes.size(); ++h)
    out << "  H" << h << ": " << form_to_string(a.hyperplanes[h].form, "x") << " = 0, mults "
        << io::detail::int_vec_to(a.hyperplanes[h].mults).dump() << "\n";
  out << "edges (" << edges.size() << "):\n";
  for (const auto& e : edges) {
    auto s = total_splitting(a, e);
    out << "  codim " << e.codim << " through " << json(e.through).dump()
        << (s.blocks.size() == 1 ? " dense" : "") << " splitting " << json(s.blocks).dump()
        << " char_poly " << tpoly_to_string(char_poly(a, e)) << " chi "
        << proj_euler_char(a, e).get_str() << "\n";
  }
  std::cout << out.str();
  return kExitHolds;
}

int cmd_support(const std::string& file, const std::optional<std::string>& point, bool milnor,
                bool codim1, bool json_mode) {
  MultiArrangement a = io::load_arrangement(file);
  if (point) {
    CosetUnion u = support_at_point(a, parse_point(*point));
    emit(json_mode, io::to_json(u), "support at point: " + to_string(u) + "\n");
    return kExitHolds;
  }
  SupportReport rep = uniform_support_union(a);
  if (json_mode) {
    json out = io::to_json(rep);
    if (milnor) out["milnor"] = io::to_json(restrict_to_diagonal(rep.total));
    std::cout << out.dump(2) << "\n";
    return kExitHolds;
  }
  std::ostringstream out;
  out << "support union (" << rep.total.components.size() << " components):\n  "
      << to_string(rep.total) << "\n";
  if (codim1) out << "codimension-one part:\n  " << to_string(rep.codim1) << "\n";
  if (milnor)
    out << "milnor eigenvalues: " << to_string(restrict_to_diagonal(rep.total)) << "\n";
  std::cout << out.str();
  return kExitHolds;
}

int cmd_bs_monomial(const std::string& file, bool json_mode) {
  MultiArrangement a = io::load_arrangement(file);
  MonomialBS m = monomial_bs_locus(a);
  if (json_mode) {
    json out;
    json gen = json::array();
    for (const auto& f : m.generator) {
      json fj = io::form_to_json(f.form);
      fj["power"] = f.power;
      gen.push_back(std::move(fj));
    }
    out["generator"] = std::move(gen);
    out["locus"] = io::to_json(m.locus);
    std::cout << out.dump(2) << "\n";
    return kExitHolds;
  }
  std::ostringstream out;
  out << "generator: ";
  for (const auto& f : m.generator) {
    out << "(" << form_to_string(f.form) << ")";
    if (f.power > 1) out << "^" << f.power;
  }
  out << "\nlocus: " << to_string(m.locus) << "\n";
  std::cout << out.str();
  return kExitHolds;
}

int cmd_bs_locus(const std::string& file, bool json_mode) {
  io::BSFile b = io::load_bs_file(file);
  AffineLocus total;
  total.dim = b.r;
  for (const auto& u : b.units) total = union_of(total, locus(u));
  emit(json_mode, io::to_json(total), "locus: " + to_string(total) + "\n");
  return kExitHolds;
}

int cmd_bs_exp(const std::string& file, bool json_mode) {
  io::BSFile b = io::load_bs_file(file);
  CosetUnion u;
  u.ambient_dim = b.r;
  for (const auto& datum : b.units) u = union_of(u, exp_locus(locus(datum)));
  emit(json_mode, io::to_json(u), "Exp of the zero locus: " + to_string(u) + "\n");
  return kExitHolds;
}

int cmd_bs_decompose(const std::vector<std::string>& files, const std::string& mvec,
                     const std::optional<std::string>& perm, bool json_mode) {
  std::vector<AffineLocus> units;
  for (const auto& f : files) {
    io::BSFile bf = io::load_bs_file(f);
    for (const auto& u : bf.units) units.push_back(locus(u));
  }
  std::vector<Int> m = parse_int_vector(mvec);
  if (m.size() != units.size())
    throw io::ParseError("--m length must match the number of unit ideals");
  std::vector<int> pi(units.size());
  for (size_t i = 0; i < pi.size(); ++i) pi[i] = int(i);
  if (perm) pi = parse_permutation(*perm, int(units.size()));
  AffineLocus l = vb_decomposition(units, m, pi);
  emit(json_mode, io::to_json(l), "decomposed locus: " + to_string(l) + "\n");
  return kExitHolds;
}

int cmd_zeta(const std::optional<std::string>& arr_file, const std::optional<std::string>& res_file,
             bool local0, bool json_mode) {
  ResolutionData d;
  if (res_file) {
    d = io::load_resolution(*res_file);
  } else if (arr_file) {
    d = canonical_resolution_2d(io::load_arrangement(*arr_file));
  } else {
    throw io::ParseError("zeta needs an arrangement file or --resolution");
  }
  SRationalFunction z = zeta_from_resolution(d, local0);
  emit(json_mode, io::to_json(z), to_string(z) + "\n");
  return kExitHolds;
}

int cmd_zeta_candidates(const std::string& file, bool json_mode) {
  MultiArrangement a = io::load_arrangement(file);
  PolarLocus p = polar_candidates(a);
  json out = json::array();
  std::ostringstream txt;
  for (const auto& f : p) {
    out.push_back(io::form_to_json(f));
    txt << form_to_string(f) << "\n";
  }
  emit(json_mode, out, txt.str());
  return kExitHolds;
}

int cmd_zeta_subst(const std::string& zfile, const std::string& mapfile, bool json_mode) {
  SRationalFunction z = io::load_zeta(zfile);
  AffineAssignment map = io::load_assignment(mapfile);
  SRationalFunction out = substitute_affine(z, map);
  emit(json_mode, io::to_json(out), to_string(out) + "\n");
  return kExitHolds;
}

int cmd_check_conj1(const std::string& file, bool json_mode) {
  io::BSFile b = io::load_bs_file(file);
  Conj1Result total;
  for (const auto& u : b.units) {
    auto res = check_conj1_shape(u);
    total.holds = total.holds && res.holds;
    total.offending.insert(total.offending.end(), res.offending.begin(), res.offending.end());
  }
  json details;
  details["offending"] = json::array();
  std::ostringstream txt;
  txt << (total.holds ? "holds" : "violated") << "\n";
  for (const auto& f : total.offending) {
    details["offending"].push_back(io::form_to_json(f));
    txt << "  offending factor: " << form_to_string(f) << "\n";
  }
  emit(json_mode, verdict_json(total.holds ? "holds" : "violated", details), txt.str());
  return total.holds ? kExitHolds : kExitViolated;
}

int cmd_check_conj2(const std::string& arr_file, const std::string& bs_file, bool json_mode) {
  MultiArrangement a = io::load_arrangement(arr_file);
  io::BSFile b = io::load_bs_file(bs_file);
  if (b.r != a.r) throw io::ParseError("tuple lengths of the two files differ");
  CosetUnion exp_side;
  exp_side.ambient_dim = b.r;
  if (b.is_units) {
    std::vector<AffineLocus> units;
    for (const auto& u : b.units) units.push_back(locus(u));
    exp_side = exp_vb(units, std::vector<Int>(units.size(), Int(1)));
  } else {
    exp_side = exp_locus(locus(b.units[0]));
  }
  CosetUnion support = uniform_support_union(a).total;
  Conj2Result res = compare_conj2(exp_side, support);
  std::string verdict;
  switch (res.verdict) {
    case Conj2Verdict::equal: verdict = "equal"; break;
    case Conj2Verdict::strictly_contains: verdict = "strictly_contains"; break;
    case Conj2Verdict::strictly_contained: verdict = "strictly_contained (likely input error)"; break;
    case Conj2Verdict::incomparable: verdict = "incomparable"; break;
  }
  json details;
  std::ostringstream txt;
  txt << "verdict: " << verdict << "\n";
  if (res.extra_in_exp) {
    details["extra_in_exp"] = io::to_json(make_union(b.r, {*res.extra_in_exp}));
    txt << "  component only in Exp(V(B)): " << to_string(*res.extra_in_exp) << "\n";
  }
  if (res.extra_in_support) {
    details["extra_in_support"] = io::to_json(make_union(b.r, {*res.extra_in_support}));
    txt << "  component only in the support: " << to_string(*res.extra_in_support) << "\n";
  }
  emit(json_mode, verdict_json(verdict, details), txt.str());
  return res.verdict == Conj2Verdict::equal ? kExitHolds : kExitViolated;
}

int cmd_check_monodromy(const std::string& arr_file, const std::optional<std::string>& res_file,
                        bool candidates, bool json_mode) {
  MultiArrangement a = io::load_arrangement(arr_file);
  FormCheckResult res;
  if (res_file)
    res = check_monodromy(a, io::load_resolution(*res_file));
  else if (candidates || a.n != 2)
    res = check_monodromy_candidates(a);
  else
    res = check_monodromy(a);
  json details;
  std::ostringstream txt;
  txt << (res.holds ? "holds" : "violated") << "\n";
  if (res.witness) {
    details["witness"] = io::form_to_json(*res.witness);
    txt << "  polar form outside the support: " << form_to_string(*res.witness) << "\n";
  }
  emit(json_mode, verdict_json(res.holds ? "holds" : "violated", details), txt.str());
  return res.holds ? kExitHolds : kExitViolated;
}

int cmd_check_strong(const std::vector<std::string>& files,
                     const std::optional<std::string>& zeta_file, bool reduction, bool json_mode) {
  std::optional<std::string> arr_file;
  std::string bs_file;
  if (zeta_file) {
    if (files.size() != 1) throw io::ParseError("check strong --zeta needs exactly one BS file");
    bs_file = files[0];
  } else {
    if (files.size() != 2)
      throw io::ParseError("check strong needs an arrangement file and a BS file");
    arr_file = files[0];
    bs_file = files[1];
  }
  io::BSFile b = io::load_bs_file(bs_file);
  AffineLocus bs;
  bs.dim = b.r;
  for (const auto& u : b.units) bs = union_of(bs, locus(u));
  PolarLocus poles;
  std::optional<MultiArrangement> arr;
  if (zeta_file) {
    poles = polar_locus(io::load_zeta(*zeta_file));
  } else if (arr_file) {
    arr = io::load_arrangement(*arr_file);
    poles = polar_candidates(*arr);
  } else {
    throw io::ParseError("check strong needs an arrangement or --zeta");
  }
  FormCheckResult res = check_strong_monodromy(poles, bs);
  bool ok = res.holds;
  json details;
  std::ostringstream txt;
  if (arr && reduction) {
    ThmsmResult tr = check_thmsm_reduction(*arr, bs);
    ok = ok && tr.holds;
    details["dense_edges_checked"] = tr.dense_edges_checked;
    txt << "dense-edge reduction: " << (tr.holds ? "holds" : "violated") << " ("
        << tr.dense_edges_checked << " dense edges)\n";
    if (!tr.holds && tr.witness) {
      details["reduction_witness"] = io::form_to_json(*tr.witness);
      txt << "  failing candidate: " << form_to_string(*tr.witness) << "\n";
    }
  }
  txt << (res.holds ? "holds" : "violated") << "\n";
  if (res.witness) {
    details["witness"] = io::form_to_json(*res.witness);
    txt << "  polar form outside the locus: " << form_to_string(*res.witness) << "\n";
  }
  emit(json_mode, verdict_json(ok ? "holds" : "violated", details), txt.str());
  return ok ? kExitHolds : kExitViolated;
}

int cmd_check_specialize(const std::optional<std::string>& arr_file, const std::string& mat,
                         const std::vector<std::string>& bs_files, bool json_mode) {
  if (!arr_file && bs_files.empty())
    throw io::ParseError("check specialize needs an arrangement file or --bs");
  IntMatrix m = parse_int_matrix(mat);
  bool ok = true;
  json details;
  std::ostringstream txt;
  if (arr_file) {
    MultiArrangement a = io::load_arrangement(*arr_file);
    CheckResult res = check_specialization(a, m);
    ok = res.holds;
    txt << "support specialization: " << (res.holds ? "holds" : "violated") << "\n";
    if (res.witness) {
      details["witness"] = io::to_json(make_union(m.rows, {*res.witness}));
      txt << "  witness component: " << to_string(*res.witness) << "\n";
    }
  }
  if (!bs_files.empty()) {
    if (bs_files.size() != 2) throw io::ParseError("--bs needs exactly two files");
    io::BSFile bf = io::load_bs_file(bs_files[0]);
    io::BSFile bg = io::load_bs_file(bs_files[1]);
    auto bres = check_bs_specialization(bf.units[0], bg.units[0], m);
    ok = ok && bres.holds;
    details["bs_inclusion"] = bres.holds;
    details["bs_equal"] = bres.equal;
    txt << "Bernstein-Sato specialization inclusion: " << (bres.holds ? "holds" : "violated")
        << (bres.equal ? " (equality)" : "") << "\n";
    if (bres.witness) txt << "  witness component: " << to_string(*bres.witness) << "\n";
  }
  emit(json_mode, verdict_json(ok ? "holds" : "violated", details), txt.str());
  return ok ? kExitHolds : kExitViolated;
}

int cmd_check_ts(const std::string& f1, const std::string& f2, bool json_mode) {
  CheckResult res = check_thom_sebastiani(io::load_arrangement(f1), io::load_arrangement(f2));
  std::ostringstream txt;
  txt << (res.holds ? "holds" : "violated") << "\n";
  if (res.witness) txt << "  witness component: " << to_string(*res.witness) << "\n";
  emit(json_mode, verdict_json(res.holds ? "holds" : "violated"), txt.str());
  return res.holds ? kExitHolds : kExitViolated;
}

int cmd_check_decone(const std::string& file, bool json_mode) {
  CheckResult res = check_deconing(io::load_arrangement(file));
  std::ostringstream txt;
  txt << (res.holds ? "holds" : "violated") << "\n";
  if (res.witness) txt << "  witness component: " << to_string(*res.witness) << "\n";
  emit(json_mode, verdict_json(res.holds ? "holds" : "violated"), txt.str());
  return res.holds ? kExitHolds : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact support / Bernstein-Sato locus / zeta calculator for hyperplane multi-arrangements"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "machine-readable JSON output");

  auto* arr = app.add_subcommand("arr", "arrangement combinatorics");
  arr->require_subcommand(1);
  auto* arr_info = arr->add_subcommand("info", "intersection lattice, splittings, densities");
  std::string arr_info_file;
  arr_info->add_option("file", arr_info_file, "arrangement JSON file")->required();

  auto* support = app.add_subcommand("support", "uniform support union");
  std::string support_file;
  std::optional<std::string> support_point;
  bool support_milnor = false, support_codim1 = false;
  support->add_option("file", support_file, "arrangement JSON file")->required();
  support->add_option("--point", support_point, "evaluate Supp^unif at this rational point");
  support->add_flag("--milnor", support_milnor, "also print the Milnor eigenvalue set");
  support->add_flag("--codim1", support_codim1, "also print the codimension-one part");

  auto* bs = app.add_subcommand("bs", "Bernstein-Sato locus calculus");
  bs->require_subcommand(1);
  auto* bs_mono = bs->add_subcommand("monomial", "closed form for monomial tuples");
  std::string bs_mono_file;
  bs_mono->add_option("file", bs_mono_file, "arrangement of coordinate hyperplanes")->required();
  auto* bs_locus_cmd = bs->add_subcommand("locus", "zero locus of an imported ideal");
  std::string bs_locus_file;
  bs_locus_cmd->add_option("file", bs_locus_file, "BS ideal JSON file")->required();
  auto* bs_exp = bs->add_subcommand("exp", "Exp of the zero locus");
  std::string bs_exp_file;
  bs_exp->add_option("file", bs_exp_file, "BS ideal JSON file")->required();
  auto* bs_dec = bs->add_subcommand("decompose", "shift decomposition from unit ideals");
  std::vector<std::string> bs_dec_files;
  std::string bs_dec_m;
  std::optional<std::string> bs_dec_perm;
  bs_dec->add_option("files", bs_dec_files, "unit ideal files (or one units file)")->required();
  bs_dec->add_option("--m", bs_dec_m, "multiplicity vector, e.g. 1,1")->required();
  bs_dec->add_option("--perm", bs_dec_perm, "permutation of 1..r, e.g. 2,1");

  auto* zeta = app.add_subcommand("zeta", "topological zeta functions");
  std::optional<std::string> zeta_arr, zeta_res;
  bool zeta_local = false;
  zeta->add_option("file", zeta_arr, "arrangement JSON file (n = 2)");
  zeta->add_option("--resolution", zeta_res, "resolution data JSON file");
  zeta->add_flag("--local0", zeta_local, "local zeta function at the origin");
  auto* zeta_cand = zeta->add_subcommand("candidates", "dense-edge polar candidates");
  std::string zeta_cand_file;
  zeta_cand->add_option("file", zeta_cand_file, "arrangement JSON file")->required();
  auto* zeta_subst = zeta->add_subcommand("subst", "affine substitution into a zeta literal");
  std::string zeta_subst_file, zeta_subst_map;
  zeta_subst->add_option("file", zeta_subst_file, "zeta literal JSON file")->required();
  zeta_subst->add_option("--map", zeta_subst_map, "assignment JSON file")->required();

  auto* check = app.add_subcommand("check", "decision procedures");
  check->require_subcommand(1);
  auto* c1 = check->add_subcommand("conj1", "factored-shape predicate");
  std::string c1_file;
  c1->add_option("file", c1_file)->required();
  auto* c2 = check->add_subcommand("conj2", "Exp(V(B)) against the support union");
  std::string c2_arr, c2_bs;
  c2->add_option("arrangement", c2_arr)->required();
  c2->add_option("bs", c2_bs)->required();
  auto* cm = check->add_subcommand("monodromy", "polar forms against the support union");
  std::string cm_arr;
  std::optional<std::string> cm_res;
  bool cm_cands = false;
  cm->add_option("arrangement", cm_arr)->required();
  cm->add_option("--resolution", cm_res, "use this resolution's zeta");
  cm->add_flag("--candidates", cm_cands, "use dense-edge candidates instead of the zeta");
  auto* cs = check->add_subcommand("strong", "polar forms against the Bernstein-Sato locus");
  std::vector<std::string> cs_files;
  std::optional<std::string> cs_zeta;
  bool cs_reduction = false;
  cs->add_option("files", cs_files, "[arrangement] bs-ideal file");
  cs->add_option("--zeta", cs_zeta, "zeta literal file (exact polar locus)");
  cs->add_flag("--reduction", cs_reduction, "also verify the dense-edge hyperplane identity");
  auto* csp = check->add_subcommand("specialize", "support / BS specialization identities");
  std::optional<std::string> csp_arr;
  std::string csp_m;
  std::vector<std::string> csp_bs;
  csp->add_option("arrangement", csp_arr, "arrangement file");
  csp->add_option("--m", csp_m, "matrix rows, e.g. 1,0;1,1")->required();
  csp->add_option("--bs", csp_bs, "two BS files: the source and the specialized ideal");
  auto* cts = check->add_subcommand("ts", "product support against the factor intersection");
  std::string cts_a, cts_b;
  cts->add_option("first", cts_a)->required();
  cts->add_option("second", cts_b)->required();
  auto* cd = check->add_subcommand("decone", "homogeneous reduction identity");
  std::string cd_arr;
  cd->add_option("arrangement", cd_arr)->required();

  // the --json flag lives on the top-level app; let it follow any subcommand
  for (CLI::App* cmd : {arr, arr_info, support, bs, bs_mono, bs_locus_cmd, bs_exp, bs_dec, zeta,
                        zeta_cand, zeta_subst, check, c1, c2, cm, cs, csp, cts, cd})
    cmd->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*arr_info) return cmd_arr_info(arr_info_file, json_mode);
    if (*support) return cmd_support(support_file, support_point, support_milnor, support_codim1, json_mode);
    if (*bs_mono) return cmd_bs_monomial(bs_mono_file, json_mode);
    if (*bs_locus_cmd) return cmd_bs_locus(bs_locus_file, json_mode);
    if (*bs_exp) return cmd_bs_exp(bs_exp_file, json_mode);
    if (*bs_dec) return cmd_bs_decompose(bs_dec_files, bs_dec_m, bs_dec_perm, json_mode);
    if (*zeta_cand) return cmd_zeta_candidates(zeta_cand_file, json_mode);
    if (*zeta_subst) return cmd_zeta_subst(zeta_subst_file, zeta_subst_map, json_mode);
    if (*zeta) return cmd_zeta(zeta_arr, zeta_res, zeta_local, json_mode);
    if (*c1) return cmd_check_conj1(c1_file, json_mode);
    if (*c2) return cmd_check_conj2(c2_arr, c2_bs, json_mode);
    if (*cm) return cmd_check_monodromy(cm_arr, cm_res, cm_cands, json_mode);
    if (*cs) return cmd_check_strong(cs_files, cs_zeta, cs_reduction, json_mode);
    if (*csp) return cmd_check_specialize(csp_arr, csp_m, csp_bs, json_mode);
    if (*cts) return cmd_check_ts(cts_a, cts_b, json_mode);
    if (*cd) return cmd_check_decone(cd_arr, json_mode);
  } catch (const io::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  std::cerr << "input error: no subcommand\n";
  return kExitInputError;
}

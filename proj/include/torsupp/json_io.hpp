#pragma once

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "torsupp/arrangement.hpp"
#include "torsupp/bs_ideal.hpp"
#include "torsupp/support.hpp"
#include "torsupp/torus.hpp"
#include "torsupp/zeta.hpp"

namespace torsupp::io {

using nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

inline Int int_from(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  fail(where, "expected an integer or integer string");
}

inline json int_to(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

inline Rat rat_from(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    try {
      return rat_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected a rational \"p/q\" string");
}

inline std::vector<Int> int_vec_from(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integers");
  std::vector<Int> out;
  for (const auto& e : j) out.push_back(int_from(e, where));
  return out;
}

inline json int_vec_to(const std::vector<Int>& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(int_to(x));
  return out;
}

inline const json& field(const json& j, const std::string& name, const std::string& where) {
  auto it = j.find(name);
  if (it == j.end()) fail(where, "missing field '" + name + "'");
  return *it;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Forms.

inline json form_to_json(const LinForm& f) {
  LinForm g = integral_form(f);
  json out;
  out["coeffs"] = detail::int_vec_to(g.coeffs);
  out["const"] = rat_to_string(g.constant);
  return out;
}

inline LinForm form_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) detail::fail(where, "expected a form object");
  return make_form(detail::int_vec_from(detail::field(j, "coeffs", where), where + ".coeffs"),
                   detail::rat_from(detail::field(j, "const", where), where + ".const"));
}

// ---------------------------------------------------------------------------
// Arrangements: { "n", "r", "hyperplanes": [ { "coeffs", "const", "mults" } ] }.

inline json to_json(const MultiArrangement& a) {
  json out;
  out["n"] = a.n;
  out["r"] = a.r;
  out["hyperplanes"] = json::array();
  for (const auto& h : a.hyperplanes) {
    json hj = form_to_json(h.form);
    hj["mults"] = detail::int_vec_to(h.mults);
    out["hyperplanes"].push_back(std::move(hj));
  }
  return out;
}

inline MultiArrangement arrangement_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) detail::fail(where, "expected an arrangement object");
  MultiArrangement a;
  a.n = detail::field(j, "n", where).get<int>();
  a.r = detail::field(j, "r", where).get<int>();
  const json& hs = detail::field(j, "hyperplanes", where);
  if (!hs.is_array()) detail::fail(where, "'hyperplanes' must be an array");
  int idx = 0;
  for (const auto& hj : hs) {
    std::string hw = where + ".hyperplanes[" + std::to_string(idx++) + "]";
    HyperplaneMulti h;
    h.form = form_from_json(hj, hw);
    h.mults = detail::int_vec_from(detail::field(hj, "mults", hw), hw + ".mults");
    a.hyperplanes.push_back(std::move(h));
  }
  try {
    validate(a);
  } catch (const std::invalid_argument& e) {
    detail::fail(where, e.what());
  }
  return a;
}

// ---------------------------------------------------------------------------
// Coset unions: { "dim", "components": [ { "lattice_hnf", "torsion" } ] }.

inline json to_json(const CosetUnion& u) {
  json out;
  out["dim"] = u.ambient_dim;
  out["components"] = json::array();
  for (const auto& c : u.components) {
    json cj;
    cj["lattice_hnf"] = json::array();
    for (int i = 0; i < c.lattice.rank(); ++i)
      cj["lattice_hnf"].push_back(detail::int_vec_to(c.lattice.basis.row(i)));
    cj["torsion"] = json::array();
    for (const auto& t : c.torsion) cj["torsion"].push_back(qz_to_string(t));
    out["components"].push_back(std::move(cj));
  }
  return out;
}

inline CosetUnion coset_union_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) detail::fail(where, "expected a coset union object");
  int dim = detail::field(j, "dim", where).get<int>();
  std::vector<TorsionCoset> comps;
  int idx = 0;
  for (const auto& cj : detail::field(j, "components", where)) {
    std::string cw = where + ".components[" + std::to_string(idx++) + "]";
    const json& rows = detail::field(cj, "lattice_hnf", cw);
    IntMatrix basis(int(rows.size()), dim);
    for (int i = 0; i < int(rows.size()); ++i) {
      auto row = detail::int_vec_from(rows[i], cw + ".lattice_hnf");
      if (int(row.size()) != dim) detail::fail(cw, "lattice row length mismatch");
      for (int k = 0; k < dim; ++k) basis.at(i, k) = row[k];
    }
    TorsionCoset c;
    c.ambient_dim = dim;
    c.lattice = Lattice::from_generators(dim, basis);
    for (const auto& t : detail::field(cj, "torsion", cw))
      c.torsion.push_back(QZ(detail::rat_from(t, cw + ".torsion")));
    if (int(c.torsion.size()) != c.lattice.rank())
      detail::fail(cw, "torsion length does not match the lattice rank");
    comps.push_back(std::move(c));
  }
  return make_union(dim, std::move(comps));
}

// ---------------------------------------------------------------------------
// Affine loci: { "dim", "components": [ { "forms": [form] } ] }.

inline json to_json(const AffineLocus& l) {
  json out;
  out["dim"] = l.dim;
  out["components"] = json::array();
  for (const auto& s : l.components) {
    json sj;
    sj["forms"] = json::array();
    for (const auto& f : s.forms) sj["forms"].push_back(form_to_json(f));
    out["components"].push_back(std::move(sj));
  }
  return out;
}

inline AffineLocus affine_locus_from_json(const json& j, const std::string& where) {
  int dim = detail::field(j, "dim", where).get<int>();
  std::vector<AffineSubspace> comps;
  int idx = 0;
  for (const auto& sj : detail::field(j, "components", where)) {
    std::string sw = where + ".components[" + std::to_string(idx++) + "]";
    std::vector<LinForm> forms;
    for (const auto& fj : detail::field(sj, "forms", sw)) forms.push_back(form_from_json(fj, sw));
    auto s = make_subspace(dim, forms);
    if (!s) detail::fail(sw, "inconsistent subspace");
    comps.push_back(std::move(*s));
  }
  return make_locus(dim, std::move(comps));
}

// ---------------------------------------------------------------------------
// Bernstein-Sato ideal data:
// { "r", "generators": [[factor]], "intersect_of": [[factor]], "locality",
//   "units": [datum] }.

inline json to_json(const BSIdealDatum& b) {
  json out;
  out["r"] = b.r;
  auto factors_to = [](const std::vector<std::vector<BSFactor>>& gs) {
    json arr = json::array();
    for (const auto& g : gs) {
      json gj = json::array();
      for (const auto& f : g) {
        json fj = form_to_json(f.form);
        fj["power"] = f.power;
        gj.push_back(std::move(fj));
      }
      arr.push_back(std::move(gj));
    }
    return arr;
  };
  if (!b.generators.empty()) out["generators"] = factors_to(b.generators);
  if (!b.intersect_of.empty()) out["intersect_of"] = factors_to(b.intersect_of);
  if (!b.locality.empty()) out["locality"] = b.locality;
  return out;
}

inline BSIdealDatum bs_datum_from_json(const json& j, const std::string& where, int default_r = 0) {
  if (!j.is_object()) detail::fail(where, "expected a Bernstein-Sato ideal object");
  BSIdealDatum b;
  b.r = j.contains("r") ? j["r"].get<int>() : default_r;
  if (b.r <= 0) detail::fail(where, "missing or invalid 'r'");
  auto factors_from = [&](const json& arr, const std::string& fw) {
    std::vector<std::vector<BSFactor>> out;
    if (!arr.is_array()) detail::fail(fw, "expected an array of factor lists");
    int gi = 0;
    for (const auto& gj : arr) {
      std::string gw = fw + "[" + std::to_string(gi++) + "]";
      if (!gj.is_array()) detail::fail(gw, "expected a factor list");
      std::vector<BSFactor> g;
      for (const auto& fj : gj) {
        BSFactor f;
        f.form = form_from_json(fj, gw);
        f.power = fj.contains("power") ? fj["power"].get<int>() : 1;
        g.push_back(std::move(f));
      }
      out.push_back(std::move(g));
    }
    return out;
  };
  if (j.contains("generators")) b.generators = factors_from(j["generators"], where + ".generators");
  if (j.contains("intersect_of"))
    b.intersect_of = factors_from(j["intersect_of"], where + ".intersect_of");
  if (j.contains("locality")) b.locality = j["locality"].get<std::string>();
  try {
    validate(b);
  } catch (const std::invalid_argument& e) {
    detail::fail(where, e.what());
  }
  return b;
}

// A BS file either holds one ideal or a "units" collection of per-entry ideals.
struct BSFile {
  int r = 0;
  std::vector<BSIdealDatum> units;  // singleton for a plain ideal file
  bool is_units = false;
};

inline BSFile bs_file_from_json(const json& j, const std::string& where) {
  BSFile out;
  if (j.contains("units")) {
    out.is_units = true;
    out.r = detail::field(j, "r", where).get<int>();
    int idx = 0;
    for (const auto& uj : j["units"])
      out.units.push_back(
          bs_datum_from_json(uj, where + ".units[" + std::to_string(idx++) + "]", out.r));
    if (out.units.empty()) detail::fail(where, "empty units collection");
    for (const auto& u : out.units)
      if (u.r != out.r) detail::fail(where, "unit arity mismatch");
  } else {
    out.units.push_back(bs_datum_from_json(j, where));
    out.r = out.units[0].r;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Resolution data: { "r", "divisors": [{"a","k"}], "strata": [{"divisors","chi","chi0"?}] }.

inline json to_json(const ResolutionData& d) {
  json out;
  out["r"] = d.r;
  out["divisors"] = json::array();
  for (const auto& div : d.divisors)
    out["divisors"].push_back({{"a", detail::int_vec_to(div.a)}, {"k", detail::int_to(div.k)}});
  out["strata"] = json::array();
  for (const auto& s : d.strata) {
    json sj;
    sj["divisors"] = s.divisor_ids;
    sj["chi"] = detail::int_to(s.chi);
    if (s.chi0) sj["chi0"] = detail::int_to(*s.chi0);
    out["strata"].push_back(std::move(sj));
  }
  return out;
}

inline ResolutionData resolution_from_json(const json& j, const std::string& where) {
  ResolutionData d;
  d.r = detail::field(j, "r", where).get<int>();
  for (const auto& dj : detail::field(j, "divisors", where)) {
    ResolutionData::Divisor div;
    div.a = detail::int_vec_from(detail::field(dj, "a", where), where + ".divisors.a");
    div.k = detail::int_from(detail::field(dj, "k", where), where + ".divisors.k");
    d.divisors.push_back(std::move(div));
  }
  for (const auto& sj : detail::field(j, "strata", where)) {
    ResolutionData::Stratum s;
    for (const auto& i : detail::field(sj, "divisors", where)) s.divisor_ids.push_back(i.get<int>());
    std::sort(s.divisor_ids.begin(), s.divisor_ids.end());
    s.chi = detail::int_from(detail::field(sj, "chi", where), where + ".strata.chi");
    if (sj.contains("chi0")) s.chi0 = detail::int_from(sj["chi0"], where + ".strata.chi0");
    d.strata.push_back(std::move(s));
  }
  try {
    validate(d);
  } catch (const std::invalid_argument& e) {
    detail::fail(where, e.what());
  }
  return d;
}

// ---------------------------------------------------------------------------
// Zeta literals: { "r", "num": [{"exp","coef"}], "den": [{"form","mult"}] }.

inline json to_json(const SRationalFunction& z) {
  // emit integral denominator forms; the numerator absorbs the scale so the
  // value is preserved exactly
  Rat scale(1);
  for (const auto& [f, m] : z.den) {
    Int d = f.constant.get_den();
    for (int k = 0; k < m; ++k) scale *= Rat(d);
  }
  SPoly num = scale * z.num;
  json out;
  out["r"] = z.nvars;
  out["num"] = json::array();
  for (const auto& [e, c] : num.terms)
    out["num"].push_back({{"exp", e}, {"coef", rat_to_string(c)}});
  out["den"] = json::array();
  for (const auto& [f, m] : z.den)
    out["den"].push_back({{"form", form_to_json(f)}, {"mult", m}});
  return out;
}

inline SRationalFunction zeta_from_json(const json& j, const std::string& where) {
  int nvars = -1;
  if (j.contains("r")) nvars = j["r"].get<int>();
  const json& num = detail::field(j, "num", where);
  const json& den = detail::field(j, "den", where);
  if (nvars < 0) {
    for (const auto& t : num)
      if (t.contains("exp")) nvars = int(t["exp"].size());
    for (const auto& dj : den)
      if (dj.contains("form")) nvars = int(dj["form"]["coeffs"].size());
  }
  if (nvars < 0) detail::fail(where, "cannot infer the variable count");
  SPoly p = SPoly::zero(nvars);
  for (const auto& tj : num) {
    std::vector<int> e = detail::field(tj, "exp", where).get<std::vector<int>>();
    if (int(e.size()) != nvars) detail::fail(where, "numerator exponent arity mismatch");
    p.add_term(e, detail::rat_from(detail::field(tj, "coef", where), where + ".num.coef"));
  }
  std::vector<std::pair<LinForm, int>> d;
  for (const auto& dj : den) {
    // keep the raw (unnormalized) form: srf_quotient folds its content into
    // the numerator, so (2s+1) and (s+1/2) denote different denominators
    const json& fj = detail::field(dj, "form", where);
    LinForm f;
    f.coeffs = detail::int_vec_from(detail::field(fj, "coeffs", where), where + ".den.form");
    f.constant = detail::rat_from(detail::field(fj, "const", where), where + ".den.form");
    int mult = dj.contains("mult") ? dj["mult"].get<int>() : 1;
    d.emplace_back(std::move(f), mult);
  }
  return srf_quotient(nvars, std::move(p), d);
}

// ---------------------------------------------------------------------------
// Affine assignments for substitution: { "p", "assign": [ {"coeffs","const"} ] }.

inline AffineAssignment assignment_from_json(const json& j, const std::string& where) {
  AffineAssignment m;
  m.target_dim = detail::field(j, "p", where).get<int>();
  for (const auto& aj : detail::field(j, "assign", where)) {
    m.lin.push_back(detail::int_vec_from(detail::field(aj, "coeffs", where), where + ".coeffs"));
    if (int(m.lin.back().size()) != m.target_dim) detail::fail(where, "assignment arity mismatch");
    m.cst.push_back(aj.contains("const") ? detail::rat_from(aj["const"], where + ".const")
                                         : Rat(0));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Support reports and misc emitters.

inline json edge_to_json(const Edge& e) {
  json out;
  json pt = json::array();
  for (const auto& x : e.point) pt.push_back(rat_to_string(x));
  out["point"] = std::move(pt);
  out["through"] = e.through;
  out["codim"] = e.codim;
  return out;
}

inline json to_json(const SupportReport& rep) {
  json out;
  out["per_edge"] = json::array();
  for (const auto& [e, u] : rep.per_edge) {
    json ej;
    ej["edge"] = edge_to_json(e);
    ej["contribution"] = to_json(u);
    out["per_edge"].push_back(std::move(ej));
  }
  out["total"] = to_json(rep.total);
  out["codim1"] = to_json(rep.codim1);
  return out;
}

inline json to_json(const EigenvalueSet& e) {
  json out;
  out["all_of_c_star"] = e.all_of_c_star;
  json vals = json::array();
  for (const auto& v : e.values) vals.push_back(qz_to_string(v));
  out["values"] = std::move(vals);
  return out;
}

// ---------------------------------------------------------------------------
// File loading.

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

inline MultiArrangement load_arrangement(const std::string& path) {
  return arrangement_from_json(load_json(path), path);
}
inline BSFile load_bs_file(const std::string& path) {
  return bs_file_from_json(load_json(path), path);
}
inline ResolutionData load_resolution(const std::string& path) {
  return resolution_from_json(load_json(path), path);
}
inline SRationalFunction load_zeta(const std::string& path) {
  return zeta_from_json(load_json(path), path);
}
inline AffineAssignment load_assignment(const std::string& path) {
  return assignment_from_json(load_json(path), path);
}

}  // namespace torsupp::io

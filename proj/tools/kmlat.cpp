#include "kmlat/error.hpp"
#include "kmlat/laurent.hpp"
#include "kmlat/lattice_covol.hpp"
#include "kmlat/lie_signs.hpp"
#include "kmlat/selftest.hpp"
#include "kmlat/text_format.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace kmlat;

struct Options {
  std::string gcm;
  std::uint32_t q = 0;
  std::string field;
  std::string word;
  std::vector<std::string> gens;
  std::string edge;
  std::uint64_t budget = Budget::kDefault;
  int radius = 2;
  std::size_t word_bound = 12;
  std::string format;
  std::string delta = "all";
  std::string q_range;
  std::uint64_t order_a = 0, order_b = 0;
  std::string lattice;
  std::uint64_t p = 0;
  int side = 1;
  std::size_t count = 12;
  int height = 0;
};

bool json_out(const Options& o, bool default_json) {
  return o.format.empty() ? default_json : o.format == "json";
}

void emit(const Options& o, bool default_json, const json& j, const std::string& text) {
  if (json_out(o, default_json))
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

Gcm require_gcm(const Options& o) {
  if (o.gcm.empty()) throw CLI::RequiredError("--gcm");
  return parse_gcm(o.gcm);
}

Field require_field(const Options& o) {
  if (!o.field.empty()) return Field::parse(o.field);
  if (o.q == 0) throw CLI::RequiredError("--q or --field");
  return Field::parse(std::to_string(o.q));
}

GroupContext require_context(const Options& o) {
  const Gcm g = require_gcm(o);
  if (!g.group_admissible())
    throw Error(errc::bad_gcm, "group-level commands need a12, a21 <= -2, got " + g.str());
  return {RootDatum::simply_connected(g), require_field(o), epsilon_pair(g).eps};
}

json root_json(Root r) { return json::array({r.k1, r.k2}); }

std::string approx(const Rational& r) {
  std::ostringstream s;
  s << std::setprecision(12) << r.convert_to<double>();
  return s.str();
}

int cmd_roots(const Options& o) {
  const Gcm g = require_gcm(o);
  if (o.side != 1 && o.side != 2) throw CLI::ValidationError("--side", "must be 1 or 2");
  const auto roots = positive_roots(g, o.side, o.count);
  json j{{"gcm", g.str()}, {"side", o.side}, {"roots", json::array()}};
  std::string text;
  for (const auto& r : roots) {
    j["roots"].push_back(root_json(r));
    text += (text.empty() ? "" : ",") + r.str();
  }
  emit(o, false, j, text + "\n");
  return 0;
}

int cmd_signs(const Options& o) {
  const Gcm g = require_gcm(o);
  const auto res = o.height > 0 ? epsilon_pair(g, o.height) : epsilon_pair(g);
  json j{{"gcm", g.str()}, {"eps1", res.eps.eps1}, {"eps2", res.eps.eps2}, {"height", res.height}};
  std::string text = "eps1 " + std::to_string(res.eps.eps1) + "\neps2 " + std::to_string(res.eps.eps2) +
                     "\nheight " + std::to_string(res.height) + "\n";
  j["certificates"] = json::array();
  for (const auto& c : res.certificates) {
    json s = json::array();
    std::string str;
    for (const auto& [r, d] : c.string) {
      s.push_back({{"root", root_json(r)}, {"dim", d}});
      str += " " + r.str() + ":" + std::to_string(d);
    }
    j["certificates"].push_back({{"i", c.i},
                                 {"j", c.j},
                                 {"sign_e", c.sign_e},
                                 {"sign_f", c.sign_f},
                                 {"string", s},
                                 {"height", c.height},
                                 {"stable", c.stable}});
    text += "eta" + std::to_string(c.i) + "^2 on e" + std::to_string(c.j) + ": " + std::to_string(c.sign_e) +
            ", on f" + std::to_string(c.j) + ": " + std::to_string(c.sign_f) + (c.stable ? " (stable)" : "") +
            "; string" + str + "\n";
  }
  emit(o, true, j, text);
  return 0;
}

int cmd_center(const Options& o) {
  const Gcm g = require_gcm(o);
  const Field f = require_field(o);
  const auto datum = RootDatum::simply_connected(g);
  const auto brute = center_order(datum, f);
  const auto snf = center_order_snf(datum, f.q());
  json j{{"gcm", g.str()}, {"field", f.spec()}, {"order_brute_force", brute}, {"order_smith_form", snf},
         {"agree", brute == snf}};
  std::string text = "|Z| = " + std::to_string(brute) + " (brute force), " + std::to_string(snf) + " (Smith form)\n";
  if (brute <= 64) {
    j["elements"] = json::array();
    for (const auto& h : center_elements(datum, f)) {
      j["elements"].push_back(h.coords);
      text += to_string(h) + "\n";
    }
  }
  emit(o, false, j, text);
  return brute == snf ? 0 : 1;
}

std::string torsion_name(TorsionKind k) {
  switch (k) {
  case TorsionKind::Identity: return "IDENTITY";
  case TorsionKind::PPowerInFactorConjugate: return "P_POWER_IN_FACTOR_CONJUGATE";
  case TorsionKind::Infinite: return "INFINITE";
  }
  return "";
}

bool positive_x_only(const GroupWord& w) {
  for (const auto& a : w) {
    const auto* x = std::get_if<XAtom>(&a);
    if (!x || !x->root.positive()) return false;
  }
  return true;
}

int cmd_normalform(const Options& o) {
  const auto ctx = require_context(o);
  const GroupWord w = parse_word(ctx, o.word);
  Budget budget(o.budget);
  json j{{"word", format_word(w)}};
  std::string text;
  if (positive_x_only(w)) {
    const UWord u = parse_uword(ctx.gcm(), ctx.field, o.word);
    const auto t = torsion_class(ctx.field, u);
    j["u"] = format_uword(u);
    j["syllables"] = u.length();
    j["torsion"] = {{"kind", torsion_name(t.kind)}, {"order", t.order}, {"core", format_uword(t.core)},
                    {"conjugator", format_uword(t.conjugator)}};
    text += "u " + format_uword(u) + "\ntorsion " + torsion_name(t.kind) + " order " +
            (t.order == 0 ? std::string("inf") : std::to_string(t.order)) + "\n";
  }
  const GroupElement g = evaluate(ctx, w, budget);
  j["edge"] = format_edge(g.edge);
  j["b_u"] = format_uword(g.b.u);
  j["b_h"] = to_string(g.b.h);
  j["budget_used"] = budget.used();
  text += "edge " + format_edge(g.edge) + "\nb " + format_uword(g.b.u) + " h" + to_string(g.b.h) + "\n";
  emit(o, false, j, text);
  return 0;
}

int cmd_act(const Options& o) {
  const auto ctx = require_context(o);
  const GroupWord w = parse_word(ctx, o.word);
  const Edge e = parse_edge(ctx.field, o.edge);
  Budget budget(o.budget);
  const Edge img = act(ctx, w, e, budget);
  json j{{"edge", format_edge(img)}, {"cell_length", img.length()}, {"budget_used", budget.used()}};
  emit(o, true, j,
       "edge " + format_edge(img) + "\ncell_length " + std::to_string(img.length()) + "\nbudget_used " +
           std::to_string(budget.used()) + "\n");
  return 0;
}

int cmd_orbit(const Options& o) {
  const auto ctx = require_context(o);
  std::vector<GroupWord> gens;
  for (const auto& s : o.gens) gens.push_back(parse_word(ctx, s));
  Budget budget(o.budget);
  const auto rep = orbit_and_stabilizers(ctx, gens, o.radius, o.word_bound, budget);
  json j{{"radius", rep.radius},
         {"word_bound", rep.word_bound},
         {"group_order", rep.group_order},
         {"edge_orbits", rep.edge_orbits},
         {"vertex_orbits", rep.vertex_orbits},
         {"scope", "exact within ball(" + std::to_string(rep.radius) + "), words <= " +
                       std::to_string(rep.word_bound)},
         {"budget_used", budget.used()}};
  std::string text = "group order " + std::to_string(rep.group_order) + "\nedge orbits " +
                     std::to_string(rep.edge_orbits) + "\nvertex orbits " + std::to_string(rep.vertex_orbits) + "\n";
  json vs = json::array();
  for (std::size_t k = 0; k < rep.vertices.size(); ++k) {
    vs.push_back({{"vertex", format_vertex(rep.vertices[k])},
                  {"orbit", rep.vertex_orbit[k]},
                  {"stabilizer", rep.vertex_stabilizer[k]}});
    text += format_vertex(rep.vertices[k]) + " orbit " + std::to_string(rep.vertex_orbit[k]) + " stabilizer " +
            std::to_string(rep.vertex_stabilizer[k]) + "\n";
  }
  j["vertices"] = vs;
  text += "scope: exact within ball(" + std::to_string(rep.radius) + "), words <= " +
          std::to_string(rep.word_bound) + "\n";
  emit(o, false, j, text);
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::parse_error, "cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int cmd_covol(const Options& o) {
  if (o.lattice.empty()) {
    if (o.order_a == 0 || o.order_b == 0) throw CLI::RequiredError("--A and --B, or --lattice");
    const Rational v = covolume(o.order_a, o.order_b);
    emit(o, false, json{{"covolume", to_string(v)}, {"approx", approx(v)}}, to_string(v) + "\n");
    return 0;
  }
  const std::string text = read_file(o.lattice);
  const auto lat = parse_lattice_json(text);
  const auto rep = covolume_report(lat);
  json j{{"covolume", to_string(rep.covolume)}, {"approx", approx(rep.covolume)}, {"contributions", json::array()}};
  std::string out = to_string(rep.covolume) + "\n";
  for (const auto& [name, v] : rep.contributions) {
    j["contributions"].push_back({{"orbit", name}, {"value", to_string(v)}});
    out += "  " + name + " " + to_string(v) + "\n";
  }
  bool ok = true;
  if (o.q != 0 || !o.field.empty()) {
    const Field f = require_field(o);
    const auto adm = admissibility(lat, f.q(), o.p ? o.p : f.p());
    j["admissibility"] = json::array();
    for (const auto& c : adm.checks) {
      j["admissibility"].push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      out += std::string(c.pass ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
    }
    j["admissible"] = adm.pass();
    const auto raw = json::parse(text);
    if (raw.contains("realization") && !o.gcm.empty()) {
      const auto ctx = require_context(o);
      LatticeRealization real;
      for (const auto& s : raw["realization"].value("gens_A", std::vector<std::string>{}))
        real.gens_A.push_back(parse_word(ctx, s));
      for (const auto& s : raw["realization"].value("gens_B", std::vector<std::string>{}))
        real.gens_B.push_back(parse_word(ctx, s));
      Budget budget(o.budget);
      const auto cc = cross_check_covolume(lat, ctx, real, o.radius, o.word_bound, budget);
      j["cross_check"] = {{"agree", cc.agree},
                          {"table", to_string(cc.table_total)},
                          {"census", to_string(cc.census_total)},
                          {"discrepancy", cc.discrepancy}};
      out += std::string("cross-check ") + (cc.agree ? "agrees" : "DISAGREES") + ": table " +
             to_string(cc.table_total) + ", census " + to_string(cc.census_total) + "\n";
      ok = cc.agree;
    }
  }
  emit(o, false, j, out);
  return ok ? 0 : 1;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument(s);
    return {std::stoull(s.substr(0, dots)), std::stoull(s.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--q-range", "expected a..b, got '" + s + "'");
  }
}

int cmd_mincovol(const Options& o) {
  const Gcm g = require_gcm(o);
  const auto datum = RootDatum::simply_connected(g);
  std::vector<int> deltas;
  if (o.delta == "all")
    deltas = {1, 2, 4};
  else
    try {
      deltas = {std::stoi(o.delta)};
    } catch (const std::logic_error&) {
      throw Error(errc::bad_delta, "delta must be 1, 2, 4 or all, got " + o.delta);
    }
  std::vector<std::uint64_t> qs;
  if (!o.q_range.empty()) {
    const auto [lo, hi] = parse_range(o.q_range);
    for (std::uint64_t q = lo; q <= hi; ++q)
      if (prime_power(q)) qs.push_back(q);
  } else {
    qs.push_back(require_field(o).q());
  }
  const bool single = o.q_range.empty();
  json rows = json::array();
  std::string text = "q |Z| delta value approx\n";
  for (auto q : qs) {
    // Single q: brute force over the torus; ranges use the Smith form.
    const auto z = single ? center_order(datum, Field::parse(std::to_string(q))) : center_order_snf(datum, q);
    for (int d : deltas) {
      const auto v = min_covol_value(q, z, d);
      rows.push_back({{"q", q},
                      {"center_order", z},
                      {"delta", d},
                      {"delta_status", "candidate"},
                      {"value", to_string(v.value)},
                      {"approx", approx(v.value)},
                      {"warning", v.warning}});
      text += std::to_string(q) + " " + std::to_string(z) + " " + std::to_string(d) + " " + to_string(v.value) +
              " ~" + approx(v.value) + (v.below_threshold ? " (warning: " + v.warning + ")" : "") + "\n";
      if (v.below_threshold && d == deltas.front()) std::cerr << "warning: " << v.warning << "\n";
    }
  }
  emit(o, false, json{{"gcm", g.str()}, {"rows", rows}}, text);
  return 0;
}

int cmd_selftest(const Options& o) {
  const auto results = run_selftest();
  json j = json::array();
  std::string text;
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.pass;
    j.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    text += std::string(r.pass ? "PASS " : "FAIL ") + r.name + (r.pass ? "" : ": " + r.detail) + "\n";
  }
  text += ok ? "selftest passed\n" : "selftest FAILED\n";
  emit(o, false, json{{"pass", ok}, {"checks", j}}, text);
  return ok ? 0 : 1;
}

void error_json(const std::string& code, const std::string& message) {
  std::cerr << json{{"code", code}, {"message", message}}.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in minimal rank-2 Kac-Moody groups over finite fields"};
  app.require_subcommand(1);
  Options o;

  auto fmt = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto gcm = [&](CLI::App* c) { c->add_option("--gcm", o.gcm, "Cartan matrix \"2,a12;a21,2\""); };
  auto field = [&](CLI::App* c) {
    c->add_option("--q", o.q, "Field order");
    c->add_option("--field", o.field, "Field p^a or p^a/c0,c1,...");
  };
  auto budget = [&](CLI::App* c) { c->add_option("--budget", o.budget, "Carry-step budget"); };

  auto* roots = app.add_subcommand("roots", "Positive real roots of one side");
  gcm(roots);
  roots->add_option("--side", o.side, "Side 1 or 2");
  roots->add_option("--count", o.count, "Number of roots");
  fmt(roots);

  auto* signs = app.add_subcommand("signs", "Signs eps1, eps2 with certificates");
  gcm(signs);
  signs->add_option("--height", o.height, "Truncation height");
  fmt(signs);

  auto* center = app.add_subcommand("center", "Order of the center (simply connected datum)");
  gcm(center);
  field(center);
  fmt(center);

  auto* nf = app.add_subcommand("normalform", "Normal form of a group word");
  gcm(nf);
  field(nf);
  nf->add_option("--word", o.word, "Word, e.g. \"x(1,0;2) x(0,1;1)\"")->required();
  budget(nf);
  fmt(nf);

  auto* actc = app.add_subcommand("act", "Image of an edge under a word");
  gcm(actc);
  field(actc);
  actc->add_option("--word", o.word, "Word")->required();
  actc->add_option("--edge", o.edge, "Edge i1:t1,i2:t2,... or base");
  budget(actc);
  fmt(actc);

  auto* orbit = app.add_subcommand("orbit", "Orbits and stabilizers on a ball");
  gcm(orbit);
  field(orbit);
  orbit->add_option("--word", o.gens, "Generator word (repeatable)");
  orbit->add_option("--radius", o.radius, "Ball radius");
  orbit->add_option("--word-bound", o.word_bound, "Maximal word length during enumeration");
  budget(orbit);
  fmt(orbit);

  auto* covol = app.add_subcommand("covol", "Covolume of a lattice");
  covol->add_option("--A", o.order_a, "Order of the type-1 vertex group");
  covol->add_option("--B", o.order_b, "Order of the type-2 vertex group");
  covol->add_option("--lattice", o.lattice, "Lattice JSON file");
  field(covol);
  covol->add_option("--p", o.p, "Characteristic for torsion screening (default: that of the field)");
  gcm(covol);
  covol->add_option("--radius", o.radius, "Ball radius for the cross-check");
  covol->add_option("--word-bound", o.word_bound, "Maximal word length for the cross-check");
  budget(covol);
  fmt(covol);

  auto* minc = app.add_subcommand("mincovol", "Minimal covolume value 2/((q+1)|Z|delta)");
  gcm(minc);
  field(minc);
  minc->add_option("--q-range", o.q_range, "Range a..b of field orders");
  minc->add_option("--delta", o.delta, "1, 2, 4 or all");
  fmt(minc);

  auto* self = app.add_subcommand("selftest", "Run the differential self-test suite");
  fmt(self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*roots) return cmd_roots(o);
    if (*signs) return cmd_signs(o);
    if (*center) return cmd_center(o);
    if (*nf) return cmd_normalform(o);
    if (*actc) return cmd_act(o);
    if (*orbit) return cmd_orbit(o);
    if (*covol) return cmd_covol(o);
    if (*minc) return cmd_mincovol(o);
    if (*self) return cmd_selftest(o);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    error_json(e.code(), e.what());
    return 1;
  } catch (const std::exception& e) {
    error_json("InvalidArgument", e.what());
    return 1;
  }
  return 2;
}

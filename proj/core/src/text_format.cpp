#include "kmlat/text_format.hpp"

#include "kmlat/error.hpp"

#include <cctype>
#include <charconv>

namespace kmlat {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(errc::parse_error, msg); }

std::string strip(const std::string& s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r += c;
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::int64_t to_int(const std::string& s, const std::string& ctx) {
  std::int64_t v = 0;
  const char* b = s.data();
  const char* e = b + s.size();
  if (!s.empty() && *b == '+') ++b;
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e || b == e) fail("expected an integer in " + ctx + ", got '" + s + "'");
  return v;
}

Elem to_elem(const Field& f, const std::string& s, const std::string& ctx) {
  const std::int64_t v = to_int(s, ctx);
  if (v < 0 || static_cast<std::uint64_t>(v) >= f.q())
    fail("field element " + s + " out of range 0.." + std::to_string(f.q() - 1) + " in " + ctx);
  return static_cast<Elem>(v);
}

} // namespace

Gcm parse_gcm(const std::string& s0) {
  const std::string s = strip(s0);
  const auto rows = split(s, ';');
  if (rows.size() != 2) fail("GCM must look like 2,a12;a21,2, got '" + s0 + "'");
  const auto r1 = split(rows[0], ','), r2 = split(rows[1], ',');
  if (r1.size() != 2 || r2.size() != 2) fail("GCM must be 2x2, got '" + s0 + "'");
  if (to_int(r1[0], "GCM") != 2 || to_int(r2[1], "GCM") != 2) throw Error(errc::bad_gcm, "GCM diagonal must be 2");
  return Gcm::make(static_cast<int>(to_int(r1[1], "GCM")), static_cast<int>(to_int(r2[0], "GCM")));
}

Edge parse_edge(const Field& f, const std::string& s0) {
  const std::string s = strip(s0);
  Edge e;
  if (s.empty() || s == "base") return e;
  for (const auto& tok : split(s, ',')) {
    const auto parts = split(tok, ':');
    if (parts.size() != 2) fail("gallery step must be type:t, got '" + tok + "'");
    const auto type = to_int(parts[0], "gallery step");
    if (type != 1 && type != 2) fail("gallery type must be 1 or 2, got '" + parts[0] + "'");
    e.steps.push_back({static_cast<int>(type), to_elem(f, parts[1], "gallery step")});
  }
  validate(f, e);
  return e;
}

std::string format_edge(const Edge& e) {
  if (e.steps.empty()) return "base";
  std::string s;
  for (const auto& st : e.steps) {
    if (!s.empty()) s += ',';
    s += std::to_string(st.type) + ":" + std::to_string(st.t);
  }
  return s;
}

std::string format_vertex(const Vertex& v) { return "v" + std::to_string(v.type) + "[" + format_edge(v.edge) + "]"; }

GroupWord parse_word(const GroupContext& ctx, const std::string& s0) {
  GroupWord w;
  std::string s;
  for (char c : s0) s += c == '*' ? ' ' : c;
  std::size_t k = 0;
  auto skip = [&] {
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
  };
  for (skip(); k < s.size(); skip()) {
    if (s[k] == '1') {
      ++k;
      continue;
    }
    const char kind = s[k++];
    skip();
    if (k >= s.size() || s[k] != '(') fail(std::string("expected '(' after '") + kind + "'");
    const auto close = s.find(')', k);
    if (close == std::string::npos) fail("unbalanced parenthesis in word");
    const std::string body = strip(s.substr(k + 1, close - k - 1));
    k = close + 1;
    Atom atom;
    if (kind == 'x') {
      const auto parts = split(body, ';');
      if (parts.size() != 2) fail("x atom must be x(k1,k2;c), got 'x(" + body + ")'");
      const auto r = split(parts[0], ',');
      if (r.size() != 2) fail("root must have two coordinates in 'x(" + body + ")'");
      atom = XAtom{Root{to_int(r[0], "root"), to_int(r[1], "root")}, to_elem(ctx.field, parts[1], "x atom")};
    } else if (kind == 'n') {
      atom = NAtom{static_cast<int>(to_int(body, "n atom"))};
    } else if (kind == 'h') {
      TorusElement h;
      for (const auto& c : split(body, ',')) h.coords.push_back(to_elem(ctx.field, c, "h atom"));
      atom = HAtom{std::move(h)};
    } else {
      fail(std::string("unknown atom '") + kind + "'");
    }
    validate(ctx, atom);
    w.push_back(std::move(atom));
  }
  return w;
}

std::string format_atom(const Atom& a) {
  if (const auto* x = std::get_if<XAtom>(&a))
    return "x(" + std::to_string(x->root.k1) + "," + std::to_string(x->root.k2) + ";" + std::to_string(x->c) + ")";
  if (const auto* n = std::get_if<NAtom>(&a)) return "n(" + std::to_string(n->i) + ")";
  std::string s = "h(";
  const auto& h = std::get<HAtom>(a).h;
  for (std::size_t k = 0; k < h.coords.size(); ++k) s += (k ? "," : "") + std::to_string(h.coords[k]);
  return s + ")";
}

std::string format_word(const GroupWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& a : w) s += (s.empty() ? "" : " ") + format_atom(a);
  return s;
}

UWord parse_uword(const Gcm& gcm, const Field& f, const std::string& s) {
  // Only root validity matters here; any datum over the same GCM will do.
  const GroupContext ctx{RootDatum::simply_connected(gcm), f, EpsilonPair{}};
  std::vector<Syllable> syl;
  for (const auto& a : parse_word(ctx, s)) {
    const auto* x = std::get_if<XAtom>(&a);
    if (!x || !x->root.positive()) fail("unipotent words take positive-root x atoms only, got " + format_atom(a));
    syl.push_back(Syllable{root_side(gcm, x->root), {{x->root, x->c}}});
  }
  return normalize(f, std::move(syl));
}

std::string format_uword(const UWord& u) {
  if (u.identity()) return "1";
  std::string s;
  for (const auto& syl : u.syllables) {
    s += (s.empty() ? "[" : " [") + std::to_string(syl.side) + ":";
    for (const auto& [r, c] : syl.coords) s += " " + r.str() + "=" + std::to_string(c);
    s += "]";
  }
  return s;
}

std::string format_roots(const std::vector<Root>& roots) {
  std::string s;
  for (const auto& r : roots) s += (s.empty() ? "" : " ") + r.str();
  return s;
}

} // namespace kmlat

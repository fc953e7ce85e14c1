#pragma once

#include "kmlat/root_datum.hpp"
#include "kmlat/tree_engine.hpp"
#include "kmlat/unipotent.hpp"

#include <string>
#include <vector>

namespace kmlat {

/// "2,a12;a21,2". Throws ParseError or BadGcm.
Gcm parse_gcm(const std::string& s);

/// "base" or "" for the base edge, else "type:t,type:t,...". Validated
/// against the field; throws ParseError.
Edge parse_edge(const Field& f, const std::string& s);
std::string format_edge(const Edge& e);
std::string format_vertex(const Vertex& v);

/// Whitespace or '*' separated atoms "x(k1,k2;c)", "n(i)", "h(c1,...,cr)";
/// "1" is the empty word. Each atom is validated against the context.
GroupWord parse_word(const GroupContext& ctx, const std::string& s);
std::string format_atom(const Atom& a);
std::string format_word(const GroupWord& w);

/// A word of positive-root x atoms, normalized in U_1 * U_2.
UWord parse_uword(const Gcm& gcm, const Field& f, const std::string& s);
/// "[1: (1,0)=2 (2,1)=1] [2: (0,1)=1]", "1" for the identity.
std::string format_uword(const UWord& u);

/// "(1,0) (2,1) ..."
std::string format_roots(const std::vector<Root>& roots);

} // namespace kmlat

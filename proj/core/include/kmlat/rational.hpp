#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace kmlat {

using Rational = boost::multiprecision::mpq_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

} // namespace kmlat

#include "kmlat/torus.hpp"

#include "kmlat/error.hpp"

#include <numeric>
#include <stdexcept>

namespace kmlat {

void validate(const RootDatum& datum, const TorusElement& h) {
  if (h.coords.size() != static_cast<std::size_t>(datum.rank_y()))
    throw Error(errc::bad_root_datum, "torus element has " + std::to_string(h.coords.size()) +
                                          " coordinates, datum rank is " + std::to_string(datum.rank_y()));
  for (auto c : h.coords)
    if (c == 0) throw Error(errc::parse_error, "torus coordinates must be nonzero");
}

TorusElement torus_mul(const Field& f, const TorusElement& a, const TorusElement& b) {
  TorusElement r = a;
  for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] = f.mul(a.coords[k], b.coords.at(k));
  return r;
}

TorusElement torus_inv(const Field& f, const TorusElement& a) {
  TorusElement r = a;
  for (auto& c : r.coords) c = f.inv(c);
  return r;
}

Elem char_eval(const RootDatum& datum, const Field& f, Root beta, const TorusElement& h) {
  Elem v = 1;
  for (int k = 0; k < datum.rank_y(); ++k) v = f.mul(v, f.pow(h.coords.at(k), datum.pairing(beta, k)));
  return v;
}

Elem char_eval(const RootDatum& datum, const Field& f, int i, const TorusElement& h) {
  return char_eval(datum, f, Root::simple(i), h);
}

TorusElement coroot_torus(const RootDatum& datum, const Field& f, int i, Elem c) {
  TorusElement h = TorusElement::identity(datum);
  const auto& y = datum.coroot(i);
  for (int k = 0; k < datum.rank_y(); ++k) h.coords[k] = f.pow(c, y[k]);
  return h;
}

TorusElement weyl_act(const RootDatum& datum, const Field& f, int i, const TorusElement& h) {
  return torus_mul(f, h, coroot_torus(datum, f, i, f.inv(char_eval(datum, f, i, h))));
}

namespace {

// Enumerates H in discrete-log coordinates; alpha_i(h) = 1 iff the pairing
// row dotted with the log vector vanishes mod q-1.
template <class Visit>
void enumerate_center(const RootDatum& datum, const Field& f, Visit&& visit) {
  const std::int64_t n = f.q() - 1;
  const int r = datum.rank_y();
  std::vector<std::int64_t> logs(static_cast<std::size_t>(r), 0);
  while (true) {
    bool central = true;
    for (int i = 1; i <= 2 && central; ++i) {
      std::int64_t s = 0;
      for (int k = 0; k < r; ++k) s = (s + datum.pairing(i, k) * logs[k]) % n;
      central = (s % n == 0);
    }
    if (central) visit(logs);
    int k = 0;
    while (k < r && ++logs[k] == n) logs[k++] = 0;
    if (k == r) break;
  }
}

} // namespace

std::uint64_t center_order(const RootDatum& datum, const Field& f) {
  std::uint64_t count = 0;
  enumerate_center(datum, f, [&](const std::vector<std::int64_t>&) { ++count; });
  return count;
}

std::vector<TorusElement> center_elements(const RootDatum& datum, const Field& f) {
  std::vector<TorusElement> out;
  enumerate_center(datum, f, [&](const std::vector<std::int64_t>& logs) {
    TorusElement h;
    for (auto l : logs) h.coords.push_back(f.exp(static_cast<std::uint64_t>(l)));
    out.push_back(std::move(h));
  });
  return out;
}

std::uint64_t center_order_snf(const RootDatum& datum, std::uint64_t q) {
  const std::int64_t n = static_cast<std::int64_t>(q) - 1;
  const int r = datum.rank_y();
  // Invariant factors of the 2 x r pairing matrix: d1 = gcd of entries,
  // d1*d2 = gcd of 2x2 minors.
  std::int64_t d1 = 0;
  for (int i = 1; i <= 2; ++i)
    for (int k = 0; k < r; ++k) d1 = std::gcd(d1, static_cast<std::int64_t>(datum.pairing(i, k)));
  std::int64_t minors = 0;
  for (int k = 0; k < r; ++k)
    for (int l = k + 1; l < r; ++l)
      minors = std::gcd(minors, static_cast<std::int64_t>(datum.pairing(1, k)) * datum.pairing(2, l) -
                                    static_cast<std::int64_t>(datum.pairing(1, l)) * datum.pairing(2, k));
  const std::int64_t d2 = d1 == 0 ? 0 : minors / d1;
  // Kernel of (Z/n)^r -> (Z/n)^2 has order n^{r-2} * gcd(d1,n) * gcd(d2,n)
  // (a zero invariant factor contributes n).
  std::uint64_t order = static_cast<std::uint64_t>(std::gcd(d1, n));
  if (r >= 2) order *= static_cast<std::uint64_t>(std::gcd(d2, n));
  for (int k = 2; k < r; ++k) order *= static_cast<std::uint64_t>(n);
  return order;
}

std::string to_string(const TorusElement& h) {
  std::string s = "(";
  for (std::size_t k = 0; k < h.coords.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(h.coords[k]);
  }
  return s + ")";
}

} // namespace kmlat

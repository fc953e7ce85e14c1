#include "kmlat/root_datum.hpp"

#include "kmlat/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace kmlat {

Gcm Gcm::make(int a12, int a21) {
  if (a12 > -1 || a21 > -1)
    throw Error(errc::bad_gcm, "off-diagonal GCM entries must be <= -1, got a12=" +
                                   std::to_string(a12) + " a21=" + std::to_string(a21));
  return Gcm(a12, a21);
}

int Gcm::entry(int i, int j) const {
  if (i == j) return 2;
  return i == 1 ? a12_ : a21_;
}

std::string Gcm::str() const {
  return "2," + std::to_string(a12_) + ";" + std::to_string(a21_) + ",2";
}

std::string Root::str() const {
  return "(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
}

std::string to_string(RootClass c) {
  switch (c) {
  case RootClass::Pos1: return "POS1";
  case RootClass::Pos2: return "POS2";
  case RootClass::Neg1: return "NEG1";
  case RootClass::Neg2: return "NEG2";
  case RootClass::NotReal: return "NOT_REAL";
  }
  return "?";
}

bool WeylWord::reduced() const noexcept {
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (letters[k] != 1 && letters[k] != 2) return false;
    if (k > 0 && letters[k] == letters[k - 1]) return false;
  }
  return true;
}

WeylWord WeylWord::reduce() const {
  WeylWord out;
  for (int l : letters) {
    if (!out.letters.empty() && out.letters.back() == l)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

WeylWord WeylWord::alternating(int first, std::size_t n) {
  WeylWord w;
  int l = first;
  for (std::size_t k = 0; k < n; ++k) {
    w.letters.push_back(l);
    l = 3 - l;
  }
  return w;
}

std::string WeylWord::str() const {
  if (letters.empty()) return "1";
  std::string s;
  for (int l : letters) s += "w" + std::to_string(l);
  return s;
}

RootDatum::RootDatum(Gcm gcm, std::vector<std::vector<int>> coroots,
                     std::vector<std::vector<int>> pairings, bool sc)
  : gcm_(gcm), rank_y_(static_cast<int>(coroots.at(0).size())), coroots_(std::move(coroots)),
    pairings_(std::move(pairings)), simply_connected_(sc) {}

RootDatum RootDatum::simply_connected(const Gcm& gcm) {
  // Y has basis alpha_1^vee, alpha_2^vee; alpha_i(alpha_k^vee) = a_ki.
  std::vector<std::vector<int>> coroots{{1, 0}, {0, 1}};
  std::vector<std::vector<int>> pairings{{gcm.entry(1, 1), gcm.entry(2, 1)},
                                         {gcm.entry(1, 2), gcm.entry(2, 2)}};
  return RootDatum(gcm, std::move(coroots), std::move(pairings), true);
}

RootDatum RootDatum::make(const Gcm& gcm, std::vector<std::vector<int>> coroots,
                          std::vector<std::vector<int>> pairings) {
  if (coroots.size() != 2 || pairings.size() != 2 || coroots[0].empty())
    throw Error(errc::bad_root_datum, "root datum needs two coroots and two roots");
  const std::size_t n = coroots[0].size();
  for (const auto& v : coroots)
    if (v.size() != n) throw Error(errc::bad_root_datum, "coroot coordinate length mismatch");
  for (const auto& v : pairings)
    if (v.size() != n) throw Error(errc::bad_root_datum, "pairing row length mismatch");
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      long long s = 0;
      for (std::size_t k = 0; k < n; ++k)
        s += static_cast<long long>(pairings[i - 1][k]) * coroots[j - 1][k];
      if (s != gcm.entry(j, i))
        throw Error(errc::bad_root_datum, "axiom alpha_i(alpha_j^vee) = a_ji fails at i=" +
                                              std::to_string(i) + " j=" + std::to_string(j));
    }
  const bool sc = n == 2 && coroots[0] == std::vector<int>{1, 0} && coroots[1] == std::vector<int>{0, 1};
  return RootDatum(gcm, std::move(coroots), std::move(pairings), sc);
}

std::int64_t RootDatum::pairing(Root beta, int k) const {
  return beta.k1 * pairings_[0].at(k) + beta.k2 * pairings_[1].at(k);
}

Root reflect(const Gcm& gcm, int i, Root r) {
  // w_i(r) = r - r(alpha_i^vee) alpha_i, r(alpha_i^vee) = k1 a_i1 + k2 a_i2.
  const std::int64_t c = r.k1 * gcm.entry(i, 1) + r.k2 * gcm.entry(i, 2);
  if (i == 1) return {r.k1 - c, r.k2};
  return {r.k1, r.k2 - c};
}

std::array<std::array<std::int64_t, 2>, 2> reflection_matrix(const Gcm& gcm, int i) {
  const Root c1 = reflect(gcm, i, Root{1, 0});
  const Root c2 = reflect(gcm, i, Root{0, 1});
  return {{{c1.k1, c2.k1}, {c1.k2, c2.k2}}};
}

Root apply_word(const Gcm& gcm, const WeylWord& w, Root r) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = reflect(gcm, *it, r);
  return r;
}

std::vector<Root> inversion_sequence(const Gcm& gcm, const WeylWord& w) {
  if (!w.reduced()) throw Error(errc::not_reduced, "Weyl word " + w.str() + " is not reduced");
  std::vector<Root> out;
  out.reserve(w.length());
  WeylWord prefix;
  for (int l : w.letters) {
    out.push_back(apply_word(gcm, prefix, Root::simple(l)));
    prefix.letters.push_back(l);
  }
  return out;
}

std::vector<Root> positive_roots(const Gcm& gcm, int side, std::size_t count) {
  // Iterative: each root is the previous prefix applied to the next simple root.
  std::vector<Root> out;
  out.reserve(count);
  WeylWord prefix;
  int letter = side;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(apply_word(gcm, prefix, Root::simple(letter)));
    prefix.letters.push_back(letter);
    letter = 3 - letter;
  }
  return out;
}

namespace {

// Descends a positive vector to a simple root; nullopt if it is not real.
std::optional<RootDecomposition> descend_positive(const Gcm& gcm, Root r) {
  RootDecomposition d;
  while (true) {
    if (r == Root{1, 0}) { d.j = 1; return d; }
    if (r == Root{0, 1}) { d.j = 2; return d; }
    int chosen = 0;
    Root next{};
    for (int i = 1; i <= 2; ++i) {
      const Root cand = reflect(gcm, i, r);
      if (cand.height() < r.height()) {
        chosen = i;
        next = cand;
        break;
      }
    }
    if (chosen == 0 || !next.positive()) return std::nullopt;
    d.word.letters.push_back(chosen);
    r = next;
  }
}

} // namespace

std::optional<RootDecomposition> decompose_root(const Gcm& gcm, Root r) {
  if (r.positive()) return descend_positive(gcm, r);
  if (!r.negative()) return std::nullopt;
  auto d = descend_positive(gcm, -r);
  if (!d) return std::nullopt;
  // -alpha_j = w_j(alpha_j); w ends with a letter != j, so w w_j stays reduced.
  d->word.letters.push_back(d->j);
  return d;
}

RootClass classify_root(const Gcm& gcm, Root r) {
  if (r.positive()) {
    auto d = descend_positive(gcm, r);
    if (!d) return RootClass::NotReal;
    const int side = d->word.letters.empty() ? d->j : d->word.letters.front();
    return side == 1 ? RootClass::Pos1 : RootClass::Pos2;
  }
  if (r.negative()) {
    switch (classify_root(gcm, -r)) {
    case RootClass::Pos1: return RootClass::Neg1;
    case RootClass::Pos2: return RootClass::Neg2;
    default: return RootClass::NotReal;
    }
  }
  return RootClass::NotReal;
}

namespace {

int sign_from_formula(const Gcm& gcm, EpsilonPair eps, int i, Root alpha,
                      const RootDecomposition& d) {
  const int s = d.first_letter();
  if (i != s) return 1;
  const int t = 3 - s;
  const Root image = reflect(gcm, i, alpha);
  const std::int64_t kt = image.coeff(t);
  return (eps[i] == -1 && (std::llabs(kt) % 2 == 1)) ? -1 : 1;
}

} // namespace

int epsilon_sign(const Gcm& gcm, EpsilonPair eps, int i, Root alpha) {
  auto d = decompose_root(gcm, alpha);
  if (!d) throw Error(errc::not_real_root, alpha.str() + " is not a real root");
  if (!alpha.positive()) throw Error(errc::not_real_root, alpha.str() + " is not positive");
  if (d->word.letters.empty())
    throw Error(errc::simple_root_case,
                "eps_{i,alpha} is not defined by the formula for a simple root " + alpha.str());
  return sign_from_formula(gcm, eps, i, alpha, *d);
}

int relation_sign(const Gcm& gcm, EpsilonPair eps, int i, Root alpha) {
  auto d = decompose_root(gcm, alpha);
  if (!d) throw Error(errc::not_real_root, alpha.str() + " is not a real root");
  if (d->word.letters.empty()) return 1;
  return sign_from_formula(gcm, eps, i, alpha, *d);
}

SumWitness sum_of_roots_witness(const Gcm& gcm) {
  if (gcm.a12() != -1 || gcm.a21() > -2)
    throw Error(errc::wrong_matrix_shape, "witness needs a12 = -1 and a21 <= -2, got " + gcm.str());
  const Gcm frame = gcm.transposed();
  SumWitness w;
  w.sum = reflect(frame, 1, Root{0, 1});
  w.first = Root{1, 0};
  w.second = reflect(frame, 1, reflect(frame, 2, Root{1, 0}));
  w.identity_holds = (w.sum == w.first + w.second);
  w.sum_class = classify_root(frame, w.sum);
  w.first_class = classify_root(frame, w.first);
  w.second_class = classify_root(frame, w.second);
  return w;
}

} // namespace kmlat

#include "kmlat/lie_signs.hpp"

#include "kmlat/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace kmlat {

std::string BasisLabel::str() const {
  switch (kind) {
  case H: return "h" + std::to_string(index);
  case E: return "E" + degree.str() + "#" + std::to_string(index);
  case F: return "F" + degree.str() + "#" + std::to_string(index);
  }
  return "?";
}

namespace {

// Words over {1,2} of a fixed length n are keyed by the integer whose bit
// n-1-p is set iff letter p is 2; for equal lengths key order is lex order.
using AssocVec = std::map<std::uint64_t, Rational>;
using Coords = std::vector<Rational>;

void axpy(LieVector& y, const Rational& a, const LieVector& x) {
  if (a == 0) return;
  for (const auto& [k, v] : x) {
    auto it = y.try_emplace(k, 0).first;
    it->second += a * v;
    if (it->second == 0) y.erase(it);
  }
}

std::uint64_t word_key(const std::string& w) {
  std::uint64_t key = 0;
  for (char c : w) key = (key << 1) | (c == '2' ? 1u : 0u);
  return key;
}

std::string key_word(std::uint64_t key, std::size_t n) {
  std::string w(n, '1');
  for (std::size_t p = 0; p < n; ++p)
    if ((key >> (n - 1 - p)) & 1u) w[p] = '2';
  return w;
}

Root word_degree(const std::string& w) {
  Root r;
  for (char c : w) (c == '1' ? r.k1 : r.k2) += 1;
  return r;
}

bool is_lyndon(const std::string& w) {
  for (std::size_t k = 1; k < w.size(); ++k)
    if (!(w < w.substr(k))) return false;
  return !w.empty();
}

// Standard factorization w = uv with v the longest proper Lyndon suffix.
std::pair<std::string, std::string> standard_factorization(const std::string& w) {
  for (std::size_t k = 1; k < w.size(); ++k)
    if (is_lyndon(w.substr(k))) return {w.substr(0, k), w.substr(k)};
  throw std::logic_error("word of length < 2 has no factorization");
}

AssocVec commutator(const AssocVec& a, std::size_t la, const AssocVec& b, std::size_t lb) {
  AssocVec r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      const Rational c = ca * cb;
      r[(ka << lb) | kb] += c;
      r[(kb << la) | ka] -= c;
    }
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

// Fully reduced row echelon with an optional linear "track" per row.
struct Echelon {
  std::vector<Coords> rows;
  std::vector<std::size_t> pivots;
  std::vector<LieVector> track;

  bool add(Coords v, LieVector t) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Rational c = v[pivots[k]];
      if (c == 0) continue;
      for (std::size_t m = 0; m < v.size(); ++m) v[m] -= c * rows[k][m];
      axpy(t, -c, track[k]);
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return false;
    const Rational inv = Rational(1) / v[p];
    for (auto& x : v) x *= inv;
    for (auto& [k, x] : t) x *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Rational c = rows[k][p];
      if (c == 0) continue;
      for (std::size_t m = 0; m < v.size(); ++m) rows[k][m] -= c * v[m];
      axpy(track[k], -c, t);
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    track.push_back(std::move(t));
    return true;
  }
};

struct Piece {
  Root deg;
  std::size_t n = 0;
  std::vector<std::string> lyndon; // lex order
  std::map<std::string, int> lyndon_index;
  Echelon ideal;
  Echelon quotient; // ideal rows, then basis representatives (tracked)
  std::vector<int> reps;
  int e_offset = -1;
  int f_offset = -1;
};

using IndexKey = std::tuple<int, std::int64_t, std::int64_t, int>;

} // namespace

struct TruncatedKMAlgebra::Impl {
  Gcm gcm = Gcm::make(-1, -1);
  int H = 0;
  Window window = Window::Full;
  std::map<Root, Piece> pieces;
  std::vector<Root> order; // positive degrees by height
  std::vector<BasisLabel> labels;
  std::map<IndexKey, int> index;

  mutable std::recursive_mutex mu;
  mutable std::map<std::string, AssocVec> p_cache;
  mutable std::map<std::pair<int, int>, BracketResult> bb_cache;
  mutable std::map<std::pair<int, std::string>, LieVector> adf_cache;

  bool in_window(Root d) const noexcept {
    if (d.zero()) return true;
    if (!d.positive() && !d.negative()) return false;
    const auto a = std::llabs(d.k1), b = std::llabs(d.k2);
    if (a + b > H) return false;
    return window == Window::Full || std::min(a, b) <= 1;
  }

  const AssocVec& P(const std::string& w) const {
    auto it = p_cache.find(w);
    if (it != p_cache.end()) return it->second;
    AssocVec v;
    if (w.size() == 1) {
      v[word_key(w)] = 1;
    } else {
      auto [u, s] = standard_factorization(w);
      v = commutator(P(u), u.size(), P(s), s.size());
    }
    return p_cache.emplace(w, std::move(v)).first->second;
  }

  // Lie element of the free associative algebra -> Lyndon coordinates.
  Coords to_lyndon(const Piece& pc, AssocVec x) const {
    Coords c(pc.lyndon.size(), 0);
    while (!x.empty()) {
      const auto [key, coef] = *x.begin();
      const std::string w = key_word(key, pc.n);
      auto it = pc.lyndon_index.find(w);
      if (it == pc.lyndon_index.end()) throw std::logic_error("leading word " + w + " is not Lyndon");
      const Rational cf = coef;
      c[static_cast<std::size_t>(it->second)] += cf;
      for (const auto& [k, v] : P(w)) {
        auto jt = x.try_emplace(k, 0).first;
        jt->second -= cf * v;
        if (jt->second == 0) x.erase(jt);
      }
    }
    return c;
  }

  // Class of a Lyndon-coordinate vector in g_deg, as a global E-vector.
  LieVector class_of(const Piece& pc, const Coords& x) const {
    LieVector out;
    const auto& q = pc.quotient;
    Coords residual = x;
    for (std::size_t k = 0; k < q.rows.size(); ++k) {
      const Rational d = x[q.pivots[k]];
      if (d == 0) continue;
      for (std::size_t m = 0; m < residual.size(); ++m) residual[m] -= d * q.rows[k][m];
      for (const auto& [r, t] : q.track[k]) axpy(out, d * t, LieVector{{pc.e_offset + r, Rational(1)}});
    }
    for (const auto& r : residual)
      if (r != 0) throw std::logic_error("vector outside the Lie span at " + pc.deg.str());
    return out;
  }

  LieVector class_of_word(const std::string& w) const {
    const Piece& pc = pieces.at(word_degree(w));
    Coords u(pc.lyndon.size(), 0);
    u[static_cast<std::size_t>(pc.lyndon_index.at(w))] = 1;
    return class_of(pc, u);
  }

  const std::string& rep(int idx) const {
    const auto& l = labels.at(static_cast<std::size_t>(idx));
    const Root d = l.kind == BasisLabel::F ? -l.degree : l.degree;
    const Piece& pc = pieces.at(d);
    return pc.lyndon[static_cast<std::size_t>(pc.reps[static_cast<std::size_t>(l.index)])];
  }

  int theta_index(int idx) const {
    const auto& l = labels.at(static_cast<std::size_t>(idx));
    if (l.kind == BasisLabel::H) return idx;
    const Root d = l.kind == BasisLabel::F ? -l.degree : l.degree;
    const Piece& pc = pieces.at(d);
    return (l.kind == BasisLabel::E ? pc.f_offset : pc.e_offset) + l.index;
  }

  LieVector theta(const LieVector& x) const {
    LieVector out;
    for (const auto& [k, v] : x) {
      const bool h = labels[static_cast<std::size_t>(k)].kind == BasisLabel::H;
      out[theta_index(k)] = h ? Rational(-v) : v;
    }
    return out;
  }

  BracketResult ee(int a, int b) const {
    const auto& la = labels[static_cast<std::size_t>(a)];
    const auto& lb = labels[static_cast<std::size_t>(b)];
    const Root d = la.degree + lb.degree;
    if (!in_window(d)) return {{}, false};
    const std::string& wa = rep(a);
    const std::string& wb = rep(b);
    AssocVec c = commutator(P(wa), wa.size(), P(wb), wb.size());
    const Piece& pc = pieces.at(d);
    return {class_of(pc, to_lyndon(pc, std::move(c))), true};
  }

  // [f_i, P(w)] for a Lyndon word w.
  LieVector adf(int i, const std::string& w) const {
    auto key = std::make_pair(i, w);
    auto it = adf_cache.find(key);
    if (it != adf_cache.end()) return it->second;
    LieVector out;
    if (w.size() == 1) {
      if (w[0] - '0' == i) out[index.at(IndexKey{BasisLabel::H, 0, 0, i})] = -1;
    } else {
      auto [u, v] = standard_factorization(w);
      auto r1 = bracket(adf(i, u), class_of_word(v));
      auto r2 = bracket(class_of_word(u), adf(i, v));
      if (!r1.exact || !r2.exact) throw std::logic_error("inexact bracket inside ad f");
      out = r1.value;
      axpy(out, 1, r2.value);
    }
    return adf_cache.emplace(key, out).first->second;
  }

  // [E_a, F_b].
  BracketResult ef(int a, int b) const {
    const std::string& w = rep(b);
    if (w.size() == 1) {
      LieVector out;
      axpy(out, -1, adf(w[0] - '0', rep(a)));
      return {out, true};
    }
    auto [u, v] = standard_factorization(w);
    const LieVector A = theta(class_of_word(u));
    const LieVector B = theta(class_of_word(v));
    const LieVector x = TruncatedKMAlgebra::unit(a);
    auto xa = bracket(x, A);
    auto t1 = bracket(xa.value, B);
    auto xb = bracket(x, B);
    auto t2 = bracket(A, xb.value);
    BracketResult r{t1.value, xa.exact && t1.exact && xb.exact && t2.exact};
    axpy(r.value, 1, t2.value);
    return r;
  }

  BracketResult bb(int a, int b) const {
    auto key = std::make_pair(a, b);
    auto it = bb_cache.find(key);
    if (it != bb_cache.end()) return it->second;
    const auto& la = labels[static_cast<std::size_t>(a)];
    const auto& lb = labels[static_cast<std::size_t>(b)];
    BracketResult r;
    using K = BasisLabel;
    if (la.kind == K::H && lb.kind == K::H) {
      // abelian
    } else if (la.kind == K::H) {
      const int i = la.index;
      const std::int64_t c = lb.degree.k1 * gcm.entry(i, 1) + lb.degree.k2 * gcm.entry(i, 2);
      if (c != 0) r.value[b] = Rational(c);
    } else if (lb.kind == K::H) {
      r = bb(b, a);
      for (auto& [k, v] : r.value) v = -v;
    } else if (la.kind == K::E && lb.kind == K::E) {
      r = ee(a, b);
    } else if (la.kind == K::F && lb.kind == K::F) {
      r = ee(theta_index(a), theta_index(b));
      r.value = theta(r.value);
    } else if (la.kind == K::E) {
      r = ef(a, b);
    } else {
      r = ef(b, a);
      for (auto& [k, v] : r.value) v = -v;
    }
    return bb_cache.emplace(key, r).first->second;
  }

  BracketResult bracket(const LieVector& x, const LieVector& y) const {
    BracketResult out;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) {
        auto r = bb(a, b);
        if (!r.exact) out.exact = false;
        axpy(out.value, ca * cb, r.value);
      }
    return out;
  }

  void build_piece(Piece& pc) {
    std::string w = std::string(static_cast<std::size_t>(pc.deg.k1), '1') +
                    std::string(static_cast<std::size_t>(pc.deg.k2), '2');
    do {
      if (is_lyndon(w)) {
        pc.lyndon_index[w] = static_cast<int>(pc.lyndon.size());
        pc.lyndon.push_back(w);
      }
    } while (std::next_permutation(w.begin(), w.end()));

    const std::size_t m = pc.lyndon.size();
    auto add_assoc = [&](const AssocVec& x) { pc.ideal.add(to_lyndon(pc, x), {}); };

    // [e_k, I_{deg - alpha_k}].
    for (int k = 1; k <= 2; ++k) {
      const Root prev = pc.deg - Root::simple(k);
      if (!prev.positive()) continue;
      const Piece& pp = pieces.at(prev);
      const std::string ek(1, static_cast<char>('0' + k));
      std::vector<Coords> images; // [e_k, P(u)] per Lyndon u of prev
      for (const auto& u : pp.lyndon) images.push_back(to_lyndon(pc, commutator(P(ek), 1, P(u), u.size())));
      for (const auto& row : pp.ideal.rows) {
        Coords g(m, 0);
        for (std::size_t s = 0; s < row.size(); ++s)
          if (row[s] != 0)
            for (std::size_t t = 0; t < m; ++t) g[t] += row[s] * images[s][t];
        pc.ideal.add(std::move(g), {});
      }
    }
    // Serre elements ad(e_i)^{1-a_ij}(e_j).
    for (int i = 1; i <= 2; ++i) {
      const int j = 3 - i;
      const std::int64_t reps = 1 - gcm.entry(i, j);
      if (pc.deg != Root::simple(j) + Root{i == 1 ? reps : 0, i == 2 ? reps : 0}) continue;
      const std::string ei(1, static_cast<char>('0' + i));
      std::string ej(1, static_cast<char>('0' + j));
      AssocVec s = P(ej);
      std::size_t len = 1;
      for (std::int64_t r = 0; r < reps; ++r) {
        s = commutator(P(ei), 1, s, len);
        ++len;
      }
      add_assoc(s);
    }

    pc.quotient = pc.ideal;
    for (auto& t : pc.quotient.track) t.clear();
    for (std::size_t u = 0; u < m; ++u) {
      Coords x(m, 0);
      x[u] = 1;
      const int r = static_cast<int>(pc.reps.size());
      if (pc.quotient.add(std::move(x), LieVector{{r, Rational(1)}})) pc.reps.push_back(static_cast<int>(u));
    }
  }
};

int min_height(const Gcm& gcm) {
  return 2 * (1 + std::max(std::abs(gcm.a12()), std::abs(gcm.a21())));
}

TruncatedKMAlgebra build_truncated_algebra(const Gcm& gcm, int H, Window window) {
  if (H < min_height(gcm))
    throw Error(errc::height_too_small, "height bound " + std::to_string(H) + " < " +
                                            std::to_string(min_height(gcm)) + " for " + gcm.str());
  if (H > 62) throw std::invalid_argument("height bound above 62 is not supported");
  auto impl = std::make_shared<TruncatedKMAlgebra::Impl>();
  impl->gcm = gcm;
  impl->H = H;
  impl->window = window;
  for (int h = 1; h <= H; ++h)
    for (int k1 = h; k1 >= 0; --k1) {
      const Root d{k1, h - k1};
      if (!impl->in_window(d)) continue;
      Piece pc;
      pc.deg = d;
      pc.n = static_cast<std::size_t>(h);
      auto& slot = impl->pieces.emplace(d, std::move(pc)).first->second;
      impl->build_piece(slot);
      impl->order.push_back(d);
    }

  auto& labels = impl->labels;
  for (auto it = impl->order.rbegin(); it != impl->order.rend(); ++it) {
    Piece& pc = impl->pieces.at(*it);
    pc.f_offset = static_cast<int>(labels.size());
    for (std::size_t k = 0; k < pc.reps.size(); ++k)
      labels.push_back({BasisLabel::F, -pc.deg, static_cast<int>(k)});
  }
  for (int i = 1; i <= 2; ++i) labels.push_back({BasisLabel::H, Root{}, i});
  for (const Root& d : impl->order) {
    Piece& pc = impl->pieces.at(d);
    pc.e_offset = static_cast<int>(labels.size());
    for (std::size_t k = 0; k < pc.reps.size(); ++k)
      labels.push_back({BasisLabel::E, pc.deg, static_cast<int>(k)});
  }
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const auto& l = labels[k];
    impl->index[IndexKey{l.kind, l.degree.k1, l.degree.k2, l.index}] = static_cast<int>(k);
  }
  return TruncatedKMAlgebra(std::move(impl));
}

const Gcm& TruncatedKMAlgebra::gcm() const noexcept { return impl_->gcm; }
int TruncatedKMAlgebra::height_bound() const noexcept { return impl_->H; }
Window TruncatedKMAlgebra::window() const noexcept { return impl_->window; }
bool TruncatedKMAlgebra::in_window(Root d) const noexcept { return impl_->in_window(d); }

int TruncatedKMAlgebra::dim(Root d) const {
  if (d.zero()) return 2;
  const Root p = d.negative() ? -d : d;
  auto it = impl_->pieces.find(p);
  return it == impl_->pieces.end() ? 0 : static_cast<int>(it->second.reps.size());
}

std::vector<Root> TruncatedKMAlgebra::positive_degrees() const { return impl_->order; }
std::size_t TruncatedKMAlgebra::size() const noexcept { return impl_->labels.size(); }
const BasisLabel& TruncatedKMAlgebra::label(int idx) const { return impl_->labels.at(static_cast<std::size_t>(idx)); }

int TruncatedKMAlgebra::index(BasisLabel::Kind kind, Root degree, int k) const {
  auto it = impl_->index.find(IndexKey{kind, degree.k1, degree.k2, k});
  if (it == impl_->index.end()) throw std::out_of_range("no basis vector " + BasisLabel{kind, degree, k}.str());
  return it->second;
}

std::string TruncatedKMAlgebra::representative(int idx) const {
  if (label(idx).kind == BasisLabel::H) return {};
  return impl_->rep(idx);
}

BracketResult TruncatedKMAlgebra::bracket(int a, int b) const {
  std::lock_guard lock(impl_->mu);
  return impl_->bb(a, b);
}

BracketResult TruncatedKMAlgebra::bracket(const LieVector& x, const LieVector& y) const {
  std::lock_guard lock(impl_->mu);
  return impl_->bracket(x, y);
}

LieVector TruncatedKMAlgebra::theta(const LieVector& x) const { return impl_->theta(x); }

LieOperator LieOperator::identity(std::size_t n) {
  std::vector<std::optional<LieVector>> cols(n);
  for (std::size_t k = 0; k < n; ++k) cols[k] = TruncatedKMAlgebra::unit(static_cast<int>(k));
  return LieOperator(std::move(cols));
}

std::size_t LieOperator::certified_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(cols_.begin(), cols_.end(), [](const auto& c) { return c.has_value(); }));
}

std::optional<LieVector> LieOperator::try_apply(const LieVector& v) const {
  LieVector out;
  for (const auto& [k, c] : v) {
    const auto& col = column(k);
    if (!col) return std::nullopt;
    axpy(out, c, *col);
  }
  return out;
}

LieVector LieOperator::apply(const LieVector& v) const {
  auto r = try_apply(v);
  if (!r) throw Error(errc::truncation_loss, "image not certified exact at this height bound");
  return *r;
}

LieOperator LieOperator::compose(const LieOperator& rhs) const {
  std::vector<std::optional<LieVector>> cols(rhs.size());
  for (std::size_t k = 0; k < rhs.size(); ++k)
    if (rhs.cols_[k]) cols[k] = try_apply(*rhs.cols_[k]);
  return LieOperator(std::move(cols));
}

LieOperator ad(const TruncatedKMAlgebra& g, const LieVector& x) {
  std::vector<std::optional<LieVector>> cols(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    auto r = g.bracket(x, TruncatedKMAlgebra::unit(static_cast<int>(k)));
    if (r.exact) cols[k] = std::move(r.value);
  }
  return LieOperator(std::move(cols));
}

std::optional<LieVector> exp_ad_apply(const TruncatedKMAlgebra& g, const LieVector& x, const LieVector& v) {
  LieVector sum = v;
  LieVector term = v;
  const int cap = 2 * g.height_bound() + 4;
  for (int k = 1; k <= cap; ++k) {
    auto r = g.bracket(x, term);
    if (!r.exact) return std::nullopt;
    if (r.value.empty()) return sum;
    term.clear();
    axpy(term, Rational(1, k), r.value);
    axpy(sum, 1, term);
  }
  return std::nullopt;
}

LieOperator exp_ad(const TruncatedKMAlgebra& g, const LieVector& x) {
  std::vector<std::optional<LieVector>> cols(g.size());
  for (std::size_t k = 0; k < g.size(); ++k)
    cols[k] = exp_ad_apply(g, x, TruncatedKMAlgebra::unit(static_cast<int>(k)));
  return LieOperator(std::move(cols));
}

LieVector eta_apply(const TruncatedKMAlgebra& g, int i, const LieVector& v) {
  const LieVector e = TruncatedKMAlgebra::unit(g.e(i));
  const LieVector mf{{g.f(i), Rational(-1)}};
  auto s = exp_ad_apply(g, e, v);
  if (s) s = exp_ad_apply(g, mf, *s);
  if (s) s = exp_ad_apply(g, e, *s);
  if (!s)
    throw Error(errc::truncation_loss, "eta_" + std::to_string(i) + " image not certified at H=" +
                                           std::to_string(g.height_bound()));
  return *s;
}

LieOperator eta(const TruncatedKMAlgebra& g, int i) {
  std::vector<std::optional<LieVector>> cols(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    try {
      cols[k] = eta_apply(g, i, TruncatedKMAlgebra::unit(static_cast<int>(k)));
    } catch (const Error& err) {
      if (err.code() != errc::truncation_loss) throw;
    }
  }
  return LieOperator(std::move(cols));
}

namespace {

int sign_of_multiple(const LieVector& v, int idx, const std::string& what) {
  if (v.size() == 1 && v.begin()->first == idx) {
    const Rational& c = v.begin()->second;
    if (c == 1) return 1;
    if (c == -1) return -1;
  }
  throw std::logic_error(what + " is not +-1 times the generator");
}

std::vector<SignCertificate> signs_at(const Gcm& gcm, int H, Window window) {
  const auto g = build_truncated_algebra(gcm, H, window);
  std::vector<SignCertificate> out;
  for (int i = 1; i <= 2; ++i) {
    const int j = 3 - i;
    SignCertificate c;
    c.i = i;
    c.j = j;
    c.height = H;
    const auto ej = TruncatedKMAlgebra::unit(g.e(j));
    const auto fj = TruncatedKMAlgebra::unit(g.f(j));
    c.sign_e = sign_of_multiple(eta_apply(g, i, eta_apply(g, i, ej)), g.e(j), "eta^2(e_j)");
    c.sign_f = sign_of_multiple(eta_apply(g, i, eta_apply(g, i, fj)), g.f(j), "eta^2(f_j)");
    for (std::int64_t k = 0; k <= -gcm.entry(i, j); ++k) {
      const Root r = Root::simple(j) + Root{i == 1 ? k : 0, i == 2 ? k : 0};
      c.string.emplace_back(r, g.dim(r));
    }
    out.push_back(std::move(c));
  }
  return out;
}

} // namespace

EpsilonResult epsilon_pair(const Gcm& gcm, std::optional<int> H, Window window) {
  const int h0 = H.value_or(min_height(gcm));
  auto base = signs_at(gcm, h0, window);
  const auto next = signs_at(gcm, h0 + 1, window);
  for (std::size_t k = 0; k < base.size(); ++k)
    base[k].stable = base[k].sign_e == next[k].sign_e && base[k].sign_f == next[k].sign_f;
  EpsilonResult r;
  r.height = h0;
  r.eps = EpsilonPair{base[0].sign_e, base[1].sign_e};
  r.certificates = std::move(base);
  return r;
}

} // namespace kmlat

#include "garside/solver.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>

#include "garside/braid.hpp"
#include "garside/error.hpp"

namespace garside {

namespace {

void check_dims(const TupleElement& a, const Interval& iv)
{
  if (a.size() != iv.size())
    throw Error(Errc::dimension_mismatch, "tuple and interval dimensions differ");
}

bool bounded(std::int64_t hi) { return hi != kUnbounded; }

}  // namespace

Simple sliding_element(const TupleElement& a, const Interval& target)
{
  check_dims(a, target);
  const GarsideStructure& g = a.structure();
  Simple x = g.identity();
  for (std::size_t j = 0; j < a.size(); ++j) {
    const Element& e = a[j];
    std::int64_t raise = target.lo[j] - e.inf();
    std::int64_t lower = bounded(target.hi[j]) ? e.sup() - target.hi[j] : 0;
    if (raise < 0 || raise > 1 || lower < 0 || lower > 1)
      throw Error(Errc::bad_target, "coordinate " + std::to_string(j) +
                                        " is not a one-step shrink of [inf, sup]");
    if (raise) {
      Simple first = e.factors().empty() ? g.identity() : e.factors().front();
      x = g.join_left(x, g.tau_power(g.partial_inv(first), -e.inf()));
    }
    if (lower) {
      if (e.factors().empty())
        throw Error(Errc::zero_length_factor,
                    "coordinate " + std::to_string(j) + " has no factor to decycle");
      x = g.join_left(x, e.factors().back());
    }
  }
  return x;
}

namespace {

// Whether b = τ^j(a) for some j.
bool tau_translate(const TupleElement& a, const TupleElement& b)
{
  const GarsideStructure& g = a.structure();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].inf() != b[k].inf() || a[k].factors().size() != b[k].factors().size())
      return false;
  for (int j = 0; j < g.tau_order(); ++j) {
    bool same = true;
    for (std::size_t k = 0; k < a.size() && same; ++k) {
      const auto& fa = a[k].factors();
      const auto& fb = b[k].factors();
      for (std::size_t i = 0; i < fa.size() && same; ++i)
        same = g.tau_power(fa[i], j) == fb[i];
    }
    if (same) return true;
  }
  return false;
}

}  // namespace

ConjResult conj_to_interval(const TupleElement& a, const Interval& iv,
                            std::int64_t max_iter)
{
  check_dims(a, iv);
  const GarsideStructure& g = a.structure();
  ConjResult out{Element(a.structure_ptr()), false, a, 0};
  TupleElement& c = out.result;
  // Each step is τ-equivariant and τ preserves the interval, so once a tuple
  // recurs up to τ the iteration can never succeed.
  std::deque<TupleElement> recent;
  while (!in_interval(c, iv) && out.iterations < max_iter) {
    if (std::any_of(recent.begin(), recent.end(),
                    [&](const TupleElement& p) { return tau_translate(p, c); }))
      break;
    recent.push_back(c);
    if (recent.size() > 4) recent.pop_front();
    Simple h = g.identity();
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Element& e = c[k];
      if (e.inf() < iv.lo[k]) {
        Simple first = e.factors().empty() ? g.identity() : e.factors().front();
        h = g.join_left(h, g.tau_power(g.partial_inv(first), -e.inf()));
      }
      if (bounded(iv.hi[k]) && iv.hi[k] < e.sup() && !e.factors().empty())
        h = g.join_left(h, e.factors().back());
    }
    if (g.is_identity(h)) break;
    out.y.left_multiply(h);
    c = conjugate_by_simple_inverse(c, h);
    ++out.iterations;
  }
  out.success = in_interval(c, iv);
  return out;
}

namespace {

// Per-coordinate data for the membership test v^s ∈ [p,q]:
// v = Δ^p w with w = Δ^d F, and Δ^q v^{-1} = Δ^e G (both positive).
struct CoordData {
  std::int64_t p, q;
  std::int64_t d, e;
  bool sup_side;
  std::vector<Simple> f, g;
};

class MinimalSimples {
 public:
  MinimalSimples(const TupleElement& v, const Interval& iv, Side side)
      : g_(v.structure()), side_(side)
  {
    check_dims(v, iv);
    if (!in_interval(v, iv))
      throw Error(Errc::not_in_interval, "tuple is not inside the interval");
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Element& x = v[i];
      CoordData c;
      c.p = iv.lo[i];
      c.q = iv.hi[i];
      c.d = x.inf() - c.p;
      c.sup_side = bounded(c.q);
      c.e = c.sup_side ? c.q - x.sup() : 1;
      c.f = x.factors();
      if (c.sup_side && c.e == 0) c.g = inverse(x).factors();
      if (side == Side::left) {
        // z = τ^{-p}(w) and v^{-1}Δ^q = Δ^e τ^q(G)
        for (Simple& s : c.f)
          s = g_.tau_power(s, -c.p);
        for (Simple& s : c.g)
          s = g_.tau_power(s, c.q);
      }
      coords_.push_back(std::move(c));
    }
  }

  Simple minimal(int atom) const
  {
    return *minimal(atom, [](const Simple&) { return false; });
  }

  // Gives up as soon as the growing candidate satisfies `abandon`.
  template <class Pred>
  std::optional<Simple> minimal(int atom, Pred abandon) const
  {
    Simple s = g_.atom(atom);
    for (;;) {
      Simple step = side_ == Side::right ? right_step(s) : left_step(s);
      if (g_.is_identity(step)) return s;
      auto next = side_ == Side::right ? g_.product_if_simple(s, step)
                                       : g_.product_if_simple(step, s);
      if (!next) throw std::logic_error("minimal simple search left the simple set");
      s = *next;
      if (abandon(s)) return std::nullopt;
    }
  }

 private:
  // (A·s)\t where A = Δ^d·F: Δ\t = 1, and (XY)\t = Y\(X\t).
  Simple right_residue(const Simple& s, const Simple& t, std::int64_t d,
                       const std::vector<Simple>& f) const
  {
    if (d > 0) return g_.identity();
    Simple u = t;
    for (const Simple& x : f) {
      if (g_.is_identity(u)) break;
      u = g_.complement_right(x, u);
    }
    return g_.complement_right(s, u);
  }

  // t/(s·A) where A = Δ^d·F: t/Δ = 1, and t/(XY) = (t/Y)/X.
  Simple left_residue(const Simple& s, const Simple& t, std::int64_t d,
                      const std::vector<Simple>& f) const
  {
    if (d > 0) return g_.identity();
    Simple u = t;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
      if (g_.is_identity(u)) break;
      u = g_.complement_left(u, *it);
    }
    return g_.complement_left(u, s);
  }

  Simple right_step(const Simple& s) const
  {
    Simple total = g_.identity();
    for (const CoordData& c : coords_) {
      total = g_.join_right(total, right_residue(s, g_.tau_power(s, c.p), c.d, c.f));
      if (c.sup_side)
        total = g_.join_right(total, right_residue(s, g_.tau_power(s, -c.q), c.e, c.g));
    }
    return total;
  }

  Simple left_step(const Simple& s) const
  {
    Simple total = g_.identity();
    for (const CoordData& c : coords_) {
      total = g_.join_left(total, left_residue(s, g_.tau_power(s, -c.p), c.d, c.f));
      if (c.sup_side)
        total = g_.join_left(total, left_residue(s, g_.tau_power(s, c.q), c.e, c.g));
    }
    return total;
  }

  const GarsideStructure& g_;
  Side side_;
  std::vector<CoordData> coords_;
};

}  // namespace

Simple min_simple(const TupleElement& v, const Interval& iv, int atom, Side side)
{
  if (atom < 0 || atom >= v.structure().n_atoms())
    throw Error(Errc::index_out_of_range, "atom index out of range");
  return MinimalSimples(v, iv, side).minimal(atom);
}

std::vector<Simple> minimal_simple_set(const TupleElement& v, const Interval& iv,
                                       Side side)
{
  const GarsideStructure& g = v.structure();
  MinimalSimples ms(v, iv, side);
  const int m = g.n_atoms();
  std::vector<bool> kept(static_cast<std::size_t>(m));
  std::vector<Simple> out;
  for (int i = 0; i < m; ++i) {
    // The search only grows its candidate, so a reason to drop the final
    // result can be acted on as soon as it appears.
    auto dropped = [&](const Simple& r) {
      auto divisors = side == Side::right ? g.left_atom_divisors(r) : g.right_atom_divisors(r);
      for (int j = 0; j < m; ++j) {
        if (j == i || !divisors[static_cast<std::size_t>(j)]) continue;
        if (j > i || kept[static_cast<std::size_t>(j)]) return true;
      }
      return false;
    };
    if (auto r = ms.minimal(i, dropped)) {
      kept[static_cast<std::size_t>(i)] = true;
      out.push_back(*r);
    }
  }
  return out;
}

OrbitSet::OrbitSet(TupleElement base, Interval iv, Element root_witness, bool mod_tau)
    : base_(std::move(base)),
      interval_(std::move(iv)),
      root_witness_(std::move(root_witness)),
      mod_tau_(mod_tau)
{
}

OrbitSet::OrbitSet(const OrbitSet& other)
    : base_(other.base_),
      interval_(other.interval_),
      root_witness_(other.root_witness_),
      mod_tau_(other.mod_tau_),
      truncated_(other.truncated_),
      keys_(other.keys_),
      nodes_(other.nodes_),
      members_(other.members_)
{
  rebuild_index();
}

OrbitSet& OrbitSet::operator=(const OrbitSet& other)
{
  if (this != &other) {
    OrbitSet copy(other);
    *this = std::move(copy);
  }
  return *this;
}

void OrbitSet::rebuild_index()
{
  index_.clear();
  for (std::size_t i = 0; i < members_.size(); ++i)
    index_.emplace(keys_[members_[i]], static_cast<std::uint32_t>(i));
}

std::pair<std::uint32_t, bool> OrbitSet::add_node(std::string key, Node node, bool member)
{
  if (member) {
    auto it = index_.find(key);
    if (it != index_.end()) return {members_[it->second], false};
  }
  auto id = static_cast<std::uint32_t>(nodes_.size());
  keys_.push_back(std::move(key));
  nodes_.push_back(node);
  if (member) {
    index_.emplace(keys_.back(), static_cast<std::uint32_t>(members_.size()));
    members_.push_back(id);
  }
  return {id, true};
}

void OrbitSet::add_member(std::uint32_t node)
{
  index_.emplace(keys_[node], static_cast<std::uint32_t>(members_.size()));
  members_.push_back(node);
}

TupleElement OrbitSet::member(std::size_t i) const
{
  return decode_tuple(base_.structure_ptr(), keys_[members_.at(i)]);
}

std::string_view OrbitSet::member_key(std::size_t i) const
{
  return keys_[members_.at(i)];
}

Element OrbitSet::witness(std::size_t i) const
{
  std::vector<std::uint32_t> chain;
  for (std::uint32_t n = members_.at(i); n != 0; n = nodes_[n].parent)
    chain.push_back(n);
  Element w = root_witness_;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    w.right_multiply(nodes_[*it].edge);
    w.right_multiply_delta_power(nodes_[*it].shift);
  }
  return w;
}

std::optional<std::size_t> OrbitSet::find(const TupleElement& v) const
{
  std::string key = mod_tau_ ? tau_representative(v).first.key() : v.key();
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> OrbitSet::sorted_keys() const
{
  std::vector<std::string> out;
  out.reserve(members_.size());
  for (std::uint32_t m : members_)
    out.push_back(keys_[m]);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<TupleElement, std::int64_t> tau_representative(const TupleElement& v)
{
  TupleElement best = v;
  std::string best_key = v.key();
  std::int64_t best_k = 0;
  for (int k = 1; k < v.structure().tau_order(); ++k) {
    TupleElement t = tau_power(v, k);
    std::string key = t.key();
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(t);
      best_k = k;
    }
  }
  return {std::move(best), best_k};
}

struct OrbitBuilder {
// Closure starting from `start` = base^start_witness.
static OrbitSet orbit_from(const TupleElement& base, const TupleElement& start,
                    const Element& start_witness, const Interval& iv,
                    const OrbitOptions& opts, std::string_view stop_key)
{
  check_dims(start, iv);
  if (!in_interval(start, iv))
    throw Error(Errc::not_in_interval, "tuple is not inside the interval");
  const StructurePtr& g = start.structure_ptr();
  TupleElement root = start;
  Element root_witness = start_witness;
  if (opts.mod_tau) {
    auto [rep, k] = tau_representative(start);
    root = std::move(rep);
    root_witness.right_multiply_delta_power(k);
  }
  OrbitSet set(base, iv, root_witness, opts.mod_tau);
  std::string root_key = root.key();
  bool done = root_key == stop_key;
  if (opts.cap == 0) {
    set.truncated_ = true;
    return set;
  }
  set.add_node(std::move(root_key), {0, g->identity(), 0}, true);

  std::vector<Simple> all;
  if (!opts.use_minimal) {
    for (const Simple& s : enumerate_simples(*g))
      if (!g->is_identity(s)) all.push_back(s);
  }
  for (std::size_t head = 0; head < set.nodes_.size() && !done; ++head) {
    TupleElement u = decode_tuple(g, set.keys_[head]);
    std::vector<Simple> candidates =
        opts.use_minimal ? minimal_simple_set(u, iv, Side::right) : std::vector<Simple>{};
    const std::vector<Simple>& edges = opts.use_minimal ? candidates : all;
    for (const Simple& s : edges) {
      TupleElement v = conjugate_by_simple(u, s);
      if (!opts.use_minimal && !in_interval(v, iv)) continue;
      std::int64_t shift = 0;
      if (opts.mod_tau) {
        auto [rep, k] = tau_representative(v);
        v = std::move(rep);
        shift = k;
      }
      std::string key = v.key();
      if (set.index_.count(key)) continue;
      if (set.members_.size() >= opts.cap) {
        set.truncated_ = true;
        return set;
      }
      bool stop = key == stop_key;
      set.add_node(std::move(key),
                   {static_cast<std::uint32_t>(head), s, static_cast<std::int32_t>(shift)}, true);
      if (stop) {
        done = true;
        break;
      }
    }
  }
  return set;
}
};

OrbitSet orbit_in_interval(const TupleElement& a, const Interval& iv,
                           const OrbitOptions& opts, std::string_view stop_key)
{
  return OrbitBuilder::orbit_from(a, a, Element(a.structure_ptr()), iv, opts, stop_key);
}

OrbitSet mod_tau_reduce(const OrbitSet& set)
{
  OrbitSet out(set);
  if (set.mod_tau_) return out;
  out.mod_tau_ = true;
  out.members_.clear();
  out.index_.clear();
  for (std::size_t i = 0; i < set.members_.size(); ++i) {
    auto [rep, k] = tau_representative(set.member(i));
    std::string key = rep.key();
    if (key == set.member_key(i)) {
      out.add_member(set.members_[i]);
    } else if (!set.index_.count(key)) {
      // The representative itself was cut off by the cap.
      out.add_node(std::move(key), {set.members_[i], rep.structure().identity(),
                                    static_cast<std::int32_t>(k)},
                   true);
    }
  }
  return out;
}

namespace {

struct LmiState {
  TupleElement cur;
  Element conj;  // base^conj = cur
  std::int64_t budget;

  bool attempt(std::size_t len, const Interval& target)
  {
    ConjResult res = conj_to_interval(cur.prefix(len), target, budget);
    if (!res.success) return false;
    if (res.iterations == 0) return true;
    Element yi = inverse(res.y);
    cur = conjugate(cur, yi);
    conj = multiply(conj, yi);
    return true;
  }
};

template <class T>
std::vector<T> head(const std::vector<T>& v, std::size_t n)
{
  return std::vector<T>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
}

MinimalIntervalResult lmi(const TupleElement& a, IntervalVariant variant, bool sup_phase)
{
  const std::size_t r = a.size();
  LmiState st{a, Element(a.structure_ptr()), a.structure().delta_atom_length() - 1};
  std::vector<std::int64_t> lo = a.infs();
  std::vector<std::int64_t> hi(r, kUnbounded);

  auto raise_inf = [&](std::size_t i) {
    for (;;) {
      std::vector<std::int64_t> l = head(lo, i + 1), h(i + 1, kUnbounded);
      if (variant == IntervalVariant::lex)
        std::copy(hi.begin(), hi.begin() + static_cast<std::ptrdiff_t>(i), h.begin());
      l[i] = st.cur[i].inf() + 1;
      if (!st.attempt(i + 1, Interval(l, h))) break;
    }
    lo[i] = st.cur[i].inf();
  };
  auto lower_sup = [&](std::size_t i, std::size_t len) {
    hi[i] = st.cur[i].sup();
    while (hi[i] > lo[i]) {
      std::vector<std::int64_t> h = head(hi, len);
      h[i] = hi[i] - 1;
      if (!st.attempt(len, Interval(head(lo, len), h))) break;
      hi[i] = st.cur[i].sup();
    }
  };

  if (variant == IntervalVariant::lex) {
    for (std::size_t i = 0; i < r; ++i) {
      raise_inf(i);
      if (sup_phase) lower_sup(i, i + 1);
    }
  } else {
    for (std::size_t i = 0; i < r; ++i)
      raise_inf(i);
    if (sup_phase)
      for (std::size_t i = 0; i < r; ++i)
        lower_sup(i, r);
  }
  Interval iv(lo, hi);
  if (!in_interval(st.cur, iv))
    throw std::logic_error("minimal interval search lost its conjugate");
  return {iv, st.conj, variant};
}

}  // namespace

MinimalIntervalResult lex_minimal_interval(const TupleElement& a, IntervalVariant variant)
{
  return lmi(a, variant, true);
}

MinimalIntervalResult invariant_interval(const TupleElement& a, InvariantKind kind)
{
  switch (kind) {
    case InvariantKind::lsss: return lmi(a, IntervalVariant::lex, true);
    case InvariantKind::lsss_prime: return lmi(a, IntervalVariant::lex_prime, true);
    case InvariantKind::lss: return lmi(a, IntervalVariant::lex_prime, false);
  }
  throw std::logic_error("unknown invariant kind");
}

OrbitSet invariant_set(const TupleElement& a, InvariantKind kind, const OrbitOptions& opts)
{
  MinimalIntervalResult res = invariant_interval(a, kind);
  return OrbitBuilder::orbit_from(a, conjugate(a, res.conjugator), res.conjugator, res.interval, opts, {});
}

ScpResult scp_search(const TupleElement& a, const TupleElement& c, const ScpOptions& opts)
{
  if (a.structure_ptr() != c.structure_ptr())
    throw Error(Errc::structure_mismatch, "tuples from different structures");
  if (a.size() != c.size())
    throw Error(Errc::dimension_mismatch, "tuples of different length");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (exponent_sum(a[i]) != exponent_sum(c[i])) return {ScpOutcome::not_conjugate, {}, 0};

  MinimalIntervalResult ra = invariant_interval(a, opts.kind);
  MinimalIntervalResult rc = invariant_interval(c, opts.kind);
  if (ra.interval != rc.interval) return {ScpOutcome::not_conjugate, {}, 0};

  TupleElement cm = conjugate(c, rc.conjugator);
  std::int64_t shift = 0;
  if (opts.orbit.mod_tau) {
    auto [rep, k] = tau_representative(cm);
    cm = std::move(rep);
    shift = k;
  }
  OrbitSet set = OrbitBuilder::orbit_from(a, conjugate(a, ra.conjugator), ra.conjugator, ra.interval,
                            opts.orbit, cm.key());
  auto idx = set.find(cm);
  if (!idx)
    return {set.truncated() ? ScpOutcome::unknown : ScpOutcome::not_conjugate, {}, set.size()};

  // a^w = cm = c^{X_c Δ^shift}
  Element x = set.witness(*idx);
  x.right_multiply_delta_power(-shift);
  x = multiply(x, inverse(rc.conjugator));
  if (!(conjugate(a, x) == c)) throw std::logic_error("conjugacy witness failed to verify");
  return {ScpOutcome::conjugate, x, set.size()};
}

ScpOutcome scp_decide(const TupleElement& a, const TupleElement& c, const ScpOptions& opts)
{
  return scp_search(a, c, opts).outcome;
}

const char* to_string(ScpOutcome o)
{
  switch (o) {
    case ScpOutcome::conjugate: return "conjugate";
    case ScpOutcome::not_conjugate: return "not_conjugate";
    case ScpOutcome::unknown: return "unknown";
  }
  return "?";
}

const char* to_string(InvariantKind k)
{
  switch (k) {
    case InvariantKind::lss: return "lss";
    case InvariantKind::lsss: return "lsss";
    case InvariantKind::lsss_prime: return "lsssp";
  }
  return "?";
}

}  // namespace garside

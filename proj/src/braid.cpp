#include "garside/braid.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>

#include "garside/error.hpp"

namespace garside {

namespace {

void check_strands(int n)
{
  if (n < 2 || n > kMaxStrands)
    throw Error(Errc::bad_parameter,
                "strand count must be in [2, " + std::to_string(kMaxStrands) +
                    "], got " + std::to_string(n));
}

Simple transposition(int n, int a, int b)
{
  Simple s = Simple::identity(n);
  s[a] = static_cast<std::uint8_t>(b);
  s[b] = static_cast<std::uint8_t>(a);
  return s;
}

class ArtinStructure final : public GarsideStructure {
 public:
  explicit ArtinStructure(int n)
      : GarsideStructure(n, half_twist(n), n * (n - 1) / 2)
  {
    for (int i = 0; i + 1 < n; ++i)
      atoms_.push_back(transposition(n, i, i + 1));
    finish_construction();
  }

  std::string_view name() const override { return "artin"; }
  int n_atoms() const override { return strands() - 1; }
  Simple atom(int i) const override { return atoms_[static_cast<std::size_t>(i)]; }

  std::optional<Simple> product_if_simple(const Simple& s,
                                          const Simple& t) const override
  {
    // No pair of strands may cross in both factors.
    const int n = strands();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (s[i] > s[j] && t[s[i]] < t[s[j]]) return std::nullopt;
    return s.then(t);
  }

  bool left_divides(const Simple& s, const Simple& t) const override
  {
    return inversion_count(s) + inversion_count(s.left_quotient(t)) ==
           inversion_count(t);
  }

  bool right_divides(const Simple& t, const Simple& s) const override
  {
    return inversion_count(t.right_quotient(s)) + inversion_count(s) ==
           inversion_count(t);
  }

  int atom_length(const Simple& s) const override { return inversion_count(s); }

  std::vector<bool> left_atom_divisors(const Simple& s) const override
  {
    std::vector<bool> out(static_cast<std::size_t>(n_atoms()));
    for (int i = 0; i + 1 < strands(); ++i)
      out[static_cast<std::size_t>(i)] = s[i] > s[i + 1];
    return out;
  }

  std::vector<bool> right_atom_divisors(const Simple& s) const override
  {
    return left_atom_divisors(s.inverse());
  }

  // Peel σ_i off both permutations while both start with a crossing at i.
  Simple meet_left(const Simple& s, const Simple& t) const override
  {
    const int n = strands();
    Simple a = s, b = t;
    std::array<int, 2 * kMaxStrands> stack{};
    int top = 0;
    for (int i = 0; i + 1 < n; ++i)
      stack[static_cast<std::size_t>(top++)] = i;
    while (top > 0) {
      int i = stack[static_cast<std::size_t>(--top)];
      if (a[i] > a[i + 1] && b[i] > b[i + 1]) {
        std::swap(a[i], a[i + 1]);
        std::swap(b[i], b[i + 1]);
        if (i > 0) stack[static_cast<std::size_t>(top++)] = i - 1;
        if (i + 2 < n) stack[static_cast<std::size_t>(top++)] = i + 1;
      }
    }
    return s.right_quotient(a);
  }

  // Word reversal maps a permutation braid to the braid of the inverse.
  Simple meet_right(const Simple& s, const Simple& t) const override
  {
    return meet_left(s.inverse(), t.inverse()).inverse();
  }

  std::string encode(const Simple& s) const override
  {
    std::string out(static_cast<std::size_t>(strands()), '\0');
    for (int i = 0; i < strands(); ++i)
      out[static_cast<std::size_t>(i)] = static_cast<char>(s[i]);
    return out;
  }

  Simple decode(std::string_view bytes) const override
  {
    if (static_cast<int>(bytes.size()) != strands())
      throw Error(Errc::parse_error, "bad simple encoding length");
    std::vector<int> images(bytes.begin(), bytes.end());
    return Simple::from_images(images);
  }

  double predicted_simple_count() const override
  {
    return std::tgamma(strands() + 1.0);
  }

 private:
  static Simple half_twist(int n)
  {
    check_strands(n);
    Simple d = Simple::identity(n);
    for (int i = 0; i < n; ++i)
      d[i] = static_cast<std::uint8_t>(n - 1 - i);
    return d;
  }

  std::vector<Simple> atoms_;
};

class BklStructure final : public GarsideStructure {
 public:
  using Labels = std::array<std::uint8_t, kMaxStrands>;

  explicit BklStructure(int n) : GarsideStructure(n, cycle(n), n - 1)
  {
    for (int t = 2; t <= n; ++t)
      for (int s = 1; s < t; ++s)
        atoms_.push_back(transposition(n, s - 1, t - 1));
    finish_construction();
  }

  std::string_view name() const override { return "bkl"; }
  int n_atoms() const override { return static_cast<int>(atoms_.size()); }
  Simple atom(int i) const override { return atoms_[static_cast<std::size_t>(i)]; }

  std::optional<Simple> product_if_simple(const Simple& s,
                                          const Simple& t) const override
  {
    Simple p = s.then(t);
    if (length(s) + length(t) != length(p)) return std::nullopt;
    if (length(p) + length(p.left_quotient(delta())) != strands() - 1)
      return std::nullopt;
    return p;
  }

  // On simples both divisibility orders are refinement of partitions.
  bool left_divides(const Simple& s, const Simple& t) const override
  {
    Labels ls = labels(s), lt = labels(t);
    for (int i = 0; i < strands(); ++i)
      if (lt[static_cast<std::size_t>(i)] != lt[ls[static_cast<std::size_t>(i)]])
        return false;
    return true;
  }

  bool right_divides(const Simple& t, const Simple& s) const override
  {
    return left_divides(s, t);
  }

  int atom_length(const Simple& s) const override { return length(s); }

  std::vector<bool> left_atom_divisors(const Simple& s) const override
  {
    Labels l = labels(s);
    std::vector<bool> out(atoms_.size());
    std::size_t k = 0;
    for (int t = 1; t < strands(); ++t)
      for (int u = 0; u < t; ++u)
        out[k++] = l[static_cast<std::size_t>(t)] == l[static_cast<std::size_t>(u)];
    return out;
  }

  std::vector<bool> right_atom_divisors(const Simple& s) const override
  {
    return left_atom_divisors(s);
  }

  Simple meet_left(const Simple& s, const Simple& t) const override
  {
    return block_meet(s, t);
  }

  Simple meet_right(const Simple& s, const Simple& t) const override
  {
    return block_meet(s, t);
  }

  std::string encode(const Simple& s) const override
  {
    Labels l = labels(s);
    return std::string(l.begin(), l.begin() + strands());
  }

  Simple decode(std::string_view bytes) const override
  {
    if (static_cast<int>(bytes.size()) != strands())
      throw Error(Errc::parse_error, "bad simple encoding length");
    Labels l{};
    for (int i = 0; i < strands(); ++i) {
      auto v = static_cast<std::uint8_t>(bytes[static_cast<std::size_t>(i)]);
      if (v > i || (v < i && l[v] != v))
        throw Error(Errc::parse_error, "bad block-minimum labels");
      l[static_cast<std::size_t>(i)] = v;
    }
    Simple s = from_labels(l);
    if (length(s) + length(s.left_quotient(delta())) != strands() - 1)
      throw Error(Errc::parse_error, "crossing partition");
    return s;
  }

  double predicted_simple_count() const override
  {
    // Catalan(N) = C(2N, N) / (N + 1)
    const int n = strands();
    return std::exp(std::lgamma(2.0 * n + 1) - 2 * std::lgamma(n + 1.0)) /
           (n + 1);
  }

 private:
  static Simple cycle(int n)
  {
    check_strands(n);
    Simple d = Simple::identity(n);
    for (int i = 0; i < n; ++i)
      d[i] = static_cast<std::uint8_t>((i + 1) % n);
    return d;
  }

  int length(const Simple& s) const { return strands() - cycle_count(s); }

  // Each position labelled by the minimum of its cycle.
  Labels labels(const Simple& s) const
  {
    Labels l{};
    std::array<bool, kMaxStrands> seen{};
    for (int i = 0; i < strands(); ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = s[j]) {
        seen[static_cast<std::size_t>(j)] = true;
        l[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(i);
      }
    }
    return l;
  }

  Simple from_labels(const Labels& l) const
  {
    Simple s = Simple::identity(strands());
    std::array<int, kMaxStrands> next_up;
    next_up.fill(-1);
    for (int i = strands() - 1; i >= 0; --i) {
      std::uint8_t b = l[static_cast<std::size_t>(i)];
      int up = next_up[b];
      s[i] = static_cast<std::uint8_t>(up < 0 ? b : up);
      next_up[b] = i;
    }
    return s;
  }

  // Per position, the bit set of its cycle. Cycles increase except for the
  // wrap from their maximum, so a descending pass collects each position's
  // upper tail and an ascending pass copies the minimum's full set forward.
  std::array<std::uint32_t, kMaxStrands> block_masks(const Simple& s) const
  {
    const int n = strands();
    std::array<std::uint32_t, kMaxStrands> tail{}, m{};
    for (int i = n - 1; i >= 0; --i)
      tail[static_cast<std::size_t>(i)] =
          (1u << i) | (s[i] > i ? tail[s[i]] : 0u);
    for (int i = 0; i < n; ++i) {
      auto k = static_cast<std::size_t>(i);
      if (!m[k]) m[k] = tail[k];
      if (s[i] > i) m[s[i]] = m[k];
    }
    return m;
  }

  // Common refinement: each position moves to the next position of its
  // intersected block, wrapping around to the smallest.
  Simple block_meet(const Simple& s, const Simple& t) const
  {
    auto ms = block_masks(s), mt = block_masks(t);
    Simple out = s;
    for (int i = 0; i < strands(); ++i) {
      std::uint32_t b = ms[static_cast<std::size_t>(i)] & mt[static_cast<std::size_t>(i)];
      std::uint32_t above = i + 1 < 32 ? b & ~((2u << i) - 1) : 0u;
      out[i] = static_cast<std::uint8_t>(std::countr_zero(above ? above : b));
    }
    return out;
  }

  std::vector<Simple> atoms_;
};

}  // namespace

StructurePtr artin_structure(int n)
{
  check_strands(n);
  return std::make_shared<const ArtinStructure>(n);
}

StructurePtr bkl_structure(int n)
{
  check_strands(n);
  return std::make_shared<const BklStructure>(n);
}

StructurePtr make_structure(std::string_view token, int n)
{
  if (token == "artin") return artin_structure(n);
  if (token == "bkl") return bkl_structure(n);
  throw Error(Errc::bad_parameter, "unknown structure '" + std::string(token) + "'");
}

int bkl_atom_index(int t, int s)
{
  if (!(t > s && s >= 1))
    throw Error(Errc::index_out_of_range, "band generator needs t > s >= 1");
  return (t - 1) * (t - 2) / 2 + (s - 1);
}

std::pair<int, int> bkl_atom_strands(int index)
{
  int t = 2;
  while ((t - 1) * t / 2 <= index)
    ++t;
  return {t, index - (t - 1) * (t - 2) / 2 + 1};
}

std::vector<Simple> enumerate_simples(const GarsideStructure& g)
{
  if (g.predicted_simple_count() > 1e6)
    throw Error(Errc::too_large, "simple set too large to enumerate");
  std::unordered_set<Simple, SimpleHash> seen{g.identity()};
  std::deque<Simple> queue{g.identity()};
  while (!queue.empty()) {
    Simple s = queue.front();
    queue.pop_front();
    for (int i = 0; i < g.n_atoms(); ++i)
      if (auto p = g.product_if_simple(s, g.atom(i)); p && seen.insert(*p).second)
        queue.push_back(*p);
  }
  std::vector<Simple> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [&](const Simple& a, const Simple& b) {
    return g.encode(a) < g.encode(b);
  });
  return out;
}

}  // namespace garside

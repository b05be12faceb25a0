#include "garside/structure.hpp"

#include "garside/error.hpp"

namespace garside {

GarsideStructure::GarsideStructure(int strands, Simple delta,
                                   int delta_atom_length)
    : strands_(strands),
      delta_(delta),
      identity_(Simple::identity(strands)),
      delta_atom_length_(delta_atom_length)
{
  delta_powers_.push_back(identity_);
  for (Simple p = delta_; p != identity_; p = p.then(delta_))
    delta_powers_.push_back(p);
  delta_perm_order_ = static_cast<int>(delta_powers_.size());
}

void GarsideStructure::finish_construction()
{
  tau_order_ = delta_perm_order_;
  for (int k = 1; k < delta_perm_order_; ++k) {
    bool fixes_all = true;
    for (int i = 0; i < n_atoms() && fixes_all; ++i)
      fixes_all = tau_power(atom(i), k) == atom(i);
    if (fixes_all) {
      tau_order_ = k;
      break;
    }
  }
}

Simple GarsideStructure::tau_power(const Simple& s, long long k) const
{
  long long m = k % delta_perm_order_;
  if (m < 0) m += delta_perm_order_;
  if (m == 0) return s;
  // Δ^{-k} s Δ^k, read left to right as permutations.
  const Simple& d = delta_powers_[static_cast<std::size_t>(m)];
  Simple dinv = d.inverse();
  Simple r = s;
  for (int i = 0; i < strands_; ++i)
    r[i] = d[s[dinv[i]]];
  return r;
}

Simple GarsideStructure::partial(const Simple& s) const
{
  return s.inverse().then(delta_);
}

Simple GarsideStructure::partial_inv(const Simple& s) const
{
  return delta_.then(s.inverse());
}

Simple GarsideStructure::partial_power(const Simple& s, long long k) const
{
  if (k >= 0) {
    Simple r = tau_power(s, k / 2);
    return k % 2 ? partial(r) : r;
  }
  long long m = -k;
  Simple r = tau_power(s, -(m / 2));
  return m % 2 ? partial_inv(r) : r;
}

std::vector<bool> GarsideStructure::left_atom_divisors(const Simple& s) const
{
  std::vector<bool> out(static_cast<std::size_t>(n_atoms()));
  for (int i = 0; i < n_atoms(); ++i)
    out[static_cast<std::size_t>(i)] = left_divides(atom(i), s);
  return out;
}

std::vector<bool> GarsideStructure::right_atom_divisors(const Simple& s) const
{
  std::vector<bool> out(static_cast<std::size_t>(n_atoms()));
  for (int i = 0; i < n_atoms(); ++i)
    out[static_cast<std::size_t>(i)] = right_divides(s, atom(i));
  return out;
}

Simple GarsideStructure::meet_left(const Simple& s, const Simple& t) const
{
  return generic_meet_left(s, t);
}

Simple GarsideStructure::meet_right(const Simple& s, const Simple& t) const
{
  return generic_meet_right(s, t);
}

// Common left divisors are closed under ∨, so extending a common divisor by
// any admissible atom stays below the gcd; the walk ends exactly at s ∧ t.
Simple GarsideStructure::generic_meet_left(const Simple& s,
                                           const Simple& t) const
{
  Simple m = identity_;
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 0; i < n_atoms(); ++i) {
      auto p = product_if_simple(m, atom(i));
      if (p && left_divides(*p, s) && left_divides(*p, t)) {
        m = *p;
        grew = true;
        break;
      }
    }
  }
  return m;
}

Simple GarsideStructure::generic_meet_right(const Simple& s,
                                            const Simple& t) const
{
  Simple m = identity_;
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 0; i < n_atoms(); ++i) {
      auto p = product_if_simple(atom(i), m);
      if (p && right_divides(s, *p) && right_divides(t, *p)) {
        m = *p;
        grew = true;
        break;
      }
    }
  }
  return m;
}

// u ≼ v  <=>  ∂(u) ≽ ∂(v), so ∂ turns right lcms into right gcds.
Simple GarsideStructure::join_right(const Simple& s, const Simple& t) const
{
  return partial_inv(meet_right(partial(s), partial(t)));
}

// u ≽ v  <=>  ∂̃(u) ≼ ∂̃(v).
Simple GarsideStructure::join_left(const Simple& s, const Simple& t) const
{
  return partial(meet_left(partial_inv(s), partial_inv(t)));
}

Simple GarsideStructure::complement_right(const Simple& s,
                                          const Simple& t) const
{
  return s.left_quotient(join_right(s, t));
}

Simple GarsideStructure::complement_left(const Simple& t,
                                         const Simple& s) const
{
  return join_left(t, s).right_quotient(s);
}

Simple lattice(const GarsideStructure& g, const Simple& s, const Simple& t,
               LatticeOp op)
{
  if (s.strands() != g.strands() || t.strands() != g.strands())
    throw Error(Errc::structure_mismatch, "simple from another structure");
  switch (op) {
    case LatticeOp::meet_left: return g.meet_left(s, t);
    case LatticeOp::meet_right: return g.meet_right(s, t);
    case LatticeOp::join_left: return g.join_left(s, t);
    case LatticeOp::join_right: return g.join_right(s, t);
  }
  return g.identity();
}

Simple complement(const GarsideStructure& g, const Simple& s, const Simple& t,
                  Side side)
{
  if (s.strands() != g.strands() || t.strands() != g.strands())
    throw Error(Errc::structure_mismatch, "simple from another structure");
  return side == Side::right ? g.complement_right(s, t)
                             : g.complement_left(t, s);
}

std::vector<int> atom_word(const GarsideStructure& g, const Simple& s)
{
  std::vector<int> word;
  Simple rest = s;
  while (!g.is_identity(rest)) {
    int i = 0;
    while (i < g.n_atoms() && !g.left_divides(g.atom(i), rest))
      ++i;
    if (i == g.n_atoms())
      throw Error(Errc::bad_parameter, "simple has no atom prefix");
    word.push_back(i);
    rest = g.atom(i).left_quotient(rest);
  }
  return word;
}

}  // namespace garside

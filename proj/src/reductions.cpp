#include "garside/reductions.hpp"

#include <random>
#include <string>

#include "garside/braid.hpp"
#include "garside/error.hpp"

namespace garside {

SubgroupSpec::SubgroupSpec(std::vector<Element> generators) : gens_(std::move(generators))
{
  if (gens_.empty()) throw Error(Errc::bad_parameter, "subgroup needs a generator");
  for (const Element& e : gens_)
    if (e.structure_ptr() != gens_.front().structure_ptr())
      throw Error(Errc::structure_mismatch, "subgroup generators over different structures");
}

ScpOracle search_oracle(const ScpOptions& opts)
{
  return [opts](const TupleElement& a, const TupleElement& c) -> std::optional<Element> {
    return scp_search(a, c, opts).witness;
  };
}

ScpOracle known_conjugators_oracle(std::vector<Element> candidates)
{
  return [cands = std::move(candidates)](const TupleElement& a,
                                         const TupleElement& c) -> std::optional<Element> {
    for (const Element& x : cands)
      if (x.structure_ptr() == a.structure_ptr() && conjugate(a, x) == c) return x;
    return std::nullopt;
  };
}

namespace {

std::vector<Element> concat(std::vector<Element> a, const std::vector<Element>& b)
{
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Element> conjugate_all(const std::vector<Element>& v, const Element& x)
{
  std::vector<Element> out;
  out.reserve(v.size());
  for (const Element& e : v)
    out.push_back(conjugate(e, x));
  return out;
}

Element ask(const ScpOracle& oracle, const TupleElement& a, const TupleElement& c)
{
  std::optional<Element> x = oracle(a, c);
  if (!x) throw Error(Errc::oracle_failed, "no conjugator returned");
  if (!(conjugate(a, *x) == c)) throw Error(Errc::oracle_failed, "returned conjugator is wrong");
  return *x;
}

bool commute(const Element& x, const Element& y)
{
  return multiply(x, y) == multiply(y, x);
}

void check_centralizes(const SubgroupSpec& cent, const SubgroupSpec& sub, const char* what)
{
  for (const Element& c : cent.generators())
    for (const Element& s : sub.generators())
      if (!commute(c, s))
        throw Error(Errc::bad_parameter, std::string(what) + " generator does not commute");
}

// a1 from u = a1 g a2 and a witness ã2: ã1 = u (g ã2)^{-1}.
Element left_factor(const Element& u, const Element& g, const Element& a2)
{
  return multiply(u, inverse(multiply(g, a2)));
}

}  // namespace

Element dh_recover(const Element& g, const SubgroupSpec& b, const Element& g_a,
                   const Element& g_b, const ScpOracle& oracle)
{
  TupleElement from(concat({g}, b.generators()));
  TupleElement to(concat({g_a}, b.generators()));
  Element a = ask(oracle, from, to);
  return conjugate(g_b, a);
}

Element double_coset_recover(const Element& g, const SubgroupSpec& b1, const SubgroupSpec& b2,
                             const Element& u, const Element& v, const ScpOracle& oracle)
{
  // b^{a1 g a2} = b^{g a2} for b in B1, since a1 commutes with B1.
  TupleElement from(concat(conjugate_all(b1.generators(), g), b2.generators()));
  TupleElement to(concat(conjugate_all(b1.generators(), u), b2.generators()));
  Element a2 = ask(oracle, from, to);
  Element a1 = left_factor(u, g, a2);
  return multiply(multiply(a1, v), a2);
}

Element commutator_recover(const SubgroupSpec& a, const SubgroupSpec& b,
                           const SubgroupSpec& cent_a, const SubgroupSpec& cent_b,
                           const TupleElement& conj_a, const TupleElement& conj_b,
                           const ScpOracle& oracle)
{
  if (conj_a.size() != a.size() || conj_b.size() != b.size())
    throw Error(Errc::dimension_mismatch, "conjugated generators do not match the subgroups");
  check_centralizes(cent_a, a, "Cent(A)");
  check_centralizes(cent_b, b, "Cent(B)");

  TupleElement a_from(concat(a.generators(), cent_b.generators()));
  TupleElement a_to(concat(conj_a.entries(), cent_b.generators()));
  Element bt = ask(oracle, a_from, a_to);

  TupleElement b_from(concat(b.generators(), cent_a.generators()));
  TupleElement b_to(concat(conj_b.entries(), cent_a.generators()));
  Element at = ask(oracle, b_from, b_to);

  return multiply(multiply(inverse(at), inverse(bt)), multiply(at, bt));
}

Element centralizer_protocol_recover(const Element& g, const SubgroupSpec& c,
                                     const SubgroupSpec& cent_d, const Element& u,
                                     const Element& v, const ScpOracle& oracle)
{
  TupleElement from(concat(conjugate_all(c.generators(), g), cent_d.generators()));
  TupleElement to(concat(conjugate_all(c.generators(), u), cent_d.generators()));
  Element a2 = ask(oracle, from, to);
  Element a1 = left_factor(u, g, a2);
  return multiply(multiply(a1, v), a2);
}

Problem parse_problem(std::string_view token)
{
  if (token == "dh") return Problem::dh;
  if (token == "dcp" || token == "double_coset") return Problem::double_coset;
  if (token == "commutator") return Problem::commutator;
  if (token == "centralizer") return Problem::centralizer;
  throw Error(Errc::bad_parameter, "unknown problem '" + std::string(token) + "'");
}

const char* to_string(Problem p)
{
  switch (p) {
    case Problem::dh: return "dh";
    case Problem::double_coset: return "dcp";
    case Problem::commutator: return "commutator";
    case Problem::centralizer: return "centralizer";
  }
  return "?";
}

Element sigma_word(const StructurePtr& g, std::span<const int> word)
{
  if (g->name() == "artin") return make_element(g, word);
  std::vector<int> w;
  w.reserve(word.size());
  for (int x : word) {
    int i = x < 0 ? -x : x;
    if (i < 1 || i >= g->strands())
      throw Error(Errc::index_out_of_range, "generator index " + std::to_string(x));
    int a = bkl_atom_index(i + 1, i) + 1;
    w.push_back(x < 0 ? -a : a);
  }
  return make_element(g, w);
}

Element central_generator(const StructurePtr& g)
{
  return Element::delta_power(g, g->name() == "artin" ? 2 : g->strands());
}

namespace {

Element sigma(const StructurePtr& g, int i)
{
  const int w[] = {i};
  return sigma_word(g, w);
}

}  // namespace

std::vector<Element> sigma_range(const StructurePtr& g, int from, int to)
{
  std::vector<Element> out;
  for (int i = from; i <= to; ++i)
    out.push_back(sigma(g, i));
  return out;
}

namespace {

// Full twist on strands lo..hi.
Element full_twist(const StructurePtr& g, int lo, int hi)
{
  std::vector<int> w;
  for (int k = 0; k <= hi - lo; ++k)
    for (int i = lo; i < hi; ++i)
      w.push_back(i);
  return sigma_word(g, w);
}

// Strand `s` travelling once around the strands lo..hi (s adjacent to them).
Element loop_around(const StructurePtr& g, int s, int lo, int hi)
{
  std::vector<int> w;
  if (s > hi) {
    for (int i = hi; i >= lo; --i) w.push_back(i);
    for (int i = lo; i <= hi; ++i) w.push_back(i);
  } else {
    for (int i = s; i < hi; ++i) w.push_back(i);
    for (int i = hi - 1; i >= s; --i) w.push_back(i);
  }
  return sigma_word(g, w);
}

}  // namespace

std::vector<Element> parabolic_centralizer(const StructurePtr& g, int lo, int hi)
{
  int n = g->strands();
  if (lo < 1 || hi > n || hi <= lo || (lo != 1 && hi != n))
    throw Error(Errc::bad_parameter, "strand range must be a proper end segment");
  // Two strands: their generator is already central in the subgroup.
  std::vector<Element> out{hi - lo == 1 ? sigma(g, lo) : full_twist(g, lo, hi)};
  if (lo == 1) {
    for (Element& e : sigma_range(g, hi + 1, n - 1)) out.push_back(std::move(e));
    if (hi < n) out.push_back(loop_around(g, hi + 1, lo, hi));
  } else {
    for (Element& e : sigma_range(g, 1, lo - 2)) out.push_back(std::move(e));
    out.push_back(loop_around(g, lo - 1, lo, hi));
  }
  return out;
}

namespace {

class Sampler {
 public:
  Sampler(const StructurePtr& g, const InstanceParams& p, std::uint64_t seed)
      : g_(g), p_(p), rng_(seed) {}

  Element base()
  {
    std::uniform_int_distribution<int> atom(1, g_->n_atoms());
    std::vector<int> w;
    for (int i = 0; i < p_.g_length; ++i)
      w.push_back(coin_(rng_) ? -atom(rng_) : atom(rng_));
    return make_element(g_, w);
  }

  // A random word in the given generators.
  Element in(const SubgroupSpec& s)
  {
    Element x(g_);
    if (p_.identity) return x;
    std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
    for (int i = 0; i < p_.word_length; ++i) {
      const Element& e = s[pick(rng_)];
      x = multiply(x, coin_(rng_) ? inverse(e) : e);
    }
    return x;
  }

  SubgroupSpec limit(std::vector<Element> gens) const
  {
    if (p_.generators > 0 && p_.generators < gens.size()) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(p_.generators), gens.end());
    return SubgroupSpec(std::move(gens));
  }

 private:
  StructurePtr g_;
  InstanceParams p_;
  std::mt19937_64 rng_;
  std::bernoulli_distribution coin_{0.5};
};

}  // namespace

Instance gen_instance(Problem problem, const StructurePtr& g, const InstanceParams& params,
                      std::uint64_t seed)
{
  const int n = g->strands();
  if (n < 4) throw Error(Errc::bad_parameter, "instances need at least 4 strands");
  if (params.word_length < 0 || params.g_length < 0)
    throw Error(Errc::bad_parameter, "negative word length");
  const int h = n / 2;
  Sampler rnd(g, params, seed);
  // σ_1..σ_{h-1} act on strands 1..h, σ_{h+1}..σ_{n-1} on strands h+1..n.
  auto left = [&] { return rnd.limit(sigma_range(g, 1, h - 1)); };
  auto right = [&] { return rnd.limit(sigma_range(g, h + 1, n - 1)); };

  switch (problem) {
    case Problem::dh: {
      SubgroupSpec A = left(), B = right();
      Element base = rnd.base();
      Element a = rnd.in(A), b = rnd.in(B);
      return DhInstance{base, B, conjugate(base, a), conjugate(base, b), a, b,
                        conjugate(base, multiply(a, b))};
    }
    case Problem::double_coset: {
      SubgroupSpec A1 = left(), B1 = right(), A2 = right(), B2 = left();
      Element base = rnd.base();
      Element a1 = rnd.in(A1), a2 = rnd.in(A2), b1 = rnd.in(B1), b2 = rnd.in(B2);
      Element u = multiply(multiply(a1, base), a2);
      Element v = multiply(multiply(b1, base), b2);
      Element shared = multiply(multiply(multiply(a1, b1), base), multiply(a2, b2));
      return DoubleCosetInstance{base, B1, B2, u, v, a1, a2, b1, b2, shared};
    }
    case Problem::commutator: {
      if (params.generators != 0)
        throw Error(Errc::bad_parameter, "commutator instances use full generating sets");
      // Overlapping subgroups on strands 1..h+1 and h..n, so [a,b] is nontrivial.
      SubgroupSpec A(sigma_range(g, 1, h)), B(sigma_range(g, h, n - 1));
      SubgroupSpec CA(parabolic_centralizer(g, 1, h + 1));
      SubgroupSpec CB(parabolic_centralizer(g, h, n));
      Element a = rnd.in(A), b = rnd.in(B);
      TupleElement conj_a(conjugate_all(A.generators(), b));
      TupleElement conj_b(conjugate_all(B.generators(), a));
      Element shared = multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
      return CommutatorInstance{A, B, CA, CB, conj_a, conj_b, a, b, shared};
    }
    case Problem::centralizer: {
      // a1, a2 live on the left strands and b1, b2 on the right ones. The right
      // generators centralize a1, and b2 lies in the centralizer of the left ones.
      SubgroupSpec left_gens = left(), right_gens = right();
      SubgroupSpec C = right_gens;
      SubgroupSpec cent_d(parabolic_centralizer(g, 1, h));
      Element base = rnd.base();
      Element a1 = rnd.in(left_gens), a2 = rnd.in(left_gens);
      Element b1 = rnd.in(C), b2 = rnd.in(right_gens);
      Element u = multiply(multiply(a1, base), a2);
      Element v = multiply(multiply(b1, base), b2);
      Element shared = multiply(multiply(multiply(a1, b1), base), multiply(a2, b2));
      return CentralizerInstance{base, C, cent_d, u, v, a1, a2, b1, b2, shared};
    }
  }
  throw Error(Errc::bad_parameter, "unknown problem");
}

Element recover(const Instance& inst, const ScpOracle& oracle)
{
  struct Visitor {
    const ScpOracle& o;
    Element operator()(const DhInstance& i) const
    {
      return dh_recover(i.g, i.b_gens, i.g_a, i.g_b, o);
    }
    Element operator()(const DoubleCosetInstance& i) const
    {
      return double_coset_recover(i.g, i.b1_gens, i.b2_gens, i.u, i.v, o);
    }
    Element operator()(const CommutatorInstance& i) const
    {
      return commutator_recover(i.a_gens, i.b_gens, i.cent_a, i.cent_b, i.conj_a, i.conj_b, o);
    }
    Element operator()(const CentralizerInstance& i) const
    {
      return centralizer_protocol_recover(i.g, i.c_gens, i.cent_d, i.u, i.v, o);
    }
  };
  return std::visit(Visitor{oracle}, inst);
}

const Element& shared_value(const Instance& inst)
{
  return std::visit([](const auto& i) -> const Element& { return i.shared; }, inst);
}

std::vector<Element> private_conjugators(const Instance& inst)
{
  struct Visitor {
    std::vector<Element> operator()(const DhInstance& i) const { return {i.a}; }
    std::vector<Element> operator()(const DoubleCosetInstance& i) const { return {i.a2}; }
    std::vector<Element> operator()(const CommutatorInstance& i) const { return {i.b, i.a}; }
    std::vector<Element> operator()(const CentralizerInstance& i) const { return {i.a2}; }
  };
  return std::visit(Visitor{}, inst);
}

}  // namespace garside

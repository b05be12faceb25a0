#include "garside/io.hpp"

#include <cctype>
#include <charconv>

#include "json.hpp"

#include "garside/braid.hpp"
#include "garside/error.hpp"

namespace garside {

namespace {

bool is_bkl(const GarsideStructure& g) { return g.name() == "bkl"; }

int parse_int(std::string_view s, std::string_view token)
{
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw Error(Errc::parse_error, "bad token '" + std::string(token) + "'");
  return v;
}

std::vector<std::string_view> split_ws(std::string_view text)
{
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    // A BKL token may contain spaces inside its parentheses.
    bool paren = false;
    while (j < text.size() && (paren || !std::isspace(static_cast<unsigned char>(text[j])))) {
      if (text[j] == '(') paren = true;
      if (text[j] == ')') paren = false;
      ++j;
    }
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string trim(std::string_view s)
{
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string to_hex(std::string_view bytes)
{
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::string from_hex(std::string_view hex)
{
  if (hex.size() % 2) throw Error(Errc::parse_error, "odd-length hex string");
  std::string out;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(hex.data() + i, hex.data() + i + 2, v, 16);
    if (ec != std::errc() || p != hex.data() + i + 2)
      throw Error(Errc::parse_error, "bad hex string");
    out.push_back(static_cast<char>(v));
  }
  return out;
}

}  // namespace

std::vector<int> parse_word(const GarsideStructure& g, std::string_view text)
{
  std::vector<int> word;
  for (std::string_view tok : split_ws(text)) {
    if (!is_bkl(g)) {
      int v = parse_int(tok, tok);
      if (v == 0 || v >= g.strands() || -v >= g.strands())
        throw Error(Errc::index_out_of_range, "generator " + std::string(tok));
      word.push_back(v);
      continue;
    }
    std::string_view t = tok;
    bool inv = false;
    if (!t.empty() && t.front() == '-') {
      inv = true;
      t.remove_prefix(1);
    }
    if (t.size() < 5 || t.front() != '(' || t.back() != ')')
      throw Error(Errc::parse_error, "expected (t,s) in '" + std::string(tok) + "'");
    t = t.substr(1, t.size() - 2);
    auto comma = t.find(',');
    if (comma == std::string_view::npos)
      throw Error(Errc::parse_error, "expected (t,s) in '" + std::string(tok) + "'");
    int hi = parse_int(trim(t.substr(0, comma)), tok);
    int lo = parse_int(trim(t.substr(comma + 1)), tok);
    if (!(g.strands() >= hi && hi > lo && lo >= 1))
      throw Error(Errc::index_out_of_range, "band generator " + std::string(tok));
    int a = bkl_atom_index(hi, lo) + 1;
    word.push_back(inv ? -a : a);
  }
  return word;
}

std::string format_word(const GarsideStructure& g, const std::vector<int>& word)
{
  std::string out;
  for (int x : word) {
    if (!out.empty()) out.push_back(' ');
    if (!is_bkl(g)) {
      out += std::to_string(x);
      continue;
    }
    auto [t, s] = bkl_atom_strands((x < 0 ? -x : x) - 1);
    if (x < 0) out.push_back('-');
    out += "(" + std::to_string(t) + "," + std::to_string(s) + ")";
  }
  return out;
}

Element parse_element(const StructurePtr& g, std::string_view text)
{
  return make_element(g, parse_word(*g, text));
}

std::string format_element(const Element& a)
{
  return format_word(a.structure(), to_word(a));
}

TupleElement parse_tuple(const StructurePtr& g, std::string_view text)
{
  std::vector<Element> v;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(';', start);
    v.push_back(parse_element(g, text.substr(start, end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return TupleElement(std::move(v));
}

std::string element_to_json(const Element& a)
{
  nlohmann::json j;
  j["inf"] = a.inf();
  j["factors"] = nlohmann::json::array();
  for (const Simple& s : a.factors())
    j["factors"].push_back(to_hex(a.structure().encode(s)));
  return j.dump();
}

Element element_from_json(const StructurePtr& g, std::string_view text)
{
  try {
    auto j = nlohmann::json::parse(text);
    std::vector<Simple> f;
    for (const auto& h : j.at("factors"))
      f.push_back(g->decode(from_hex(h.get<std::string>())));
    return Element::from_factors(g, j.at("inf").get<std::int64_t>(), f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

std::string invariant_to_json(const OrbitSet& set, InvariantKind kind, const Element& witness,
                              bool with_members)
{
  const GarsideStructure& g = set.base().structure();
  auto bound = [](std::int64_t v) {
    return v == kUnbounded ? nlohmann::json("inf") : nlohmann::json(v);
  };
  nlohmann::json lo = nlohmann::json::array(), hi = nlohmann::json::array();
  for (std::size_t i = 0; i < set.interval().size(); ++i) {
    lo.push_back(bound(set.interval().lo[i]));
    hi.push_back(bound(set.interval().hi[i]));
  }
  nlohmann::json j;
  j["structure"] = std::string(g.name());
  j["n"] = g.strands();
  j["r"] = set.base().size();
  j["variant"] = to_string(kind);
  j["interval"] = {{"lo", lo}, {"hi", hi}};
  j["size"] = set.size();
  j["truncated"] = set.truncated();
  j["mod_tau"] = set.mod_tau();
  if (with_members) {
    nlohmann::json members = nlohmann::json::array();
    for (std::size_t i = 0; i < set.size(); ++i) {
      nlohmann::json m = nlohmann::json::array();
      TupleElement t = set.member(i);
      for (const Element& e : t.entries())
        m.push_back(format_element(e));
      members.push_back(std::move(m));
    }
    j["members"] = std::move(members);
  }
  j["witness"] = format_element(witness);
  return j.dump(2);
}

}  // namespace garside

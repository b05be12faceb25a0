#include "garside/simple.hpp"

#include <sstream>

#include "garside/error.hpp"

namespace garside {

const char* to_string(Errc code)
{
  switch (code) {
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::structure_mismatch: return "StructureMismatch";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::bad_parameter: return "BadParameter";
    case Errc::too_large: return "TooLarge";
    case Errc::bad_target: return "BadTarget";
    case Errc::zero_length_factor: return "ZeroLengthFactor";
    case Errc::not_in_interval: return "NotInInterval";
    case Errc::none_exists: return "NoneExists";
    case Errc::oracle_failed: return "OracleFailed";
    case Errc::io_error: return "IOError";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

Simple Simple::identity(int strands)
{
  if (strands < 1 || strands > kMaxStrands)
    throw Error(Errc::bad_parameter, "strand count out of range");
  Simple s;
  s.n_ = static_cast<std::uint8_t>(strands);
  for (int i = 0; i < strands; ++i)
    s[i] = static_cast<std::uint8_t>(i);
  return s;
}

Simple Simple::from_images(std::span<const int> images)
{
  Simple s = identity(static_cast<int>(images.size()));
  std::array<bool, kMaxStrands> seen{};
  for (int i = 0; i < s.n_; ++i) {
    int v = images[static_cast<std::size_t>(i)];
    if (v < 0 || v >= s.n_ || seen[static_cast<std::size_t>(v)])
      throw Error(Errc::bad_parameter, "not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
    s[i] = static_cast<std::uint8_t>(v);
  }
  return s;
}

std::string Simple::debug_string() const
{
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i)
    os << (i ? " " : "") << static_cast<int>((*this)[i]) + 1;
  os << ']';
  return os.str();
}

int cycle_count(const Simple& s)
{
  std::array<bool, kMaxStrands> seen{};
  int cycles = 0;
  for (int i = 0; i < s.strands(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = s[j])
      seen[static_cast<std::size_t>(j)] = true;
  }
  return cycles;
}

int inversion_count(const Simple& s)
{
  int count = 0;
  for (int i = 0; i < s.strands(); ++i)
    for (int j = i + 1; j < s.strands(); ++j)
      count += s[i] > s[j];
  return count;
}

std::size_t SimpleHash::operator()(const Simple& s) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (int i = 0; i < s.strands(); ++i) {
    h ^= s[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace garside

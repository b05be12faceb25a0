#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>

namespace garside {

inline constexpr int kMaxStrands = 32;

/// A simple element, stored as the permutation braid it induces on strands.
///
/// Both built-in braid structures embed their simple elements injectively into
/// the symmetric group, so a simple is just the image array `image[i]` = final
/// position of the strand starting at position `i` (0-based). Products of
/// simples read left to right: `(s*t)[i] = t[s[i]]`.
class Simple {
 public:
  Simple() = default;

  static Simple identity(int strands);
  static Simple from_images(std::span<const int> images);

  int strands() const { return n_; }
  std::uint8_t operator[](int i) const { return image_[static_cast<std::size_t>(i)]; }
  std::uint8_t& operator[](int i) { return image_[static_cast<std::size_t>(i)]; }

  bool is_identity() const;

  /// Permutation product, braid order: this first, then `t`.
  Simple then(const Simple& t) const;
  Simple inverse() const;
  /// `this^{-1} * t`, the permutation `u` with `this * u == t`.
  Simple left_quotient(const Simple& t) const;
  /// `this * t^{-1}`, the permutation `u` with `u * t == this`.
  Simple right_quotient(const Simple& t) const;

  friend bool operator==(const Simple& a, const Simple& b) {
    return a.n_ == b.n_ && a.image_ == b.image_;
  }
  friend std::strong_ordering operator<=>(const Simple& a, const Simple& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.image_ <=> b.image_;
  }

  std::string debug_string() const;

 private:
  std::array<std::uint8_t, kMaxStrands> image_{};
  std::uint8_t n_ = 0;
};

int cycle_count(const Simple& s);
int inversion_count(const Simple& s);

struct SimpleHash {
  std::size_t operator()(const Simple& s) const noexcept;
};

inline bool Simple::is_identity() const
{
  for (int i = 0; i < n_; ++i)
    if (image_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

inline Simple Simple::then(const Simple& t) const
{
  Simple r = *this;
  for (int i = 0; i < n_; ++i)
    r[i] = t[(*this)[i]];
  return r;
}

inline Simple Simple::inverse() const
{
  Simple r = *this;
  for (int i = 0; i < n_; ++i)
    r[(*this)[i]] = static_cast<std::uint8_t>(i);
  return r;
}

inline Simple Simple::left_quotient(const Simple& t) const
{
  // u[j] = t[this^{-1}[j]]
  Simple inv = inverse();
  Simple r = *this;
  for (int j = 0; j < n_; ++j)
    r[j] = t[inv[j]];
  return r;
}

inline Simple Simple::right_quotient(const Simple& t) const
{
  // u[i] = t^{-1}[this[i]]
  Simple tinv = t.inverse();
  Simple r = *this;
  for (int i = 0; i < n_; ++i)
    r[i] = tinv[(*this)[i]];
  return r;
}

}  // namespace garside

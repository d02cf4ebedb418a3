#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bpham {

// A vertex of BP_n: n nonzero signed symbols whose absolute values permute
// 1..n. Positions are 0-based here; the text form is "-2,1,-3".
class SignedPermutation {
 public:
  static constexpr int kMaxDim = 8;

  SignedPermutation() = default;
  SignedPermutation(std::initializer_list<int> symbols);
  explicit SignedPermutation(std::span<const int> symbols);

  static SignedPermutation identity(int n);

  int size() const { return n_; }
  int operator[](int pos) const { return sym_[static_cast<std::size_t>(pos)]; }
  int first() const { return sym_[0]; }
  int last() const { return sym_[static_cast<std::size_t>(n_ - 1)]; }

  std::vector<int> to_vector() const;

  // Injective for vertices of equal dimension.
  std::uint64_t key() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend std::strong_ordering operator<=>(const SignedPermutation& a,
                                          const SignedPermutation& b);

 private:
  friend class PermBuilder;
  std::array<std::int8_t, kMaxDim> sym_{};
  std::uint8_t n_ = 0;
};

// Unchecked construction for hot paths that already guarantee validity.
class PermBuilder {
 public:
  explicit PermBuilder(int n) { p_.n_ = static_cast<std::uint8_t>(n); }
  PermBuilder& set(int pos, int symbol) {
    p_.sym_[static_cast<std::size_t>(pos)] = static_cast<std::int8_t>(symbol);
    return *this;
  }
  SignedPermutation build() const { return p_; }

 private:
  SignedPermutation p_;
};

// k-th prefix reversal, 1 <= k <= n: reverse and negate the first k symbols.
SignedPermutation prefix_reversal(const SignedPermutation& u, int k);

// c_i = sign(b_i) * a_{|b_i|}. With this convention prefix_reversal(u, k)
// equals compose(u, generator(n, k)).
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

SignedPermutation inverse(const SignedPermutation& u);

// u -> compose(w, u); an automorphism of BP_n.
SignedPermutation left_translate(const SignedPermutation& w, const SignedPermutation& u);

// The k-th generator: prefix_reversal(identity(n), k).
SignedPermutation generator(int n, int k);

std::string to_string(const SignedPermutation& u);
SignedPermutation parse_vertex(std::string_view text);

bool is_valid_signed_permutation(std::span<const int> symbols);

struct VertexHash {
  std::size_t operator()(const SignedPermutation& u) const noexcept {
    return std::hash<std::uint64_t>{}(u.key() * 0x9E3779B97F4A7C15ULL);
  }
};

}  // namespace bpham

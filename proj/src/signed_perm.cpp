#include "bpham/signed_perm.hpp"

#include <charconv>
#include <cstdlib>

#include "bpham/errors.hpp"

namespace bpham {

bool is_valid_signed_permutation(std::span<const int> symbols) {
  const auto n = static_cast<int>(symbols.size());
  if (n < 1 || n > SignedPermutation::kMaxDim) return false;
  std::array<bool, SignedPermutation::kMaxDim + 1> seen{};
  for (int s : symbols) {
    const int a = std::abs(s);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) return false;
    seen[static_cast<std::size_t>(a)] = true;
  }
  return true;
}

SignedPermutation::SignedPermutation(std::initializer_list<int> symbols)
    : SignedPermutation(std::span<const int>(symbols.begin(), symbols.size())) {}

SignedPermutation::SignedPermutation(std::span<const int> symbols) {
  if (!is_valid_signed_permutation(symbols)) {
    throw DomainError("not a signed permutation of 1..n (n <= 8)");
  }
  n_ = static_cast<std::uint8_t>(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    sym_[i] = static_cast<std::int8_t>(symbols[i]);
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 1 || n > kMaxDim) throw DomainError("dimension out of range");
  PermBuilder b(n);
  for (int i = 0; i < n; ++i) b.set(i, i + 1);
  return b.build();
}

std::vector<int> SignedPermutation::to_vector() const {
  return {sym_.begin(), sym_.begin() + n_};
}

std::uint64_t SignedPermutation::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < kMaxDim; ++i) {
    k = (k << 8) | static_cast<std::uint8_t>(sym_[static_cast<std::size_t>(i)]);
  }
  return k;
}

std::strong_ordering operator<=>(const SignedPermutation& a, const SignedPermutation& b) {
  const int n = std::min(a.n_, b.n_);
  for (int i = 0; i < n; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return a.n_ <=> b.n_;
}

SignedPermutation prefix_reversal(const SignedPermutation& u, int k) {
  const int n = u.size();
  if (k < 1 || k > n) throw DomainError("prefix reversal length out of range");
  PermBuilder b(n);
  for (int i = 0; i < k; ++i) b.set(i, -u[k - 1 - i]);
  for (int i = k; i < n; ++i) b.set(i, u[i]);
  return b.build();
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.size() != b.size()) throw DomainError("compose: length mismatch");
  const int n = a.size();
  PermBuilder c(n);
  for (int i = 0; i < n; ++i) {
    const int s = b[i];
    const int v = a[std::abs(s) - 1];
    c.set(i, s > 0 ? v : -v);
  }
  return c.build();
}

SignedPermutation inverse(const SignedPermutation& u) {
  const int n = u.size();
  PermBuilder v(n);
  for (int i = 0; i < n; ++i) {
    const int s = u[i];
    v.set(std::abs(s) - 1, s > 0 ? i + 1 : -(i + 1));
  }
  return v.build();
}

SignedPermutation left_translate(const SignedPermutation& w, const SignedPermutation& u) {
  return compose(w, u);
}

SignedPermutation generator(int n, int k) {
  return prefix_reversal(SignedPermutation::identity(n), k);
}

std::string to_string(const SignedPermutation& u) {
  std::string out;
  for (int i = 0; i < u.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(u[i]);
  }
  return out;
}

SignedPermutation parse_vertex(std::string_view text) {
  std::vector<int> symbols;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok =
        text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    int value = 0;
    // from_chars rejects a leading '+', which the text form never contains.
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw DomainError("malformed vertex text: '" + std::string(text) + "'");
    }
    symbols.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return SignedPermutation(symbols);
}

}  // namespace bpham

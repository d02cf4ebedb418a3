#include <set>
#include <stdexcept>

#include "bpham/bp_graph.hpp"
#include "bpham/constructor.hpp"

namespace bpham {

namespace {

using Triple = std::array<int, 3>;

// Hamiltonian cycles of BP_3 - {123, k(123)}.
constexpr Triple kPair1[] = {
    {-2, -1, 3}, {2, -1, 3},  {-3, 1, -2},  {3, 1, -2},   {-1, -3, -2}, {1, -3, -2},
    {3, -1, -2}, {2, 1, -3},  {-1, -2, -3}, {3, 2, 1},    {-2, -3, 1},  {-1, 3, 2},
    {1, 3, 2},   {-3, -1, 2}, {-2, 1, 3},   {2, 1, 3},    {-3, -1, -2}, {1, 3, -2},
    {-1, 3, -2}, {2, -3, 1},  {3, -2, 1},   {-3, -2, 1},  {2, 3, 1},    {-2, 3, 1},
    {-3, 2, 1},  {-1, -2, 3}, {1, -2, 3},   {-3, 2, -1},  {-2, 3, -1},  {2, 3, -1},
    {-3, -2, -1}, {3, -2, -1}, {2, -3, -1}, {-2, -3, -1}, {3, 2, -1},   {1, -2, -3},
    {2, -1, -3}, {-2, -1, -3}, {1, 2, -3},  {-1, 2, -3},  {-2, 1, -3},  {3, -1, 2},
    {1, -3, 2},  {-1, -3, 2}, {3, 1, 2},    {-3, 1, 2},
};

constexpr Triple kPair2[] = {
    {-1, 2, 3},  {-3, -2, 1}, {2, 3, 1},    {-1, -3, -2}, {3, 1, -2},   {2, -1, -3},
    {-2, -1, -3}, {1, 2, -3}, {-1, 2, -3},  {3, -2, 1},   {2, -3, 1},   {-1, 3, -2},
    {-3, 1, -2}, {2, -1, 3},  {1, -2, 3},   {-3, 2, -1},  {-2, 3, -1},  {1, -3, 2},
    {3, -1, 2},  {-2, 1, -3}, {2, 1, -3},   {3, -1, -2},  {1, -3, -2},  {2, 3, -1},
    {-3, -2, -1}, {3, -2, -1}, {2, -3, -1}, {1, 3, -2},   {-3, -1, -2}, {2, 1, 3},
    {-1, -2, 3}, {-3, 2, 1},  {-2, 3, 1},   {-1, -3, 2},  {3, 1, 2},    {-3, 1, 2},
    {-1, 3, 2},  {-2, -3, 1}, {3, 2, 1},    {-1, -2, -3}, {1, -2, -3},  {3, 2, -1},
    {-2, -3, -1}, {1, 3, 2},  {-3, -1, 2},  {-2, 1, 3},
};

constexpr Triple kPair3[] = {
    {-2, -1, 3}, {2, -1, 3},  {1, -2, 3},   {-1, -2, 3},  {2, 1, 3},    {-2, 1, 3},
    {-1, 2, 3},  {-3, -2, 1}, {3, -2, 1},   {-1, 2, -3},  {-2, 1, -3},  {2, 1, -3},
    {3, -1, -2}, {-3, -1, -2}, {1, 3, -2},  {2, -3, -1},  {3, -2, -1},  {1, 2, -3},
    {-2, -1, -3}, {3, 1, 2},  {-1, -3, 2},  {1, -3, 2},   {3, -1, 2},   {-3, -1, 2},
    {1, 3, 2},   {-2, -3, -1}, {3, 2, -1},  {-3, 2, -1},  {-2, 3, -1},  {2, 3, -1},
    {1, -3, -2}, {-1, -3, -2}, {2, 3, 1},   {-2, 3, 1},   {-3, 2, 1},   {3, 2, 1},
    {-1, -2, -3}, {1, -2, -3}, {2, -1, -3}, {3, 1, -2},   {-3, 1, -2},  {-1, 3, -2},
    {2, -3, 1},  {-2, -3, 1}, {-1, 3, 2},   {-3, 1, 2},
};

template <std::size_t N>
std::vector<SignedPermutation> load(const Triple (&rows)[N], int k) {
  std::vector<SignedPermutation> out;
  for (const auto& r : rows) out.emplace_back(std::span<const int>(r));
  const SignedPermutation id = SignedPermutation::identity(3);
  const SignedPermutation partner = generator(3, k);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& x = out[i];
    if (x == id || x == partner || !adjacent(x, out[(i + 1) % out.size()])) {
      throw std::logic_error("corrupt BP_3 fixture " + std::to_string(k));
    }
  }
  if (std::set<SignedPermutation>(out.begin(), out.end()).size() != 46) {
    throw std::logic_error("corrupt BP_3 fixture size");
  }
  return out;
}

}  // namespace

const std::array<std::vector<SignedPermutation>, 3>& bp3_fixtures() {
  static const std::array<std::vector<SignedPermutation>, 3> fixtures{
      load(kPair1, 1), load(kPair2, 2), load(kPair3, 3)};
  return fixtures;
}

}  // namespace bpham

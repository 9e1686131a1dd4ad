#include "mcb/covers.hpp"

#include <string>

#include "mcb/error.hpp"

namespace mcb {
namespace {

constexpr int kOracleMaxGround = 12;
constexpr int kOracleMaxMembers = 4;
constexpr int kEnumerateMaxGround = 8;
constexpr int kEnumerateMaxMembers = 3;

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t v = 1;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

// DFS over increasing subset values; every member must keep a private
// element against the rest of the family, checked at the leaves.
struct MinimalCoverScan {
  int a;
  int b;
  Subset full;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  BigUint count;
  std::vector<SetFamily>* sink = nullptr;
  std::vector<Subset> chosen;

  void run() {
    chosen.clear();
    descend(1, 0);
  }

  void descend(Subset from, Subset covered) {
    if (++nodes > budget)
      throw ScopeError("minimal-cover enumeration budget of " +
                       std::to_string(budget) + " nodes exceeded");
    const int depth = static_cast<int>(chosen.size());
    if (depth == b) {
      if (covered == full && all_private()) {
        count += BigUint(1);
        if (sink) sink->push_back(SetFamily(a, chosen));
      }
      return;
    }
    // Even taking every remaining element per slot cannot help once the
    // deficit exceeds the open slots times a.
    if (set_size(full & ~covered) > (b - depth) * a) return;
    for (Subset s = from; s <= full; ++s) {
      chosen.push_back(s);
      descend(s + 1, covered | s);
      chosen.pop_back();
    }
  }

  bool all_private() const {
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      Subset others = 0;
      for (std::size_t j = 0; j < chosen.size(); ++j)
        if (j != i) others |= chosen[j];
      if ((chosen[i] & ~others) == 0) return false;
    }
    return true;
  }
};

}  // namespace

BigUint count_minimal_covers_oracle(int a, int b, std::uint64_t budget) {
  if (a < 1 || a > kOracleMaxGround)
    throw InputError("oracle supports 1 <= a <= " +
                     std::to_string(kOracleMaxGround));
  if (b < 1 || b > kOracleMaxMembers)
    throw InputError("oracle supports 1 <= b <= " +
                     std::to_string(kOracleMaxMembers));
  MinimalCoverScan scan{a, b, full_set(a), budget, 0, BigUint(), nullptr, {}};
  scan.run();
  return scan.count;
}

BigUint count_covers_recursion(int a, int b, std::optional<int> ambient_n) {
  if (a < 1 || b < 1)
    throw InputError("recursion needs positive a and b");
  if (ambient_n && *ambient_n < a)
    throw InputError("ambient n must be at least a");
  // table[u][c] = T(u, c) for 1 <= u <= a, 1 <= c <= b.
  std::vector<std::vector<BigUint>> table(
      a + 1, std::vector<BigUint>(b + 1, BigUint()));
  for (int u = 1; u <= a; ++u) {
    table[u][1] = BigUint(1);
    if (b >= 2) {
      BigUint t2;
      for (int m = 1; m <= u; ++m)
        t2 += BigUint(binomial(u, m)) * (std::uint64_t{1} << (u - m));
      table[u][2] = t2;
    }
  }
  for (int c = 3; c <= b; ++c)
    for (int u = 1; u <= a; ++u) {
      BigUint sum;
      for (int r = 1; r <= u - 1; ++r) {
        const int exponent = ambient_n ? *ambient_n - r : u - r;
        BigUint term = table[u - r][c - 1];
        term.mul_small(binomial(u, r));
        term.mul_small(std::uint64_t{1} << exponent);
        sum += term;
      }
      table[u][c] = sum;
    }
  return table[a][b];
}

CoverCount compare_cover_counts(int a, int b, std::uint64_t budget) {
  CoverCount out;
  out.a = a;
  out.b = b;
  out.value_recursion = count_covers_recursion(a, b);
  out.value_oracle = count_minimal_covers_oracle(a, b, budget);
  out.agree = out.value_recursion == out.value_oracle;
  return out;
}

BigUint count_disjoint_covers(int a, int r) {
  if (a < 1 || r < 1)
    throw InputError("count_disjoint_covers needs positive arguments");
  if (a > 15)
    throw ScopeError("count_disjoint_covers supports a <= 15");
  if (r > a) return BigUint();
  // Stirling second kind by recurrence, then scale by r!.
  std::vector<std::vector<BigUint>> stirling(
      a + 1, std::vector<BigUint>(r + 1, BigUint()));
  stirling[0][0] = BigUint(1);
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= std::min(i, r); ++j) {
      stirling[i][j] = stirling[i - 1][j];
      stirling[i][j].mul_small(j);
      stirling[i][j] += stirling[i - 1][j - 1];
    }
  BigUint by_recurrence = stirling[a][r];
  for (int i = 2; i <= r; ++i) by_recurrence.mul_small(i);

  // Independent route: surjections of [a] onto [r] by inclusion-exclusion.
  BigUint plus, minus;
  for (int j = 0; j <= r; ++j) {
    std::uint64_t power = 1;
    for (int i = 0; i < a; ++i) power *= static_cast<std::uint64_t>(r - j);
    BigUint term = BigUint(binomial(r, j)) * power;
    if (j % 2 == 0)
      plus += term;
    else
      minus += term;
  }
  const BigUint by_surjections = plus - minus;
  if (by_recurrence != by_surjections)
    throw ScopeError("disjoint-cover routes disagree: " +
                     by_recurrence.to_string() + " vs " +
                     by_surjections.to_string());
  return by_recurrence;
}

std::vector<SetFamily> enumerate_minimal_covers(int ground_size, int b) {
  if (ground_size < 1 || ground_size > kEnumerateMaxGround)
    throw InputError("enumeration supports 1 <= ground size <= " +
                     std::to_string(kEnumerateMaxGround));
  if (b < 1 || b > kEnumerateMaxMembers)
    throw InputError("enumeration supports 1 <= b <= " +
                     std::to_string(kEnumerateMaxMembers));
  std::vector<SetFamily> out;
  MinimalCoverScan scan{ground_size, b,         full_set(ground_size),
                        std::uint64_t{1} << 40, 0, BigUint(),
                        nullptr,                {}};
  scan.sink = &out;
  scan.run();
  return out;
}

}  // namespace mcb

// Benchmark comparing the OpenMP code paths against the serial reference
// implementations, verifying agreement along the way.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mcb/constructions.hpp"
#include "mcb/matroid.hpp"
#include "mcb/mcb_check.hpp"
#include "mcb/polytope.hpp"
#include "mcb/reference.hpp"

namespace {

using namespace mcb;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

struct Row {
  std::string kernel;
  double serial = 0;
  double parallel = 0;
  bool agree = false;
};

void print_rows(const std::vector<Row>& rows) {
  std::printf("%-28s %12s %12s %9s %7s\n", "kernel", "serial[s]",
              "parallel[s]", "speedup", "agree");
  for (const Row& row : rows)
    std::printf("%-28s %12.4f %12.4f %8.2fx %7s\n", row.kernel.c_str(),
                row.serial, row.parallel,
                row.parallel > 0 ? row.serial / row.parallel : 0.0,
                row.agree ? "yes" : "NO");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (no OpenMP)\n");
#endif
  std::vector<Row> rows;

  {
    Row row{"rank table U(8,16)", 0, 0, false};
    const Matroid seed = uniform(8, 16);
    auto start = std::chrono::steady_clock::now();
    const auto expected = reference::rank_table(16, seed.bases());
    row.serial = seconds_since(start);
    start = std::chrono::steady_clock::now();
    const Matroid rebuilt =
        Matroid::from_bases(16, seed.bases(), Validation::kNever);
    row.parallel = seconds_since(start);
    row.agree = true;
    for (Subset s = 0; s <= full_set(16); ++s)
      if (rebuilt.rank_of(s) != expected[s]) row.agree = false;
    rows.push_back(row);
  }

  {
    Row row{"flats pavexmp(16,8)", 0, 0, false};
    const Matroid m = pavexmp_paving(16, 8);
    auto start = std::chrono::steady_clock::now();
    const SetFamily slow = reference::flats(16, m.bases());
    row.serial = seconds_since(start);
    start = std::chrono::steady_clock::now();
    const SetFamily fast = m.flats();
    row.parallel = seconds_since(start);
    row.agree = slow == fast;
    rows.push_back(row);
  }

  {
    Row row{"tuple search nobd, degree 6", 0, 0, false};
    const Matroid m = nobd_paving({12, 6, 2});
    const std::vector<Subset> family = m.proper_flats().members;
    auto start = std::chrono::steady_clock::now();
    const auto naive =
        reference::mcb_search_naive(12, family, 6, kDefaultSearchBudget);
    row.serial = seconds_since(start);
    start = std::chrono::steady_clock::now();
    const McbVerdict pruned = check_mcb(m, 6);
    row.parallel = seconds_since(start);
    row.agree = pruned.holds == !naive.has_value() &&
                !pruned.holds && naive &&
                pruned.witness->flats.members == naive->tuple;
    rows.push_back(row);
  }

  {
    Row row{"support scan U(5,10)", 0, 0, false};
    const Matroid m = uniform(5, 10);
    const MinkDecomp d = decompose(m);
    auto start = std::chrono::steady_clock::now();
    const auto slow = reference::support_mismatch(10, d.y, m.bases());
    row.serial = seconds_since(start);
    start = std::chrono::steady_clock::now();
    const auto fast = support_mismatch(d, m.bases());
    row.parallel = seconds_since(start);
    row.agree = slow == fast;
    rows.push_back(row);
  }

  print_rows(rows);
  for (const Row& row : rows)
    if (!row.agree) return 1;
  return 0;
}

// Benchmark of the OpenMP kernels against their serial reference
// implementations: point counting, the character-sum trace, and the
// ghost-solution search.

#include <omp.h>

#include <chrono>
#include <iomanip>
#include <iostream>

#include "gfe/ghost.hpp"
#include "gfe/hgm.hpp"

using namespace gfe;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_of(F&& f) {
  auto t0 = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel, bool equal) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(3) << std::setw(9) << serial << " s " << std::setw(9) << parallel
            << " s   x" << std::setprecision(2) << (parallel > 0 ? serial / parallel : 0.0)
            << (equal ? "" : "   MISMATCH") << "\n";
}

}  // namespace

int main() {
  std::cout << "threads: " << omp_get_max_threads() << "\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(11) << "serial"
            << std::setw(12) << "openmp\n";

  {
    SexticModel m = c53(BigRat(3));
    auto F = Fq::make(397, 2);  // the largest counting field of the sweep
    std::int64_t a = 0, b = 0;
    double ts = time_of([&] { a = count_points_serial(m, *F); });
    double tp = time_of([&] { b = count_points(m, *F); });
    row("count_points F_{397^2}", ts, tp, a == b);
  }
  {
    SexticModel m = c53(BigRat(3));
    auto F = Fq::make(17, 4);
    std::int64_t a = 0, b = 0;
    double ts = time_of([&] { a = count_points_serial(m, *F); });
    double tp = time_of([&] { b = count_points(m, *F); });
    row("count_points F_{17^4}", ts, tp, a == b);
  }
  {
    HGMParams params(make_rat(1, 5), make_rat(-1, 5), make_rat(1, 3), make_rat(-1, 3));
    auto field = Fq::make_cyclotomic(199, 15);
    auto gauss = gauss_sum_table(*field);
    // serial reference: one thread
    KElt a, b;
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    double ts = time_of([&] {
      for (std::uint32_t t = 2; t <= 60; ++t) a = hyp_trace_with(params, *field, gauss, t).value;
    });
    omp_set_num_threads(saved);
    double tp = time_of([&] {
      for (std::uint32_t t = 2; t <= 60; ++t) b = hyp_trace_with(params, *field, gauss, t).value;
    });
    row("hyp_trace sweep (ell=199)", ts, tp, a == b);
  }
  {
    SearchBox box;
    box.a_bound = 3000;
    box.c_bound = 3000;
    box.exp_bound = 20;
    std::size_t a = 0, b = 0;
    double ts = time_of([&] { a = ghost_search_serial(5, 3, box).size(); });
    double tp = time_of([&] { b = ghost_search(5, 3, box).size(); });
    row("ghost_search (5,3) box 3000", ts, tp, a == b);
  }
  return 0;
}

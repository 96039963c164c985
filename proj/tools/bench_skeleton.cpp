// Compares serial and threaded skeleton assembly on a diagram whose margins
// admit many fixed points, and checks the two policies agree byte for byte.
#include <chrono>
#include <iostream>
#include <string>

#if defined(BOWVAR_HAVE_OPENMP)
#include <omp.h>
#endif

#include "bowvar/curves.hpp"
#include "bowvar/diagram.hpp"
#include "bowvar/engine.hpp"

namespace {

int thread_count() {
#if defined(BOWVAR_HAVE_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

double seconds_to_build(const bowvar::BraneDiagram& d, bowvar::ExecutionPolicy policy,
                        bowvar::Skeleton& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = bowvar::skeleton(d, policy);
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  // Twelve NS5 branes with unit charges and two D5 branes splitting them 6/6:
  // the fixed points are the 6-element subsets of {1..12}, C(12,6) = 924.
  std::string text = "/1/2/3/4/5/6/7/8/9/10/11/12\\6\\";
  if (argc > 1) text = argv[1];

  const bowvar::BraneDiagram d = bowvar::parse_diagram(text);
  bowvar::Skeleton serial;
  bowvar::Skeleton parallel;

  const double ts = seconds_to_build(d, bowvar::ExecutionPolicy::Serial, serial);
  const double tp = seconds_to_build(d, bowvar::ExecutionPolicy::Parallel, parallel);

  std::cout << "diagram:      " << bowvar::format_diagram(d) << '\n';
  std::cout << "threads:      " << thread_count() << '\n';
  std::cout << "fixed points: " << serial.fixed_points.size() << '\n';
  std::cout << "edges:        " << serial.edges.size() << '\n';
  std::cout << "rays:         " << serial.rays.size() << '\n';
  std::cout << "serial:       " << ts << " s\n";
  std::cout << "parallel:     " << tp << " s\n";
  if (tp > 0.0) std::cout << "speedup:      " << ts / tp << "x\n";

  if (!(serial == parallel)) {
    std::cout << "MISMATCH: serial and parallel skeletons differ\n";
    return 1;
  }
  std::cout << "policies agree\n";
  return 0;
}

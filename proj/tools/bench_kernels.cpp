// Timing comparison of the serial reference kernels against the parallel
// ones, on the heavyweight catalog groups.  Both variants are asserted to
// agree before a time is printed.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "so7/atlas.hpp"
#include "so7/classes.hpp"
#include "so7/error.hpp"
#include "so7/gf2.hpp"
#include "so7/group.hpp"
#include "so7/subgroups.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class Fn>
double timed(Fn&& fn) {
  Clock::time_point t0 = Clock::now();
  fn();
  return seconds_since(t0);
}

void report_row(const std::string& label, double serial, double parallel) {
  std::printf("%-36s %10.3fs %10.3fs %8.2fx\n", label.c_str(), serial,
              parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP with up to %d threads\n\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run the serial path\n\n");
#endif
  std::printf("%-36s %11s %11s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  for (const char* id : {"case3-psl32", "case3-s7", "case3-s7+neg"}) {
    so7::Group g = so7::named_group(id);
    std::vector<so7::SignedPerm> gens = so7::effective_generators(g);

    std::vector<so7::SignedPerm> serial_elems, parallel_elems;
    double ts = timed([&] { serial_elems = so7::closure_serial(gens); });
    double tp = timed([&] { parallel_elems = so7::closure_parallel(gens); });
    if (serial_elems != parallel_elems)
      throw so7::InternalError("closure kernels disagree on " +
                               std::string(id));
    report_row(std::string("closure ") + id, ts, tp);

    so7::ClassPartition cs, cp;
    ts = timed([&] { cs = so7::conjugacy_classes_serial(g.elements(), gens); });
    tp = timed(
        [&] { cp = so7::conjugacy_classes_parallel(g.elements(), gens); });
    if (cs.classes != cp.classes)
      throw so7::InternalError("class kernels disagree on " + std::string(id));
    report_row(std::string("classes ") + id, ts, tp);
  }

  {
    so7::Group g = so7::named_group("case3-s7");
    std::vector<so7::SignedPerm> agens;
    for (const so7::Gf2Vec& b : so7::code_a64().basis())
      agens.push_back(so7::SignedPerm::diag(b.bits));
    so7::Group a = so7::Group::from_elements(so7::diag_group(so7::code_a64()),
                                        std::move(agens));
    std::vector<so7::SignedPerm> hints = so7::nondiagonal_generators(g);

    std::optional<so7::Group> cser, cpar;
    double ts =
        timed([&] { cser = so7::complement_search_serial(g, a, hints); });
    double tp =
        timed([&] { cpar = so7::complement_search_parallel(g, a, hints); });
    if (cser.has_value() != cpar.has_value() ||
        (cser && !cser->same_elements(*cpar)))
      throw so7::InternalError("complement kernels disagree on case3-s7");
    report_row("complement scan case3-s7", ts, tp);
  }

  return 0;
}

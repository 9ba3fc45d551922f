// Timing comparison of the OpenMP kernels against their serial references.
// The outputs are checked for exact agreement before any number is printed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "octa/bn.hpp"
#include "octa/gram.hpp"
#include "octa/induced.hpp"
#include "octa/lab.hpp"
#include "octa/thoma.hpp"

using namespace octa;

namespace {

double seconds(const std::function<void()>& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& name, double serial, double parallel) {
  std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx\n", name.c_str(), serial,
              parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  {
    CharacterTable ref, par;
    double ts = seconds([&] { ref = bn_character_table_serial(6); });
    double tp = seconds([&] { par = bn_character_table(6); });
    if (!(ref.values == par.values)) {
      std::fprintf(stderr, "bn table kernels disagree\n");
      return 1;
    }
    report("bn-table n=6", ts, tp);
  }

  {
    BernoulliParam p(Rational(3, 4));
    GroupElement g = parse_element("(1 2)(5 6);signs=1,4");
    Rational ref, par;
    double ts = seconds([&] { ref = example3_state_at_serial(p, g, 18); });
    double tp = seconds([&] { par = example3_state_at(p, g, 18); });
    if (ref != par) {
      std::fprintf(stderr, "configuration-sum kernels disagree\n");
      return 1;
    }
    report("config sum m=18", ts, tp);
  }

  {
    RepSpec spec;
    spec.n = 2;
    spec.k = 1;
    spec.bp = {Partition({1}), Partition({1})};
    spec.thoma.alpha = {{Rational(1, 3), 0}, {Rational(1, 4), 1}};
    spec.thoma.gamma0 = Rational(1, 4);
    spec.thoma.gamma1 = Rational(1, 6);
    spec = validate_rep_spec(spec);
    StateFunction phi = [&](const GroupElement& g) { return induced_state(spec, g); };

    std::vector<GroupElement> elems;
    for (int i = 1; i <= 12; ++i)
      elems.push_back(parse_element("(" + std::to_string(i) + " " + std::to_string(i + 2) +
                                    ");signs=" + std::to_string(i + 1)));
    std::vector<std::vector<Rational>> ref, par;
    double ts = seconds([&] { ref = build_gram_serial(phi, elems); });
    double tp = seconds([&] { par = build_gram(phi, elems); });
    if (ref != par) {
      std::fprintf(stderr, "gram kernels disagree\n");
      return 1;
    }
    report("gram 12x12", ts, tp);
  }

  return 0;
}

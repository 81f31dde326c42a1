// Serial reference vs OpenMP kernels: labeled census and the Betti oracle.
//
//   bench [max_vertices] [workers]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "monores/census.hpp"
#include "monores/homology.hpp"

using namespace monores;

namespace {

template <class F>
double seconds(F&& f)
{
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* what, double serial, double parallel, bool agree)
{
    std::printf("%-28s serial %8.3f s  openmp %8.3f s  speedup %5.2fx  %s\n", what, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, agree ? "results agree" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv)
{
    std::size_t max_vertices = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 5;
    int workers = argc > 2 ? std::atoi(argv[2]) : 0;

    CensusOptions opt;
    opt.max_vertices = max_vertices;
    opt.equivalence_max_vertices = 4;
    opt.up_to_isomorphism = false;
    opt.workers = workers;
    CensusReport ser, par;
    double ts = seconds([&] { ser = run_census_serial(opt); });
    double tp = seconds([&] { par = run_census(opt); });
    bool same = ser.complexes == par.complexes && ser.quasi_forests == par.quasi_forests &&
                ser.trees_checked == par.trees_checked && ser.discrepancies.size() == par.discrepancies.size();
    report("census (labeled)", ts, tp, same);

    // Betti oracle on ideals with many lcm-lattice elements
    std::mt19937_64 rng(7);
    std::vector<MonomialIdeal> ideals;
    while (ideals.size() < 40) {
        auto i = random_nonsquarefree_ideal(rng, 5, 3, 10);
        if (i.size() >= 8)
            ideals.push_back(i);
    }
    std::vector<BettiTable> bs, bp;
    ts = seconds([&] {
        for (const auto& i : ideals)
            bs.push_back(betti_serial(i));
    });
    tp = seconds([&] {
        for (const auto& i : ideals)
            bp.push_back(betti(i));
    });
    report("betti (40 ideals, q >= 8)", ts, tp, bs == bp);
    return same && bs == bp ? 0 : 1;
}

// Wall-clock comparison of the serial reference kernels against the
// OpenMP ones on the heavier verification batteries.

#include <chrono>
#include <cstdio>

#include "cliffsym/demazure.hpp"
#include "cliffsym/quiver_hecke.hpp"
#include "cliffsym/schubert.hpp"
#include "cliffsym/suites.hpp"
#include "cliffsym/symgroup.hpp"

using namespace cliffsym;

template <class F>
static double time_ms(F&& f)
{
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int main()
{
    struct Row {
        const char* name;
        double serial_ms;
        double parallel_ms;
    };
    std::vector<Row> rows;

    {
        ParityConfig cfg = ParityConfig::all_odd(3);
        double s = time_ms([&] { verify_nhc_relations(cfg, 6, ExecMode::serial); });
        double p = time_ms([&] { verify_nhc_relations(cfg, 6, ExecMode::parallel); });
        rows.push_back({"nhc-relations n=3 all-odd deg<=6", s, p});
    }
    {
        double s = time_ms([&] { coxeter_qorder_serial_reference(CoxeterType::BC, 4, 20); });
        double p = time_ms([&] { coxeter_qorder(CoxeterType::BC, 4, 20, ExecMode::parallel); });
        rows.push_back({"coxeter BC_4 enumeration", s, p});
    }
    {
        auto battery = cartan_battery();
        const CartanData& C = battery[4];  // both-odd connected
        double s = time_ms([&] { verify_hc_relations(C, 3, 4, ExecMode::serial); });
        double p = time_ms([&] { verify_hc_relations(C, 3, 4, ExecMode::parallel); });
        rows.push_back({"quiver-hecke battery (both-odd A2) n=3", s, p});
    }
    {
        ParityConfig cfg = ParityConfig::all_odd(3);
        double s = time_ms([&] { verify_schubert_props(cfg, 3, ExecMode::serial); });
        double p = time_ms([&] { verify_schubert_props(cfg, 3, ExecMode::parallel); });
        rows.push_back({"schubert props n=3 all-odd", s, p});
    }

    std::printf("%-45s %12s %12s %8s\n", "kernel", "serial/ms", "openmp/ms", "speedup");
    for (auto& r : rows)
        std::printf("%-45s %12.1f %12.1f %7.2fx\n", r.name, r.serial_ms, r.parallel_ms,
                    r.serial_ms / (r.parallel_ms > 0 ? r.parallel_ms : 1));
    return 0;
}

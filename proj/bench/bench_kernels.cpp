// Times the serial reference kernels against the OpenMP path and checks that
// the two produce bit-identical output. Build with -DNDEBUG for honest
// numbers; run: bench_kernels [rows] [repeats]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "planpref/linalg.hpp"
#include "planpref/parallel.hpp"
#include "planpref/rng.hpp"

namespace {

using planpref::Matrix;
using planpref::parallel::Exec;

Matrix random_matrix(std::size_t rows, std::size_t cols, planpref::Rng& rng) {
    Matrix m(rows, cols);
    for (auto& v : m.data) v = rng.uniform(-1.0, 1.0);
    return m;
}

double seconds_per_run(const std::function<void()>& fn, int repeats) {
    fn();  // warm up caches and the OpenMP thread pool
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) fn();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count() / repeats;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return false;
    }
    return true;
}

void report(const std::string& name, double serial_s, double parallel_s, bool identical) {
    std::printf("%-18s %10.3f ms %10.3f ms %8.2fx  %s\n", name.c_str(), serial_s * 1e3,
                parallel_s * 1e3, serial_s / parallel_s, identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t rows = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 4096;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;
    const std::size_t in_dim = 128, out_dim = 128;

    planpref::Rng rng(42);
    const Matrix x = random_matrix(rows, in_dim, rng);
    const Matrix w = random_matrix(out_dim, in_dim, rng);
    std::vector<double> b(out_dim);
    for (auto& v : b) v = rng.uniform(-1.0, 1.0);
    const Matrix delta = random_matrix(rows, out_dim, rng);

    std::printf("kernel benchmark: %zu rows, %zu x %zu weights, %d repeats, %d threads\n", rows,
                out_dim, in_dim, repeats, planpref::parallel::thread_count());
    std::printf("%-18s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    bool all_identical = true;
    {
        Matrix zs(rows, out_dim), zp(rows, out_dim);
        const double ts = seconds_per_run(
            [&] { planpref::kernels::affine(x, w, b, zs, Exec::Serial); }, repeats);
        const double tp = seconds_per_run(
            [&] { planpref::kernels::affine(x, w, b, zp, Exec::Parallel); }, repeats);
        const bool same = bitwise_equal(zs.data, zp.data);
        all_identical = all_identical && same;
        report("affine", ts, tp, same);
    }
    {
        Matrix ds(out_dim, in_dim), dp(out_dim, in_dim);
        const double ts = seconds_per_run(
            [&] { planpref::kernels::grad_weights(delta, x, ds, Exec::Serial); }, repeats);
        const double tp = seconds_per_run(
            [&] { planpref::kernels::grad_weights(delta, x, dp, Exec::Parallel); }, repeats);
        const bool same = bitwise_equal(ds.data, dp.data);
        all_identical = all_identical && same;
        report("grad_weights", ts, tp, same);
    }
    {
        Matrix ds(rows, in_dim), dp(rows, in_dim);
        const double ts = seconds_per_run(
            [&] { planpref::kernels::grad_input(delta, w, ds, Exec::Serial); }, repeats);
        const double tp = seconds_per_run(
            [&] { planpref::kernels::grad_input(delta, w, dp, Exec::Parallel); }, repeats);
        const bool same = bitwise_equal(ds.data, dp.data);
        all_identical = all_identical && same;
        report("grad_input", ts, tp, same);
    }
    {
        std::vector<bool> degs, degp;
        Matrix cs(in_dim, in_dim), cp(in_dim, in_dim);
        const double ts = seconds_per_run(
            [&] { planpref::kernels::pairwise_pearson(x, cs, degs, Exec::Serial); }, repeats);
        const double tp = seconds_per_run(
            [&] { planpref::kernels::pairwise_pearson(x, cp, degp, Exec::Parallel); }, repeats);
        const bool same = bitwise_equal(cs.data, cp.data);
        all_identical = all_identical && same;
        report("pairwise_pearson", ts, tp, same);
    }

    if (!planpref::parallel::openmp_built()) {
        std::printf("note: built without OpenMP; both columns use the serial path\n");
    }
    return all_identical ? 0 : 1;
}

#include "esa/trajectories.hpp"

#include <algorithm>
#include <complex>
#include <future>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace esa {

namespace {

struct Point {
    std::complex<double> z;
    double radius;
};

std::vector<Point> expanded(const OrderedRootSet& set) {
    std::vector<Point> out;
    for (const auto& r : set.roots)
        for (int k = 0; k < r.multiplicity; ++k)
            out.push_back({{r.center.re.to_double(), r.center.im.to_double()}, r.radius.to_double()});
    return out;
}

}  // namespace

std::vector<TrajectoryRow> trace_roots(const std::function<Polynomial(const Rational&)>& family,
                                       const std::vector<Rational>& c_grid, mpfr_prec_t precision) {
    for (std::size_t i = 1; i < c_grid.size(); ++i)
        if (!(c_grid[i - 1] < c_grid[i])) throw std::invalid_argument("trace_roots: grid must be strictly increasing");

    std::vector<std::vector<Point>> solved(c_grid.size());
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < c_grid.size(); start += workers) {
        std::vector<std::future<std::vector<Point>>> batch;
        for (std::size_t i = start; i < std::min(c_grid.size(), start + workers); ++i)
            batch.push_back(std::async(std::launch::async, [&, i] {
                return expanded(certified_roots(family(c_grid[i]), precision));
            }));
        for (std::size_t k = 0; k < batch.size(); ++k) solved[start + k] = batch[k].get();
    }

    std::vector<TrajectoryRow> rows;
    std::vector<std::complex<double>> prev;
    for (std::size_t g = 0; g < c_grid.size(); ++g) {
        const auto& cur = solved[g];
        const std::size_t d = cur.size();
        std::vector<std::size_t> match(d);
        std::vector<bool> flag(d, false);
        if (g == 0) {
            for (std::size_t j = 0; j < d; ++j) match[j] = j;
        } else {
            struct Pair {
                double dist;
                std::size_t j, k;
            };
            std::vector<Pair> pairs;
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) pairs.push_back({std::abs(prev[j] - cur[k].z), j, k});
            std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.dist < b.dist; });
            std::vector<bool> used_j(d, false), used_k(d, false);
            for (const auto& p : pairs) {
                if (used_j[p.j] || used_k[p.k]) continue;
                match[p.j] = p.k;
                used_j[p.j] = used_k[p.k] = true;
            }
            for (std::size_t j = 0; j < d; ++j) {
                double d1 = std::abs(prev[j] - cur[match[j]].z);
                for (std::size_t k = 0; k < d; ++k) {
                    if (k == match[j]) continue;
                    double d2 = std::abs(prev[j] - cur[k].z);
                    if (d2 < 2 * d1 || d2 == 0) flag[j] = true;
                }
            }
        }
        std::vector<std::complex<double>> next(d);
        for (std::size_t j = 0; j < d; ++j) {
            const Point& p = cur[match[j]];
            rows.push_back({c_grid[g], static_cast<int>(j + 1), p.z.real(), p.z.imag(), p.radius, flag[j]});
            next[j] = p.z;
        }
        prev = std::move(next);
    }
    return rows;
}

void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryRow>& rows) {
    os << "c,j,re,im,radius,ambiguous_flag\n";
    os.precision(17);
    for (const auto& r : rows)
        os << to_string(r.c) << ',' << r.j << ',' << r.re << ',' << r.im << ',' << r.radius << ',' << (r.ambiguous ? 1 : 0)
           << '\n';
}

}  // namespace esa

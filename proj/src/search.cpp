#include "chromroot/search.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>
#include <tuple>

namespace chromroot {

std::string SearchHit::report_line() const {
    return "host=Kme(" + std::to_string(task.host_n) + "); gadget=" + task.gadget.to_text() +
           "; vertices=" + std::to_string(vertices) + "; P=" + chromatic.to_coeff_string() +
           "; cofactor=" + cofactor.to_coeff_string();
}

std::vector<ConstructionExpr> enumerate_gadgets(int max_leaves,
                                                const std::vector<ConstructionExpr>& leaf_pool) {
    if (max_leaves < 1) throw std::invalid_argument("enumerate_gadgets: max_leaves must be >= 1");
    if (leaf_pool.empty()) throw std::invalid_argument("enumerate_gadgets: empty leaf pool");

    // by_leaves[k] = canonical forms with exactly k leaves, in generation order
    std::vector<std::vector<ConstructionExpr>> by_leaves(max_leaves + 1);
    by_leaves[1] = leaf_pool;

    for (int k = 2; k <= max_leaves; ++k) {
        auto& out = by_leaves[k];

        // series: ordered sequences (>= 2 items) of non-series forms
        std::vector<ConstructionExpr> stack;
        auto series_rec = [&](auto&& self, int remaining) -> void {
            if (remaining == 0) {
                if (stack.size() >= 2) out.push_back(ConstructionExpr::series(stack));
                return;
            }
            // j < k keeps the scan off by_leaves[k] itself (a k-leaf item
            // could only ever form a 1-child node anyway).
            for (int j = 1; j <= remaining && j < k; ++j)
                for (const auto& item : by_leaves[j]) {
                    if (item.kind() == ConstructionExpr::Kind::Series) continue;
                    stack.push_back(item);
                    self(self, remaining - j);
                    stack.pop_back();
                }
        };
        series_rec(series_rec, k);

        // parallel: non-decreasing sequences (>= 2 items) of non-parallel forms
        auto parallel_rec = [&](auto&& self, int remaining, const ConstructionExpr* min_item) -> void {
            if (remaining == 0) {
                if (stack.size() >= 2) out.push_back(ConstructionExpr::parallel(stack));
                return;
            }
            for (int j = 1; j <= remaining && j < k; ++j)
                for (const auto& item : by_leaves[j]) {
                    if (item.kind() == ConstructionExpr::Kind::Parallel) continue;
                    if (min_item && ConstructionExpr::compare(item, *min_item) < 0) continue;
                    stack.push_back(item);
                    self(self, remaining - j, &item);
                    stack.pop_back();
                }
        };
        parallel_rec(parallel_rec, k, nullptr);
    }

    std::vector<ConstructionExpr> all;
    for (int k = 1; k <= max_leaves; ++k)
        for (auto& e : by_leaves[k]) all.push_back(std::move(e));
    return all;
}

std::vector<SearchHit> run_search(std::vector<int> hosts, int max_leaves, const IntPoly& target,
                                  const SearchOptions& options) {
    for (int h : hosts)
        if (h < 3) throw std::invalid_argument("run_search: hosts must be >= 3");
    if (!target.is_monic() || target.degree() < 1)
        throw std::invalid_argument("run_search: target must be monic of degree >= 1");

    std::sort(hosts.begin(), hosts.end());
    hosts.erase(std::unique(hosts.begin(), hosts.end()), hosts.end());

    const std::vector<ConstructionExpr> gadgets = enumerate_gadgets(max_leaves, options.leaf_pool);
    std::vector<PartitionedPoly> gadget_values(gadgets.size());
    std::vector<std::optional<SearchHit>> slots(hosts.size() * gadgets.size());

    int workers = options.workers;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers, 64));

    // Phase 1: gadget partitioned polynomials (host-independent).
    {
        std::atomic<std::size_t> cursor{0};
        auto eval_worker = [&] {
            for (std::size_t i; (i = cursor.fetch_add(1)) < gadgets.size();)
                gadget_values[i] = eval_construction(gadgets[i]);
        };
        std::vector<std::thread> pool;
        for (int w = 1; w < workers; ++w) pool.emplace_back(eval_worker);
        eval_worker();
        for (auto& t : pool) t.join();
    }

    // Phase 2: splice each gadget into each host; results land in per-task
    // slots, so scheduling never affects the output.
    {
        std::atomic<std::size_t> cursor{0};
        auto splice_worker = [&] {
            for (std::size_t i; (i = cursor.fetch_add(1)) < slots.size();) {
                const int host = hosts[i / gadgets.size()];
                const std::size_t gi = i % gadgets.size();
                PartitionedPoly host_value{falling_factorial(host - 1), falling_factorial(host)};
                IntPoly p = parallel_compose(host_value, gadget_values[gi]).total();
                IntPoly cofactor;
                try {
                    cofactor = exact_div(p, target);
                } catch (const NonExactDivision&) {
                    continue;
                }
                SearchHit hit;
                hit.task = {gadgets[gi], host, target};
                hit.vertices = host + gadgets[gi].realized_vertex_count() - 2;
                hit.chromatic = std::move(p);
                hit.cofactor = std::move(cofactor);
                slots[i] = std::move(hit);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 1; w < workers; ++w) pool.emplace_back(splice_worker);
        splice_worker();
        for (auto& t : pool) t.join();
    }

    std::vector<SearchHit> hits;
    for (auto& s : slots)
        if (s) hits.push_back(std::move(*s));
    std::stable_sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
        return std::tuple(a.vertices, a.task.host_n, a.task.gadget.to_text()) <
               std::tuple(b.vertices, b.task.host_n, b.task.gadget.to_text());
    });
    return hits;
}

}  // namespace chromroot

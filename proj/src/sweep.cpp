#include "extremal/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace extremal {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

void require_params(const Statement & s, const Params & point)
{
    for (const auto & name : s.params)
        if (! point.count(name)) throw std::invalid_argument(s.id + ": grid point lacks parameter '" + name + "'");
}

/// Constraints that let the enumerator skip families; without any, the
/// full power set is walked and the size estimate is exact.
bool prunes(const Statement & s, const Params & point)
{
    if (! s.guide) return false;
    const Guide g = s.guide(point);
    return g.self_t > 0 || g.cross_t > 0 || g.rwise_r >= 2 || g.initial || g.initial_gap >= 0;
}

StatementReport report_of(const Statement & s, const Instance & in, const Evaluation & e)
{
    return {s.id, in, e.verdict, e.detail, e.equality, 0};
}

void tally(SweepReport & r, PointTotals & t, const Evaluation & e)
{
    switch (e.verdict) {
    case Verdict::pass: ++t.pass; ++r.pass; break;
    case Verdict::vacuous: ++t.vacuous; ++r.vacuous; break;
    case Verdict::fail: ++t.fail; ++r.fail; break;
    }
    if (e.equality) {
        ++t.equality;
        ++r.equality;
    }
}

} // namespace

double SweepReport::nonvacuous_rate() const
{
    const std::uint64_t total = pass + vacuous + fail;
    return total ? static_cast<double>(pass + fail) / static_cast<double>(total) : 0.0;
}

SweepReport exhaustive_sweep(const std::string & id, const std::vector<Params> & grid, std::uint64_t budget)
{
    const Statement & s = find_statement(id);
    const auto start = Clock::now();
    SweepReport r;
    r.id = id;
    r.mode = "exhaustive";
    r.budget = budget;

    for (const Params & point : grid) {
        require_params(s, point);
        if (! prunes(s, point)) {
            const std::uint64_t estimate = estimate_instances(s, point);
            if (estimate > budget - r.budget_used)
                throw BudgetExceeded(id + " at " + params_str(point) + ": about " + std::to_string(estimate) +
                                     " instances, budget left " + std::to_string(budget - r.budget_used));
        }
        PointTotals totals{point};
        bool failed = false;
        enumerate_instances(s, point, [&](const Instance & in) {
            if (r.budget_used >= budget)
                throw BudgetExceeded(id + " at " + params_str(point) + ": budget of " + std::to_string(budget) +
                                     " instances exhausted");
            ++r.budget_used;
            const Evaluation e = s.evaluate(in);
            tally(r, totals, e);
            if (e.equality && r.equality_examples.size() < equality_example_limit)
                r.equality_examples.push_back(report_of(s, in, e));
            if (e.verdict == Verdict::fail) {
                r.witnesses.push_back(report_of(s, in, e));
                failed = true;
                return false;
            }
            return true;
        });
        r.points.push_back(std::move(totals));
        if (failed) break;
    }
    r.seconds = since(start);
    return r;
}

SweepReport sample_sweep(const std::string & id, const std::vector<Params> & grid, const Sampler & sampler,
                         std::uint64_t count, unsigned threads)
{
    const Statement & s = find_statement(id);
    const auto start = Clock::now();
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    SweepReport r;
    r.id = id;
    r.mode = "sample";
    r.seed = sampler.seed;
    r.sampler = std::string(sampler_mode_name(sampler.mode));
    r.count = count;
    r.budget = count * grid.size();

    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    for (const Params & point : grid) {
        require_params(s, point);
        std::vector<Evaluation> results(count);
        std::atomic<std::uint64_t> next{0}, first_fail{none};
        std::exception_ptr error;
        std::mutex error_lock;

        auto work = [&] {
            try {
                for (;;) {
                    const std::uint64_t i = next.fetch_add(1);
                    if (i >= count || i > first_fail.load()) return;
                    results[i] = s.evaluate(sample_instance(s, point, sampler, i));
                    if (results[i].verdict == Verdict::fail) {
                        std::uint64_t seen = first_fail.load();
                        while (i < seen && ! first_fail.compare_exchange_weak(seen, i)) {}
                    }
                }
            }
            catch (...) {
                std::lock_guard lock(error_lock);
                if (! error) error = std::current_exception();
                first_fail.store(0);
            }
        };
        const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(count, 1)));
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
        work();
        for (auto & t : pool) t.join();
        if (error) std::rethrow_exception(error);

        // Indices up to the first FAIL were all evaluated; later ones are
        // ignored so the totals do not depend on scheduling.
        const std::uint64_t limit = first_fail == none ? count : first_fail + 1;
        PointTotals totals{point};
        for (std::uint64_t i = 0; i < limit; ++i) {
            tally(r, totals, results[i]);
            if (results[i].equality && r.equality_examples.size() < equality_example_limit)
                r.equality_examples.push_back(report_of(s, sample_instance(s, point, sampler, i), results[i]));
        }
        r.budget_used += limit;
        r.points.push_back(std::move(totals));
        if (first_fail != none) {
            r.witnesses.push_back(report_of(s, sample_instance(s, point, sampler, first_fail), results[first_fail]));
            break;
        }
    }
    r.seconds = since(start);
    return r;
}

} // namespace extremal

#pragma once

#include "extremal/core.hpp"
#include "extremal/property.hpp"
#include "extremal/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace extremal {

// ---------------------------------------------------------------------------
// Unconditional identities and numeric inequalities

/// Σ_{x∈E} |𝓕(x)| against Σ_j Σ_{E_j ⊆ E, |E_j| = j} j·|𝓕(E_j, E)|, both
/// computed exactly. E must lie inside [n].
bool check_identity_2_3(const SetFamily & family, KSet e);

/// |𝓕(x)| + |𝓕(y)|, |𝓕(x,ȳ)| + |𝓕(x̄,y)| + 2|𝓕(x,y)| and
/// |𝓕(x,y)| + |𝓕| - |𝓕(x̄,ȳ)| all agree; needs 1 <= x < y <= n.
bool check_identity_3_2(const SetFamily & family, int x, int y);

/// (a+b)/(A+B) >= min(a/A, b/B). Requires 0 < a <= A and 0 < b <= B.
bool check_fact_3_13(Rational a, Rational big_a, Rational b, Rational big_b);

struct BinomialCheck {
    bool applicable = false; // parameters inside the stated range
    bool holds = true;       // vacuously true when not applicable
    std::string lhs, rhs;    // exact decimal values of both sides
};
struct BinomialReport {
    BinomialCheck lower_tail;    // C(n-i,k) >= (n-ik)/n · C(n,k) for n > ik
    BinomialCheck half_binomial; // C(n-t-2,k-t-2) >= C(n-3,k-t-2)/2 for n >= 2(t-1)(k-t), k > t >= 2
};
/// Both binomial inequalities evaluated with arbitrary precision integers.
BinomialReport check_binomials(int n, int k, int i, int t);

// ---------------------------------------------------------------------------
// Statement registry

enum class Verdict { pass, vacuous, fail };
std::string_view verdict_name(Verdict v);

/// Named instance parameters. Integers are stored as p/1.
using Params = std::map<std::string, Rational>;

/// Integer value of a parameter; throws std::invalid_argument when it is
/// missing or not an integer.
int int_param(const Params & params, const std::string & name);

struct Instance {
    Params params;
    std::vector<SetFamily> families;
};

struct Evaluation {
    Verdict verdict = Verdict::vacuous;
    std::string detail;
    bool equality = false; // the bound is attained (where the statement has one)
};

struct StatementReport {
    std::string id;
    Instance instance;
    Verdict verdict = Verdict::vacuous;
    std::string detail;
    bool equality = false;
    double seconds = 0;
};

/// How instances of a statement are laid out.
enum class Shape {
    scalars,   // parameters only
    single,    // one uniform family of uniformity `uniformities[0]`
    pair,      // two uniform families
    slices,    // one non-uniform family stored as n+1 slices by size
};

/// Hereditary constraints that generators respect so that samples land
/// inside a statement's hypothesis often enough to be informative.
struct Guide {
    int self_t = 0;         // every uniform slot t-intersecting (0: none)
    int cross_t = 0;        // slots 0 and 1 cross t-intersecting (0: none)
    int rwise_r = 0;        // slot 0 (or the union of slices) r-wise ...
    int rwise_t = 1;        // ... rwise_t-intersecting
    bool initial = false;   // generate initial families
    int initial_gap = -1;   // >= 0: initial on [n - initial_gap] only
    bool saturate = false;  // grow samples to maximal families
    int star_core = 1;      // size of the common core star perturbation starts from
};

struct Statement {
    std::string id;
    std::string summary;
    Shape shape = Shape::single;
    std::vector<std::string> params;       // required grid parameters
    std::vector<std::string> uniformities; // parameter naming each slot's k
    std::function<Guide(const Params &)> guide;
    std::function<Evaluation(const Instance &)> evaluate;
    /// Exhaustive mode: every completion of a base instance (all E, all
    /// pairs x < y, ...). Empty function: the base instance only.
    std::function<std::vector<Instance>(const Instance &)> expand;
    /// Sample mode: fills in what `expand` would range over, at random.
    std::function<void(Instance &, std::uint64_t seed)> complete;
    bool primary = true; // part of the theorem registry proper
};

/// Every registered statement, primary ones first.
const std::vector<Statement> & statements();
/// Throws std::invalid_argument for an unknown id.
const Statement & find_statement(const std::string & id);
std::vector<std::string> registry_ids(bool primary_only = true);

/// Evaluates hypothesis then conclusion exactly. Throws
/// std::invalid_argument for an unknown id or a malformed instance.
StatementReport check_statement(const std::string & id, const Instance & instance);

// ---------------------------------------------------------------------------
// Harnesses

/// Parameter grid: "n=5,k=2,l=2", ranges "n=8..12", alternatives
/// "eps=1/58|1/60". The grid is the Cartesian product, in key order.
std::vector<Params> parse_grid(std::string_view text);
std::string params_str(const Params & params);

enum class SamplerMode { uniform, star_perturbation, shifted_random, mixed };
std::string_view sampler_mode_name(SamplerMode mode);
SamplerMode parse_sampler_mode(std::string_view text);

struct Sampler {
    std::uint64_t seed = 1;
    SamplerMode mode = SamplerMode::mixed;
    double density = -1; // < 0: drawn per instance
};

/// Instance number `index` of the stream; a pure function of its inputs.
Instance sample_instance(const Statement & statement, const Params & point, const Sampler & sampler,
                         std::uint64_t index);

/// Visits every instance of the statement's domain at a grid point:
/// all families (or pairs) respecting the statement's guide, expanded.
/// Stops early when the visitor returns false. Returns instances visited.
std::uint64_t enumerate_instances(const Statement & statement, const Params & point,
                                  const std::function<bool(const Instance &)> & visit);

/// Upper estimate of enumerate_instances' count, saturating at 2^63.
std::uint64_t estimate_instances(const Statement & statement, const Params & point);

/// Raised when an exhaustive sweep would exceed its evaluation budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 10^8, or EXTREMAL_BUDGET when set to a positive integer.
std::uint64_t default_budget();

struct PointTotals {
    Params point;
    std::uint64_t pass = 0, vacuous = 0, fail = 0, equality = 0;
};

struct SweepReport {
    std::string id;
    std::string mode; // "exhaustive" or "sample"
    std::vector<PointTotals> points;
    std::uint64_t pass = 0, vacuous = 0, fail = 0, equality = 0;
    std::vector<StatementReport> witnesses;          // FAIL instances
    std::vector<StatementReport> equality_examples;  // first few equality cases
    std::uint64_t seed = 0;
    std::string sampler;
    std::uint64_t count = 0; // samples per grid point
    std::uint64_t budget = 0, budget_used = 0;
    double seconds = 0;

    double nonvacuous_rate() const;
};

inline constexpr std::size_t equality_example_limit = 16;

/// Evaluates every instance at every grid point. A FAIL stops the sweep.
/// Throws BudgetExceeded (with an estimate) before or during the run.
SweepReport exhaustive_sweep(const std::string & id, const std::vector<Params> & grid,
                             std::uint64_t budget = default_budget());

/// `count` samples per grid point spread over `threads` workers. The
/// outcome does not depend on the thread count: sample i always sees the
/// same instance, and after a FAIL only lower indices are accounted.
SweepReport sample_sweep(const std::string & id, const std::vector<Params> & grid, const Sampler & sampler,
                         std::uint64_t count, unsigned threads = 0);

// ---------------------------------------------------------------------------
// Extremal search

struct SearchResult {
    std::uint64_t max_size = 0;
    SetFamily witness;
    bool complete = true;          // false: budget ran out, max_size is a lower bound
    std::uint64_t nodes = 0;
    std::string catalog_source;    // catalog family that seeded the incumbent, if any
};

/// Largest 𝓕 ⊆ C([n],k) satisfying the property, by branch and bound.
/// Pairwise atoms prune through a compatibility graph with a colouring
/// bound; degree caps prune through max degree; the rest are checked on
/// every candidate. Budget counts search nodes.
SearchResult search_max(int n, int k, const PropertySpec & property, std::uint64_t budget = default_budget());

/// Catalog families on C([n],k), labelled, for lower bounds.
std::vector<std::pair<std::string, SetFamily>> catalog_families(int n, int k);

} // namespace extremal

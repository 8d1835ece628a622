#include "votedim/separation.hpp"

#include "votedim/error.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

namespace votedim {

namespace {

// coef . x >= rhs, with the nonnegative combination of original constraints
// that produced it.
struct Row {
    std::vector<Rational> coef;
    Rational rhs;
    std::map<int, Rational> history;
};

bool is_zero(const std::vector<Rational>& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// Scale by a positive factor so the first nonzero coefficient is +-1.
void normalize(Row& row)
{
    auto it = std::find_if(row.coef.begin(), row.coef.end(), [](const Rational& x) { return x != 0; });
    if (it == row.coef.end())
        return;
    Rational scale = abs(*it);
    if (scale == 1)
        return;
    for (auto& c : row.coef)
        c /= scale;
    row.rhs /= scale;
    for (auto& [k, v] : row.history)
        v /= scale;
}

Row combine(const Row& pos, const Row& neg, std::size_t var)
{
    // pos has coef > 0 at var, neg has coef < 0: -neg[var]*pos + pos[var]*neg.
    const Rational a = -neg.coef[var];
    const Rational b = pos.coef[var];
    Row r;
    r.coef.resize(pos.coef.size());
    for (std::size_t i = 0; i < pos.coef.size(); ++i)
        r.coef[i] = a * pos.coef[i] + b * neg.coef[i];
    r.coef[var] = 0;
    r.rhs = a * pos.rhs + b * neg.rhs;
    r.history = pos.history;
    for (auto& [k, v] : r.history)
        v *= a;
    for (const auto& [k, v] : neg.history)
        r.history[k] += b * v;
    normalize(r);
    return r;
}

struct EliminationStep {
    std::size_t var;
    std::vector<Row> bounds;  // rows with a nonzero coefficient on var
};

struct FourierMotzkin {
    std::size_t vars;
    std::vector<Row> rows;
    std::vector<EliminationStep> steps;
    std::optional<Row> contradiction;

    // Removes rows with all-zero coefficients, recording a contradiction.
    bool sweep_constant_rows()
    {
        std::vector<Row> kept;
        for (auto& r : rows) {
            if (is_zero(r.coef)) {
                if (r.rhs > 0) {
                    contradiction = r;
                    return false;
                }
                continue;
            }
            kept.push_back(std::move(r));
        }
        rows = std::move(kept);
        return true;
    }

    // Same coefficients: keep the largest rhs, then the shortest history.
    void deduplicate()
    {
        std::map<std::vector<Rational>, Row> best;
        for (auto& r : rows) {
            auto it = best.find(r.coef);
            if (it == best.end()) {
                best.emplace(r.coef, std::move(r));
                continue;
            }
            Row& cur = it->second;
            if (r.rhs > cur.rhs || (r.rhs == cur.rhs && r.history.size() < cur.history.size()))
                cur = std::move(r);
        }
        rows.clear();
        for (auto& [k, r] : best)
            rows.push_back(std::move(r));
    }

    std::size_t pick_variable(const std::vector<bool>& eliminated) const
    {
        std::size_t best = vars;
        long best_cost = 0;
        for (std::size_t v = 0; v < vars; ++v) {
            if (eliminated[v])
                continue;
            long pos = 0, neg = 0;
            for (const auto& r : rows) {
                if (r.coef[v] > 0)
                    ++pos;
                else if (r.coef[v] < 0)
                    ++neg;
            }
            long cost = pos * neg - pos - neg;
            if (best == vars || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
        return best;
    }

    // True iff feasible.
    bool run()
    {
        std::vector<bool> eliminated(vars, false);
        for (std::size_t round = 1; round <= vars; ++round) {
            if (!sweep_constant_rows())
                return false;
            deduplicate();
            const std::size_t var = pick_variable(eliminated);
            eliminated[var] = true;

            EliminationStep step{var, {}};
            std::vector<Row> pos, neg, next;
            for (auto& r : rows) {
                if (r.coef[var] > 0)
                    pos.push_back(r);
                else if (r.coef[var] < 0)
                    neg.push_back(r);
                else
                    next.push_back(std::move(r));
            }
            // After eliminating `round` variables, a combination of more than
            // round + 1 original rows is redundant (Chernikov/Kohler).
            for (const auto& p : pos)
                for (const auto& q : neg) {
                    Row c = combine(p, q, var);
                    if (c.history.size() <= round + 1)
                        next.push_back(std::move(c));
                }
            step.bounds = std::move(pos);
            step.bounds.insert(step.bounds.end(), std::make_move_iterator(neg.begin()),
                               std::make_move_iterator(neg.end()));
            steps.push_back(std::move(step));
            rows = std::move(next);
        }
        return sweep_constant_rows();
    }

    std::vector<Rational> solution() const
    {
        std::vector<Rational> x(vars, 0);
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            const std::size_t v = it->var;
            std::optional<Rational> lo, hi;
            for (const auto& r : it->bounds) {
                Rational rest = r.rhs;
                for (std::size_t i = 0; i < vars; ++i)
                    if (i != v)
                        rest -= r.coef[i] * x[i];
                Rational bound = rest / r.coef[v];
                if (r.coef[v] > 0) {
                    if (!lo || bound > *lo)
                        lo = bound;
                } else if (!hi || bound < *hi) {
                    hi = bound;
                }
            }
            if ((!lo || *lo <= 0) && (!hi || *hi >= 0))
                x[v] = 0;
            else if (lo)
                x[v] = *lo;
            else
                x[v] = *hi;
        }
        return x;
    }
};

std::vector<std::size_t> reduced_winning(const std::vector<Coalition>& winning)
{
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < winning.size(); ++i) {
        bool implied = false;
        for (std::size_t j = 0; j < winning.size() && !implied; ++j) {
            if (i == j)
                continue;
            // Strict subset, or an identical earlier entry.
            if (winning[j].is_subset_of(winning[i]) && (winning[j] != winning[i] || j < i))
                implied = true;
        }
        if (!implied)
            keep.push_back(i);
    }
    return keep;
}

std::string describe(const NotSeparable& p)
{
    auto count = [](const std::vector<Rational>& v) {
        return std::count_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    };
    Rational gap = 0;
    for (const auto& y : p.losing)
        gap += y;
    return "nonnegative combination of " + std::to_string(count(p.winning)) +
           " winning, " + std::to_string(count(p.losing)) + " losing and " +
           std::to_string(count(p.nonnegativity)) + " nonnegativity constraints yields 0 >= " +
           to_string(gap);
}

}  // namespace

void validate(const SeparationInstance& instance)
{
    if (instance.n < 0 || instance.n > Coalition::kMaxCapacity)
        throw InvalidArgument("member count " + std::to_string(instance.n) + " outside 0..64");
    if (instance.winning_constraints.empty())
        throw InvalidArgument("separation instance needs at least one winning constraint");
    if (instance.losing_targets.empty())
        throw InvalidArgument("separation instance needs at least one losing target");
    for (const auto& c : instance.winning_constraints)
        if (c.capacity() != instance.n)
            throw DimensionMismatch("winning constraint over " + std::to_string(c.capacity()) +
                                    " members in an instance on " + std::to_string(instance.n));
    for (const auto& c : instance.losing_targets)
        if (c.capacity() != instance.n)
            throw DimensionMismatch("losing target over " + std::to_string(c.capacity()) +
                                    " members in an instance on " + std::to_string(instance.n));
}

SeparationResult lp_feasible(const SeparationInstance& instance)
{
    validate(instance);
    const int n = instance.n;
    const std::size_t vars = static_cast<std::size_t>(n) + 1;  // weights, then quota
    const std::size_t quota = vars - 1;
    const auto winning_ids = reduced_winning(instance.winning_constraints);

    // Row ids: [0, n) nonnegativity, then reduced winning, then losing.
    FourierMotzkin fm{vars, {}, {}, std::nullopt};
    int id = 0;
    for (int m = 0; m < n; ++m) {
        Row r{std::vector<Rational>(vars, 0), 0, {{id++, 1}}};
        r.coef[static_cast<std::size_t>(m)] = 1;
        fm.rows.push_back(std::move(r));
    }
    for (auto w : winning_ids) {
        Row r{std::vector<Rational>(vars, 0), 0, {{id++, 1}}};
        for (int m : instance.winning_constraints[w].indices())
            r.coef[static_cast<std::size_t>(m - 1)] = 1;
        r.coef[quota] = -1;
        fm.rows.push_back(std::move(r));
    }
    for (const auto& l : instance.losing_targets) {
        Row r{std::vector<Rational>(vars, 0), 1, {{id++, 1}}};
        for (int m : l.indices())
            r.coef[static_cast<std::size_t>(m - 1)] = -1;
        r.coef[quota] = 1;
        fm.rows.push_back(std::move(r));
    }

    if (fm.run()) {
        std::vector<Rational> x = fm.solution();
        // Clear denominators; a scale factor >= 1 keeps the gap >= 1.
        mpz_class lcm = 1;
        for (const auto& v : x)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
        Separable s;
        for (std::size_t i = 0; i < quota; ++i)
            s.weights.push_back(Rational(x[i] * lcm));
        s.quota = Rational(x[quota] * lcm);
        if (!verify_witness(instance, s))
            throw ConstructionError("separation witness failed substitution check");
        return s;
    }

    NotSeparable proof;
    proof.nonnegativity.assign(static_cast<std::size_t>(n), 0);
    proof.winning.assign(instance.winning_constraints.size(), 0);
    proof.losing.assign(instance.losing_targets.size(), 0);
    const int winning_base = n;
    const int losing_base = n + static_cast<int>(winning_ids.size());
    for (const auto& [k, y] : fm.contradiction->history) {
        if (k < winning_base)
            proof.nonnegativity[static_cast<std::size_t>(k)] = y;
        else if (k < losing_base)
            proof.winning[winning_ids[static_cast<std::size_t>(k - winning_base)]] = y;
        else
            proof.losing[static_cast<std::size_t>(k - losing_base)] = y;
    }
    if (!verify_farkas(instance, proof))
        throw ConstructionError("separation infeasibility multipliers failed recombination check");
    proof.farkas_note = describe(proof);
    return proof;
}

bool verify_witness(const SeparationInstance& instance, const Separable& witness)
{
    if (witness.weights.size() != static_cast<std::size_t>(instance.n))
        return false;
    if (std::any_of(witness.weights.begin(), witness.weights.end(),
                    [](const Rational& w) { return w < 0; }))
        return false;
    auto weight = [&](const Coalition& c) {
        Rational s = 0;
        for (int m : c.indices())
            s += witness.weights[static_cast<std::size_t>(m - 1)];
        return s;
    };
    for (const auto& w : instance.winning_constraints)
        if (weight(w) < witness.quota)
            return false;
    for (const auto& l : instance.losing_targets)
        if (weight(l) > witness.quota - 1)
            return false;
    return true;
}

bool verify_farkas(const SeparationInstance& instance, const NotSeparable& proof)
{
    const auto n = static_cast<std::size_t>(instance.n);
    if (proof.nonnegativity.size() != n ||
        proof.winning.size() != instance.winning_constraints.size() ||
        proof.losing.size() != instance.losing_targets.size())
        return false;
    auto negative = [](const Rational& y) { return y < 0; };
    if (std::any_of(proof.nonnegativity.begin(), proof.nonnegativity.end(), negative) ||
        std::any_of(proof.winning.begin(), proof.winning.end(), negative) ||
        std::any_of(proof.losing.begin(), proof.losing.end(), negative))
        return false;

    std::vector<Rational> member(n, 0);
    Rational quota = 0;
    Rational rhs = 0;
    for (std::size_t m = 0; m < n; ++m)
        member[m] += proof.nonnegativity[m];
    for (std::size_t i = 0; i < proof.winning.size(); ++i) {
        for (int m : instance.winning_constraints[i].indices())
            member[static_cast<std::size_t>(m - 1)] += proof.winning[i];
        quota -= proof.winning[i];
    }
    for (std::size_t i = 0; i < proof.losing.size(); ++i) {
        for (int m : instance.losing_targets[i].indices())
            member[static_cast<std::size_t>(m - 1)] -= proof.losing[i];
        quota += proof.losing[i];
        rhs += proof.losing[i];
    }
    return is_zero(member) && quota == 0 && rhs > 0;
}

bool is_nonseparable_exhaustive(const SimpleGameExpr& g, const std::vector<Coalition>& losing_set)
{
    const int n = g.member_count();
    if (n > kSeparationMemberLimit)
        throw ResourceGuard("exhaustive separation refused: n = " + std::to_string(n) +
                            " exceeds the limit of " + std::to_string(kSeparationMemberLimit));
    if (losing_set.empty())
        throw InvalidArgument("empty losing set");
    for (const auto& l : losing_set)
        if (simple_contains(g, l))
            throw InvalidArgument("coalition " + l.to_string() + " is winning");

    SeparationInstance instance{n, minimal_winning(g), losing_set};
    // Nothing wins: any quota above every weight sum separates.
    if (instance.winning_constraints.empty())
        return false;
    return std::holds_alternative<NotSeparable>(lp_feasible(instance));
}

}  // namespace votedim

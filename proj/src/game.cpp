#include "votedim/game.hpp"

#include "votedim/error.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_set>

namespace votedim {

namespace {

void require_members(int expected, const Coalition& c)
{
    if (c.capacity() != expected)
        throw DimensionMismatch("coalition over " + std::to_string(c.capacity()) +
                                " members used with a game on " + std::to_string(expected));
}

void require_exhaustive(int n, const char* what)
{
    if (n > kExhaustiveMemberLimit)
        throw ResourceGuard(std::string(what) + " refused: n = " + std::to_string(n) +
                            " exceeds the exhaustive limit of " +
                            std::to_string(kExhaustiveMemberLimit));
}

std::vector<Coalition> reduce_to_minimal(std::vector<Coalition> sets)
{
    std::sort(sets.begin(), sets.end(), [](const Coalition& a, const Coalition& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    std::vector<Coalition> minimal;
    for (const auto& s : sets) {
        bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                     [&](const Coalition& m) { return m.is_subset_of(s); });
        if (!dominated)
            minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

// Weights scaled to a common integer denominator, when they fit in 64 bits.
struct IntegerForm {
    std::vector<std::int64_t> weights;
    mpz_class quota;
};

std::optional<IntegerForm> integer_form(const WeightedGame& g)
{
    mpz_class denominator = 1;
    for (const auto& w : g.weights())
        mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), w.get_den_mpz_t());
    mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), g.quota().get_den_mpz_t());

    IntegerForm form;
    mpz_class total = 0;
    for (const auto& w : g.weights()) {
        Rational scaled = w * denominator;
        mpz_class v = scaled.get_num();
        total += v;
        if (!v.fits_slong_p())
            return std::nullopt;
        form.weights.push_back(v.get_si());
    }
    if (total > mpz_class(std::numeric_limits<std::int64_t>::max() / 2))
        return std::nullopt;
    form.quota = Rational(g.quota() * denominator).get_num();
    return form;
}

std::vector<bool> weighted_table(const WeightedGame& g)
{
    const int n = g.member_count();
    const std::size_t count = std::size_t{1} << n;
    std::vector<bool> table(count);
    if (auto form = integer_form(g)) {
        std::vector<std::int64_t> sums(count, 0);
        for (std::size_t mask = 1; mask < count; ++mask) {
            int low = std::countr_zero(mask);
            sums[mask] = sums[mask & (mask - 1)] + form->weights[static_cast<std::size_t>(low)];
        }
        for (std::size_t mask = 0; mask < count; ++mask)
            table[mask] = mpz_class(static_cast<long>(sums[mask])) >= form->quota;
        return table;
    }
    for (std::size_t mask = 0; mask < count; ++mask)
        table[mask] = weighted_contains(g, Coalition::from_mask(mask, n));
    return table;
}

struct TableVisitor {
    int n;

    std::vector<bool> operator()(const ExplicitGame& g) const
    {
        const std::size_t count = std::size_t{1} << n;
        std::vector<bool> table(count, false);
        // Upward closure of the minimal sets, by increasing mask.
        for (const auto& m : g.minimal_winning())
            table[m.mask()] = true;
        for (std::size_t mask = 1; mask < count; ++mask) {
            if (table[mask])
                continue;
            for (std::uint64_t b = mask; b != 0; b &= b - 1) {
                std::uint64_t sub = mask & ~(b & ~(b - 1));
                if (table[sub]) {
                    table[mask] = true;
                    break;
                }
            }
        }
        return table;
    }
    std::vector<bool> operator()(const WeightedGame& g) const { return weighted_table(g); }
    std::vector<bool> operator()(const Intersection& g) const
    {
        std::vector<bool> table = winning_table(g.parts.front());
        for (std::size_t i = 1; i < g.parts.size(); ++i) {
            auto other = winning_table(g.parts[i]);
            for (std::size_t m = 0; m < table.size(); ++m)
                table[m] = table[m] && other[m];
        }
        return table;
    }
    std::vector<bool> operator()(const Union& g) const
    {
        std::vector<bool> table = winning_table(g.parts.front());
        for (std::size_t i = 1; i < g.parts.size(); ++i) {
            auto other = winning_table(g.parts[i]);
            for (std::size_t m = 0; m < table.size(); ++m)
                table[m] = table[m] || other[m];
        }
        return table;
    }
};

int composite_size(const std::vector<SimpleGameExpr>& parts, const char* kind)
{
    if (parts.empty())
        throw InvalidArgument(std::string(kind) + " of zero games");
    int n = parts.front().member_count();
    for (const auto& p : parts)
        if (p.member_count() != n)
            throw DimensionMismatch(std::string(kind) + " of games with different member counts");
    return n;
}

}  // namespace

WeightedGame::WeightedGame(std::vector<Rational> weights, Rational quota)
    : weights_(std::move(weights)), quota_(std::move(quota))
{
    if (weights_.size() > static_cast<std::size_t>(Coalition::kMaxCapacity))
        throw InvalidArgument("more than 64 members");
    // Callers may pass unreduced fractions such as Rational(14, 2).
    quota_.canonicalize();
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        weights_[i].canonicalize();
        if (weights_[i] < 0)
            throw InvalidArgument("negative weight for member " + std::to_string(i + 1));
    }
}

WeightedGame WeightedGame::uniform(int n, Rational quota)
{
    return WeightedGame(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)),
                        std::move(quota));
}

Rational WeightedGame::weight_of(const Coalition& c) const
{
    require_members(member_count(), c);
    Rational sum = 0;
    for (int i : c.indices())
        sum += weights_[static_cast<std::size_t>(i - 1)];
    return sum;
}

bool weighted_contains(const WeightedGame& g, const Coalition& c)
{
    return g.weight_of(c) >= g.quota();
}

ExplicitGame::ExplicitGame(int n, std::vector<Coalition> winning) : n_(n)
{
    if (n < 0 || n > Coalition::kMaxCapacity)
        throw InvalidArgument("member count " + std::to_string(n) + " outside 0..64");
    for (const auto& w : winning)
        require_members(n, w);
    std::sort(winning.begin(), winning.end());
    winning.erase(std::unique(winning.begin(), winning.end()), winning.end());

    std::unordered_set<std::uint64_t> listed;
    for (const auto& w : winning)
        listed.insert(w.mask());
    for (const auto& w : winning) {
        for (int m = 1; m <= n && listed_closed_; ++m)
            if (!w.contains(m) && !listed.contains(w.with(m).mask()))
                listed_closed_ = false;
        if (!listed_closed_)
            break;
    }
    minimal_ = reduce_to_minimal(std::move(winning));
}

ExplicitGame ExplicitGame::from_minimal(int n, std::vector<Coalition> minimal)
{
    ExplicitGame g;
    g.n_ = n;
    for (const auto& m : minimal)
        require_members(n, m);
    g.minimal_ = reduce_to_minimal(std::move(minimal));
    return g;
}

bool ExplicitGame::contains(const Coalition& c) const
{
    require_members(n_, c);
    return std::any_of(minimal_.begin(), minimal_.end(),
                       [&](const Coalition& m) { return m.is_subset_of(c); });
}

SimpleGameExpr::SimpleGameExpr(ExplicitGame g)
    : n_(g.member_count())
{
    node_ = std::make_shared<const Node>(std::move(g));
}

SimpleGameExpr::SimpleGameExpr(WeightedGame g)
    : n_(g.member_count())
{
    node_ = std::make_shared<const Node>(std::move(g));
}

SimpleGameExpr::SimpleGameExpr(Intersection g)
    : n_(composite_size(g.parts, "intersection"))
{
    node_ = std::make_shared<const Node>(std::move(g));
}

SimpleGameExpr::SimpleGameExpr(Union g)
    : n_(composite_size(g.parts, "union"))
{
    node_ = std::make_shared<const Node>(std::move(g));
}

bool simple_contains(const SimpleGameExpr& g, const Coalition& c)
{
    require_members(g.member_count(), c);
    struct Visitor {
        const Coalition& c;
        bool operator()(const ExplicitGame& e) const { return e.contains(c); }
        bool operator()(const WeightedGame& w) const { return weighted_contains(w, c); }
        bool operator()(const Intersection& i) const
        {
            return std::all_of(i.parts.begin(), i.parts.end(),
                               [&](const SimpleGameExpr& p) { return simple_contains(p, c); });
        }
        bool operator()(const Union& u) const
        {
            return std::any_of(u.parts.begin(), u.parts.end(),
                               [&](const SimpleGameExpr& p) { return simple_contains(p, c); });
        }
    };
    return std::visit(Visitor{c}, g.node());
}

bool check_monotone(const SimpleGameExpr& g)
{
    const auto* e = std::get_if<ExplicitGame>(&g.node());
    if (e == nullptr)
        throw InvalidArgument("check_monotone requires an explicit game");
    require_exhaustive(g.member_count(), "check_monotone");
    return e->listed_upward_closed();
}

std::vector<bool> winning_table(const SimpleGameExpr& g)
{
    require_exhaustive(g.member_count(), "exhaustive evaluation");
    return std::visit(TableVisitor{g.member_count()}, g.node());
}

ExplicitGame to_explicit(const SimpleGameExpr& g)
{
    if (const auto* e = std::get_if<ExplicitGame>(&g.node()))
        return *e;
    return ExplicitGame::from_minimal(g.member_count(), minimal_winning(g));
}

std::vector<Coalition> minimal_winning(const SimpleGameExpr& g)
{
    if (const auto* e = std::get_if<ExplicitGame>(&g.node()))
        return e->minimal_winning();

    const int n = g.member_count();
    const std::vector<bool> table = winning_table(g);
    std::vector<Coalition> out;
    for (std::size_t mask = 0; mask < table.size(); ++mask) {
        if (!table[mask])
            continue;
        bool minimal = true;
        for (std::uint64_t b = mask; b != 0 && minimal; b &= b - 1)
            if (table[mask & ~(b & ~(b - 1))])
                minimal = false;
        if (minimal)
            out.push_back(Coalition::from_mask(mask, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace votedim

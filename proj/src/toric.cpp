#include "mnc/toric.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "mnc/primes.hpp"

namespace mnc::toric {

VariableUniverse::VariableUniverse(std::vector<int> parts) : parts_(std::move(parts))
{
    std::sort(parts_.begin(), parts_.end());
    parts_.erase(std::unique(parts_.begin(), parts_.end()), parts_.end());
    if (parts_.empty())
        throw DomainError("the part set S must be nonempty");
    if (parts_.front() < 1)
        throw DomainError("parts must be positive");
    primes_ = primes_up_to(parts_.back());
    for (std::size_t i = 0; i < primes_.size(); ++i)
        weights_.push_back(0);
    weights_.push_back(1);
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it)
        weights_.push_back(*it);
}

std::size_t VariableUniverse::x_index(int prime) const
{
    auto it = std::lower_bound(primes_.begin(), primes_.end(), prime);
    if (it == primes_.end() || *it != prime)
        throw DomainError("no variable x_" + std::to_string(prime));
    return static_cast<std::size_t>(primes_.end() - it) - 1;
}

std::size_t VariableUniverse::q_index(int part) const
{
    auto it = std::lower_bound(parts_.begin(), parts_.end(), part);
    if (it == parts_.end() || *it != part)
        throw DomainError("no variable q_" + std::to_string(part));
    return q_block() + static_cast<std::size_t>(parts_.end() - it) - 1;
}

int VariableUniverse::part_at(std::size_t i) const
{
    if (i < q_block() || i >= size())
        throw DomainError("index is not a part variable");
    return parts_[parts_.size() - 1 - (i - q_block())];
}

std::string VariableUniverse::name(std::size_t i) const
{
    if (i < primes_.size())
        return "x_" + std::to_string(primes_[primes_.size() - 1 - i]);
    if (i == t_index())
        return "q";
    return "q_" + std::to_string(part_at(i));
}

Monomial::Monomial(std::vector<int> exps, std::span<const int> weights) : e_(std::move(exps))
{
    if (e_.size() != weights.size())
        throw DomainError("monomial length does not match the variable universe");
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] < 0)
            throw DomainError("negative exponent");
        deg_ += static_cast<long>(e_[i]) * weights[i];
    }
}

bool Monomial::is_one() const
{
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    std::vector<int> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = a.e_[i] + b.e_[i];
    return Monomial(std::move(e), a.deg_ + b.deg_);
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    std::vector<int> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = a.e_[i] - b.e_[i];
        if (e[i] < 0)
            throw InvariantViolation("monomial division is not exact");
    }
    return Monomial(std::move(e), a.deg_ - b.deg_);
}

Monomial gcd(const Monomial& a, const Monomial& b, std::span<const int> weights)
{
    std::vector<int> e(a.e_.size());
    long deg = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = std::min(a.e_[i], b.e_[i]);
        deg += static_cast<long>(e[i]) * weights[i];
    }
    return Monomial(std::move(e), deg);
}

Monomial lcm(const Monomial& a, const Monomial& b, std::span<const int> weights)
{
    std::vector<int> e(a.e_.size());
    long deg = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = std::max(a.e_[i], b.e_[i]);
        deg += static_cast<long>(e[i]) * weights[i];
    }
    return Monomial(std::move(e), deg);
}

bool divides(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

bool coprime(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            return false;
    return true;
}

int compare(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

bool in_part_ring(const Monomial& m, const VariableUniverse& u)
{
    for (std::size_t i = 0; i < u.q_block(); ++i)
        if (m[i] != 0)
            return false;
    return true;
}

std::optional<Binomial> make_binomial(Monomial a, Monomial b)
{
    int c = compare(a, b);
    if (c == 0)
        return std::nullopt;
    if (c < 0)
        std::swap(a, b);
    return Binomial{std::move(a), std::move(b)};
}

std::string to_string(const Monomial& m, const VariableUniverse& u)
{
    // Part variables ascending, then q, then primes ascending.
    std::vector<std::size_t> order;
    for (std::size_t i = u.size(); i-- > u.q_block();)
        order.push_back(i);
    order.push_back(u.t_index());
    for (std::size_t i = u.primes().size(); i-- > 0;)
        order.push_back(i);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i : order) {
        if (m[i] == 0)
            continue;
        if (!first)
            os << ' ';
        first = false;
        os << u.name(i);
        if (m[i] != 1)
            os << '^' << m[i];
    }
    return first ? "1" : os.str();
}

std::string to_string(const Binomial& b, const VariableUniverse& u)
{
    return to_string(b.lead, u) + " - " + to_string(b.trail, u);
}

std::vector<Binomial> toric_generators(const VariableUniverse& u)
{
    std::vector<Binomial> out;
    for (int j : u.parts()) {
        std::vector<int> qj(u.size(), 0), image(u.size(), 0);
        qj[u.q_index(j)] = 1;
        image[u.t_index()] = j;
        for (int p : u.primes())
            image[u.x_index(p)] = legendre_exponent(j, p);
        auto b = make_binomial(Monomial(std::move(qj), u.weights()), Monomial(std::move(image), u.weights()));
        out.push_back(std::move(*b));
    }
    return out;
}

std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g, std::span<const int> weights)
{
    const Monomial l = lcm(f.lead, g.lead, weights);
    // (l/f.lead) f - (l/g.lead) g = (l/g.lead) g.trail - (l/f.lead) f.trail
    return make_binomial((l / g.lead) * g.trail, (l / f.lead) * f.trail);
}

Monomial normal_form(Monomial m, std::span<const Binomial> basis)
{
    for (;;) {
        auto it = std::find_if(basis.begin(), basis.end(), [&](const Binomial& b) { return divides(b.lead, m); });
        if (it == basis.end())
            return m;
        m = (m / it->lead) * it->trail;
    }
}

std::optional<Binomial> normal_form(const Binomial& b, std::span<const Binomial> basis)
{
    return make_binomial(normal_form(b.lead, basis), normal_form(b.trail, basis));
}

namespace {

void check_homogeneous(const Binomial& b)
{
    if (b.lead.degree() != b.trail.degree())
        throw InvariantViolation("binomial is not weighted-homogeneous");
}

struct CriticalPair {
    long degree;
    Monomial lcm;
    std::size_t i, j;
};

struct PairOrder {
    bool operator()(const CriticalPair& a, const CriticalPair& b) const
    {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        int c = compare(a.lcm, b.lcm);
        if (c != 0)
            return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    }
};

} // namespace

std::vector<Binomial> buchberger(std::vector<Binomial> gens, std::span<const int> weights, std::size_t pair_budget,
                                 BuchbergerStats* stats)
{
    BuchbergerStats local;
    BuchbergerStats& st = stats ? *stats : local;
    std::vector<Binomial> g;
    for (auto& b : gens) {
        check_homogeneous(b);
        if (auto r = normal_form(b, g))
            g.push_back(std::move(*r));
    }

    std::set<CriticalPair, PairOrder> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = lcm(g[i].lead, g[j].lead, weights);
            long d = l.degree();
            queue.insert(CriticalPair{d, std::move(l), i, j});
            pending.emplace(i, j);
        }
    };
    for (std::size_t j = 1; j < g.size(); ++j)
        add_pairs(j);

    while (!queue.empty()) {
        CriticalPair cp = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({cp.i, cp.j});
        if (++st.pairs_considered > pair_budget)
            throw BudgetExceeded("Buchberger pair budget of " + std::to_string(pair_budget) + " exhausted");

        if (coprime(g[cp.i].lead, g[cp.j].lead)) {
            ++st.product_criterion;
            continue;
        }
        bool chained = false;
        for (std::size_t k = 0; k < g.size() && !chained; ++k) {
            if (k == cp.i || k == cp.j || !divides(g[k].lead, cp.lcm))
                continue;
            auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            chained = !pending.count(key(cp.i, k)) && !pending.count(key(cp.j, k));
        }
        if (chained) {
            ++st.chain_criterion;
            continue;
        }

        auto s = s_binomial(g[cp.i], g[cp.j], weights);
        if (!s) {
            ++st.reductions_to_zero;
            continue;
        }
        check_homogeneous(*s);
        auto r = normal_form(*s, g);
        if (!r) {
            ++st.reductions_to_zero;
            continue;
        }
        check_homogeneous(*r);
        g.push_back(std::move(*r));
        add_pairs(g.size() - 1);
    }

    // Minimal basis: a lead divisible by a smaller kept lead is redundant.
    std::sort(g.begin(), g.end(), [](const Binomial& a, const Binomial& b) { return term_less(a.lead, b.lead); });
    std::vector<Binomial> minimal;
    for (auto& b : g) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                     [&](const Binomial& k) { return divides(k.lead, b.lead); });
        if (!redundant)
            minimal.push_back(std::move(b));
    }
    std::vector<Binomial> reduced;
    reduced.reserve(minimal.size());
    for (const auto& b : minimal) {
        Monomial tail = normal_form(b.trail, minimal);
        if (tail == b.lead)
            throw InvariantViolation("basis element reduced to zero during interreduction");
        reduced.push_back(Binomial{b.lead, std::move(tail)});
    }
    return reduced;
}

std::vector<Binomial> eliminate(std::span<const Binomial> basis, const VariableUniverse& u)
{
    std::vector<Binomial> out;
    for (const auto& b : basis)
        if (in_part_ring(b.lead, u) && in_part_ring(b.trail, u))
            out.push_back(b);
    return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens)
{
    std::sort(gens.begin(), gens.end(), term_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (auto& m : gens) {
        bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& k) { return divides(k, m); });
        if (!redundant)
            out.push_back(std::move(m));
    }
    return out;
}

std::vector<Monomial> leading_terms(std::span<const Binomial> g)
{
    std::vector<Monomial> leads;
    for (const auto& b : g)
        leads.push_back(b.lead);
    return minimalize(std::move(leads));
}

} // namespace mnc::toric

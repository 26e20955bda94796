#include "skind/exact.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

#include "skind/error.hpp"
#include "skind/walks.hpp"

namespace skind {

namespace {

using Clock = std::chrono::steady_clock;

// Maximum clique in the complement of g, which is a maximum independent set
// of g. Vertices are relabelled so that bit order is branching order.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, const ExactBudget& budget) : budget_(budget), start_(Clock::now())
    {
        const std::size_t n = g.order();
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), Vertex{0});
        // Complement degree descending, index breaks ties.
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree_of(a) < g.degree_of(b); });
        std::vector<Vertex> pos(n);
        for (std::size_t i = 0; i < n; ++i)
            pos[order_[i]] = static_cast<Vertex>(i);
        adj_.assign(n, Bitset(n));
        for (std::size_t i = 0; i < n; ++i) {
            Bitset& row = adj_[i];
            row.set_all();
            row.reset(i);
            for (Vertex w : g.neighbors(order_[i]))
                row.reset(pos[w]);
        }
    }

    ExactResult run()
    {
        const std::size_t n = adj_.size();
        ExactResult out;
        if (n == 0)
            return out;
        greedy_start();
        Bitset all(n);
        all.set_all();
        try {
            if (!done()) {
                if (budget_.vertex_transitive)
                    expand_from(0, all);
                else
                    expand(all);
            }
        } catch (const Stop&) {
        }
        out.alpha_k = best_.size();
        for (std::size_t v : best_)
            out.witness.push_back(order_[v]);
        std::sort(out.witness.begin(), out.witness.end());
        out.nodes_explored = nodes_;
        out.timed_out = timed_out_;
        return out;
    }

private:
    struct Stop {};

    bool done() const { return budget_.known_upper && best_.size() >= *budget_.known_upper; }

    void greedy_start()
    {
        Bitset cand(adj_.size());
        cand.set_all();
        std::vector<std::size_t> set;
        for (std::size_t v = cand.first(); v < cand.size(); v = cand.first()) {
            set.push_back(v);
            cand &= adj_[v];
        }
        best_ = set;
    }

    void tick()
    {
        ++nodes_;
        if (nodes_ >= budget_.max_nodes) {
            timed_out_ = true;
            throw Stop{};
        }
        if ((nodes_ & 1023) == 0) {
            std::chrono::duration<double> el = Clock::now() - start_;
            if (el.count() > budget_.max_seconds) {
                timed_out_ = true;
                throw Stop{};
            }
        }
    }

    // Greedy sequential colouring of cand; fills vertices in colour order with
    // their colour numbers (an upper bound on the clique within the prefix).
    void colour(const Bitset& cand, std::vector<std::size_t>& verts, std::vector<std::size_t>& colours) const
    {
        Bitset uncoloured = cand;
        std::size_t k = 0;
        while (!uncoloured.none()) {
            ++k;
            Bitset q = uncoloured;
            for (std::size_t v = q.first(); v < q.size(); v = q.first()) {
                q.reset(v);
                q.subtract(adj_[v]);
                uncoloured.reset(v);
                verts.push_back(v);
                colours.push_back(k);
            }
        }
    }

    void expand_from(std::size_t v, const Bitset& all)
    {
        tick();
        current_.push_back(v);
        Bitset next = all;
        next &= adj_[v];
        if (next.none()) {
            if (current_.size() > best_.size())
                best_ = current_;
        } else {
            expand(std::move(next));
        }
        current_.pop_back();
    }

    void expand(Bitset cand)
    {
        tick();
        std::vector<std::size_t> verts, colours;
        verts.reserve(cand.count());
        colours.reserve(verts.capacity());
        colour(cand, verts, colours);
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (current_.size() + colours[i] <= best_.size())
                return;
            const std::size_t v = verts[i];
            current_.push_back(v);
            Bitset next = cand;
            next &= adj_[v];
            if (next.none()) {
                if (current_.size() > best_.size()) {
                    best_ = current_;
                    if (done())
                        throw Stop{};
                }
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
            cand.reset(v);
        }
    }

    ExactBudget budget_;
    Clock::time_point start_;
    std::vector<Vertex> order_;
    std::vector<Bitset> adj_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

void check_order(const Graph& g)
{
    if (g.order() > kExactCap)
        throw CapExceeded("exact solver is limited to " + std::to_string(kExactCap) + " vertices");
}

} // namespace

ExactResult maximum_independent_set(const Graph& g, const ExactBudget& budget)
{
    check_order(g);
    return CliqueSearch(g, budget).run();
}

ExactResult exact_alpha_k(const Graph& g, int k, const ExactBudget& budget)
{
    if (k < 1)
        throw PreconditionError("k must be positive");
    check_order(g);
    ExactResult r = k == 1 ? maximum_independent_set(g, budget) : maximum_independent_set(power_graph(g, k), budget);
    r.k = k;
    return r;
}

bool verify_independent(const Graph& g, std::span<const Vertex> s, int k)
{
    for (Vertex v : s)
        if (v >= g.order())
            throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    std::vector<bool> member(g.order(), false);
    for (Vertex v : s) {
        if (member[v])
            return false;  // a repeated vertex is at distance 0 from itself
        member[v] = true;
    }
    for (Vertex v : s) {
        auto dist = bfs_distances(g, v, k);
        for (Vertex w : s)
            if (w != v && dist[w] >= 0)
                return false;
    }
    return true;
}

} // namespace skind

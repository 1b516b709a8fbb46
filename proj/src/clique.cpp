#include "shiftdec/clique.hpp"

#include <algorithm>

namespace shiftdec {

void BitGraph::add_edge(std::size_t u, std::size_t v)
{
    if (u == v)
        return;
    adj_[u].set(v);
    adj_[v].set(u);
}

namespace {

using Bits = BitGraph::Bits;

class BronKerbosch {
public:
    BronKerbosch(const BitGraph & graph, const CliqueVisitor & visit) : graph_(graph), visit_(visit) {}

    std::uint64_t run()
    {
        const std::size_t n = graph_.size();
        Bits p(n), x(n);
        p.set();
        std::vector<std::size_t> r;
        expand(r, p, x);
        return nodes_;
    }

private:
    void expand(std::vector<std::size_t> & r, Bits p, Bits x)
    {
        ++nodes_;
        if (p.none()) {
            if (x.none()) {
                auto sorted = r;
                std::sort(sorted.begin(), sorted.end());
                visit_(sorted);
            }
            return;
        }
        // Pivot on the vertex of P u X with most neighbours in P.
        std::size_t pivot = Bits::npos, best = 0;
        const Bits px = p | x;
        for (auto u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
            const std::size_t deg = (p & graph_.neighbours(u)).count();
            if (pivot == Bits::npos || deg > best) {
                pivot = u;
                best = deg;
            }
        }
        const Bits branch = p - graph_.neighbours(pivot);
        for (auto v = branch.find_first(); v != Bits::npos; v = branch.find_next(v)) {
            r.push_back(v);
            expand(r, p & graph_.neighbours(v), x & graph_.neighbours(v));
            r.pop_back();
            p.reset(v);
            x.set(v);
        }
    }

    const BitGraph & graph_;
    const CliqueVisitor & visit_;
    std::uint64_t nodes_ = 0;
};

class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(const BitGraph & graph) : graph_(graph) {}

    MaxClique run()
    {
        Bits p(graph_.size());
        p.set();
        std::vector<std::size_t> c;
        if (graph_.size() > 0)
            expand(c, p);
        std::sort(best_.begin(), best_.end());
        return {best_, nodes_};
    }

private:
    void expand(std::vector<std::size_t> & c, Bits p)
    {
        ++nodes_;
        std::vector<std::size_t> order;
        std::vector<std::size_t> colour;
        order.reserve(p.count());
        colour.reserve(p.count());
        Bits uncoloured = p;
        for (std::size_t k = 1; uncoloured.any(); ++k) {
            Bits q = uncoloured;
            for (auto v = q.find_first(); v != Bits::npos; v = q.find_first()) {
                q.reset(v);
                q -= graph_.neighbours(v);
                uncoloured.reset(v);
                order.push_back(v);
                colour.push_back(k);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (c.size() + colour[i] <= best_.size())
                return;
            const std::size_t v = order[i];
            c.push_back(v);
            const Bits next = p & graph_.neighbours(v);
            if (next.none()) {
                if (c.size() > best_.size())
                    best_ = c;
            } else {
                expand(c, next);
            }
            c.pop_back();
            p.reset(v);
        }
    }

    const BitGraph & graph_;
    std::vector<std::size_t> best_;
    std::uint64_t nodes_ = 0;
};

} // namespace

std::uint64_t enumerate_maximal_cliques(const BitGraph & graph, const CliqueVisitor & visit)
{
    return BronKerbosch(graph, visit).run();
}

MaxClique maximum_clique(const BitGraph & graph)
{
    return MaxCliqueSearch(graph).run();
}

} // namespace shiftdec

#include "krsl2/web.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace krsl2 {

Web Web::from_resolution(int num_labels, const std::vector<CrossingEdges>& crossings,
                         const std::vector<bool>& dumbbell, int free_loops) {
    const int n = num_labels;
    std::vector<int> next(n, -1);          // label continued through a parallel smoothing
    std::vector<int> head_merge(n, -1);    // label ends at the merge of this crossing
    std::vector<int> tail_split(n, -1);    // label starts at the split of this crossing
    for (std::size_t c = 0; c < crossings.size(); ++c) {
        const auto& x = crossings[c];
        if (dumbbell.at(c)) {
            head_merge.at(x.bl) = head_merge.at(x.br) = static_cast<int>(c);
            tail_split.at(x.tl) = tail_split.at(x.tr) = static_cast<int>(c);
        } else {
            next.at(x.bl) = x.tl;
            next.at(x.br) = x.tr;
        }
    }

    std::vector<std::vector<int>> chains;
    std::vector<bool> closed;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (tail_split[s] < 0 || seen[s]) continue;
        std::vector<int> chain;
        int cur = s;
        while (true) {
            if (seen[cur]) throw std::logic_error("web: inconsistent resolution");
            seen[cur] = true;
            chain.push_back(cur);
            if (head_merge[cur] >= 0) break;
            cur = next[cur];
            if (cur < 0) throw std::logic_error("web: dangling label");
        }
        chains.push_back(chain);
        closed.push_back(false);
    }
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> chain;
        int cur = s;
        while (!seen[cur]) {
            seen[cur] = true;
            chain.push_back(cur);
            cur = next[cur];
            if (cur < 0) throw std::logic_error("web: dangling label");
        }
        if (cur != s) throw std::logic_error("web: label cycle does not close");
        chains.push_back(chain);
        closed.push_back(true);
    }

    std::vector<std::size_t> order(chains.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return *std::min_element(chains[a].begin(), chains[a].end()) < *std::min_element(chains[b].begin(), chains[b].end());
    });

    Web w;
    w.num_labels_ = n;
    w.edge_of_label_.assign(n, -1);
    std::map<int, int> merge_of, split_of;
    for (std::size_t c = 0; c < crossings.size(); ++c) {
        if (!dumbbell[c]) continue;
        WebVertex m, s;
        m.kind = WebVertex::Kind::merge;
        s.kind = WebVertex::Kind::split;
        m.crossing = s.crossing = static_cast<int>(c);
        merge_of[static_cast<int>(c)] = static_cast<int>(w.vertices_.size());
        w.vertices_.push_back(m);
        split_of[static_cast<int>(c)] = static_cast<int>(w.vertices_.size());
        w.vertices_.push_back(s);
    }
    for (std::size_t k : order) {
        WebEdge e;
        e.thickness = 1;
        e.pd = chains[k];
        int id = static_cast<int>(w.edges_.size());
        if (!closed[k]) {
            int first = chains[k].front(), last = chains[k].back();
            e.src = split_of.at(tail_split[first]);
            e.dst = merge_of.at(head_merge[last]);
            auto& sv = w.vertices_[e.src];
            const auto& xs = crossings[tail_split[first]];
            (first == xs.tl ? sv.left : sv.right) = id;
            auto& mv = w.vertices_[e.dst];
            const auto& xm = crossings[head_merge[last]];
            (last == xm.bl ? mv.left : mv.right) = id;
        }
        for (int l : chains[k]) w.edge_of_label_[l] = id;
        w.edges_.push_back(e);
    }
    for (const auto& [c, m] : merge_of) {
        WebEdge t;
        t.thickness = 2;
        t.src = m;
        t.dst = split_of.at(c);
        int id = static_cast<int>(w.edges_.size());
        w.vertices_[m].thick = id;
        w.vertices_[t.dst].thick = id;
        w.edges_.push_back(t);
    }
    for (int i = 0; i < free_loops; ++i) w.edges_.push_back(WebEdge{});
    return w;
}

Web Web::circles(int count) { return from_resolution(0, {}, {}, count); }

std::vector<Web::Dumbbell> Web::dumbbells() const {
    std::vector<Dumbbell> out;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        const auto& m = vertices_[v];
        if (m.kind != WebVertex::Kind::merge) continue;
        int s = edges_[m.thick].dst;
        const auto& sv = vertices_[s];
        out.push_back({m.crossing, static_cast<int>(v), s, m.thick, m.left, m.right, sv.left, sv.right});
    }
    return out;
}

int Web::num_circles() const {
    int k = 0;
    for (const auto& e : edges_)
        if (e.src < 0) ++k;
    return k;
}

bool Web::flow_ok() const {
    for (const auto& v : vertices_) {
        if (v.thick < 0 || v.left < 0 || v.right < 0) return false;
        int sum = edges_[v.left].thickness + edges_[v.right].thickness;
        if (edges_[v.thick].thickness != sum) return false;
        bool merge = v.kind == WebVertex::Kind::merge;
        int self = static_cast<int>(&v - vertices_.data());
        if (merge && (edges_[v.left].dst != self || edges_[v.right].dst != self || edges_[v.thick].src != self)) return false;
        if (!merge && (edges_[v.left].src != self || edges_[v.right].src != self || edges_[v.thick].dst != self)) return false;
    }
    return true;
}

std::string Web::describe() const {
    std::ostringstream os;
    os << "web: " << edges_.size() << " edges, " << vertices_.size() << " vertices, " << num_circles() << " circles";
    return os.str();
}

GreenDottedWeb greendot_normalize(const GreenDottedWeb& g) {
    std::map<std::pair<int, int>, mpq_class> acc;
    for (const auto& d : g.dots) acc[{d.host, d.type == DotType::hollow ? 0 : 1}] += d.mult;
    GreenDottedWeb out{g.web, {}};
    for (const auto& [key, m] : acc) {
        if (m == 0) continue;
        out.dots.push_back(GreenDot{key.first, key.second == 0 ? DotType::hollow : DotType::solid, m});
    }
    return out;
}

}  // namespace krsl2

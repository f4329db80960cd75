#include "krsl2/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace krsl2 {

namespace {

int find_root(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

void check_planar(const LinkDiagram::PD& pd, const std::vector<std::array<int, 2>>& occ) {
    const int nc = static_cast<int>(pd.size());
    const int nl = static_cast<int>(occ.size());
    std::vector<int> parent(nc);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& o : occ) parent[find_root(parent, o[0] / 4)] = find_root(parent, o[1] / 4);

    // Faces of the rotation system: follow an edge, then turn to the next
    // slot counterclockwise at the arrival crossing.
    std::vector<bool> used(4 * nc, false);
    std::map<int, int> faces, verts, edges;
    for (int c = 0; c < nc; ++c) ++verts[find_root(parent, c)];
    for (int l = 0; l < nl; ++l) ++edges[find_root(parent, occ[l][0] / 4)];
    for (int start = 0; start < 4 * nc; ++start) {
        if (used[start]) continue;
        ++faces[find_root(parent, start / 4)];
        int dart = start;
        while (!used[dart]) {
            used[dart] = true;
            int label = pd[dart / 4][dart % 4];
            int other = occ[label][0] == dart ? occ[label][1] : occ[label][0];
            dart = 4 * (other / 4) + (other % 4 + 1) % 4;
        }
    }
    for (const auto& [root, v] : verts)
        if (v - edges[root] + faces[root] != 2) throw DiagramError("PD code is not planar");
}

}  // namespace

LinkDiagram LinkDiagram::from_pd(const PD& input, int free_loops, const std::vector<int>* heads) {
    LinkDiagram D;
    D.free_loops_ = free_loops;
    if (free_loops < 0) throw DiagramError("negative number of free loops");

    std::map<int, int> count;
    for (const auto& x : input)
        for (int l : x) ++count[l];
    for (const auto& [l, k] : count) {
        if (k == 1) throw DiagramError("label " + std::to_string(l) + " is dangling");
        if (k > 2) throw DiagramError("label " + std::to_string(l) + " appears " + std::to_string(k) + " times");
    }
    std::map<int, int> renum;
    for (const auto& [l, k] : count) {
        renum[l] = static_cast<int>(D.original_.size());
        D.original_.push_back(l);
    }
    const int nl = static_cast<int>(D.original_.size());
    const int nc = static_cast<int>(input.size());
    for (const auto& x : input) D.pd_.push_back({renum[x[0]], renum[x[1]], renum[x[2]], renum[x[3]]});

    std::vector<std::array<int, 2>> occ(nl, {-1, -1});
    for (int c = 0; c < nc; ++c)
        for (int s = 0; s < 4; ++s) {
            auto& o = occ[D.pd_[c][s]];
            (o[0] < 0 ? o[0] : o[1]) = 4 * c + s;
        }
    check_planar(D.pd_, occ);

    auto other = [&](int label, int o) { return occ[label][0] == o ? occ[label][1] : occ[label][0]; };
    auto label_at = [&](int o) { return D.pd_[o / 4][o % 4]; };
    auto through = [](int o) { return 4 * (o / 4) + (o % 4 + 2) % 4; };

    D.head_.assign(nl, -1);
    D.comp_.assign(nl, -1);
    if (heads) {
        if (static_cast<int>(heads->size()) != nl) throw DiagramError("orientation hint has wrong size");
        D.head_ = *heads;
    }
    for (int s = 0; s < nl; ++s) {
        if (D.comp_[s] >= 0) continue;
        const int comp = D.num_components_++;
        // Walk with an arbitrary direction, then fix it.
        std::vector<int> labels, hd;
        int label = s, head = occ[s][1];
        if (heads) head = D.head_[s];
        while (D.comp_[label] < 0) {
            D.comp_[label] = comp;
            labels.push_back(label);
            hd.push_back(head);
            int tail = through(head);
            label = label_at(tail);
            head = other(label, tail);
        }
        if (!heads) {
            int agree = 0, disagree = 0;
            for (int h : hd) {
                if (h % 4 == 0) ++agree;
                if (h % 4 == 2) ++disagree;
            }
            bool flip = false;
            if (agree && disagree) throw DiagramError("inconsistent orientation along a component");
            if (disagree) {
                flip = true;
            } else if (!agree) {
                // No under-passes: labels increase along the strand.
                auto it = std::min_element(labels.begin(), labels.end());
                std::size_t i = static_cast<std::size_t>(it - labels.begin());
                int next = labels[(i + 1) % labels.size()];
                int prev = labels[(i + labels.size() - 1) % labels.size()];
                flip = next > prev;
            }
            for (std::size_t i = 0; i < labels.size(); ++i)
                D.head_[labels[i]] = flip ? other(labels[i], hd[i]) : hd[i];
        }
        D.base_point_.push_back(*std::min_element(labels.begin(), labels.end()));
    }
    for (int k = 0; k < free_loops; ++k) D.base_point_.push_back(nl + k);
    D.num_components_ += free_loops;

    D.succ_.assign(nl, -1);
    for (int l = 0; l < nl; ++l) D.succ_[l] = label_at(through(D.head_[l]));

    for (int c = 0; c < nc; ++c) {
        const auto& x = D.pd_[c];
        auto head_here = [&](int s) { return D.head_[x[s]] == 4 * c + s; };
        if (!head_here(0) || head_here(2)) throw DiagramError("under-strand of crossing " + std::to_string(c) + " is not oriented i -> k");
        bool over_l_to_j = head_here(3);
        if (over_l_to_j == head_here(1)) throw DiagramError("over-strand of crossing " + std::to_string(c) + " is inconsistent");
        // i bottom, j right, k top, l left; rotate so both strands point up.
        if (over_l_to_j) {
            D.sign_.push_back(1);
            D.edges_.push_back({x[3], x[0], x[2], x[1]});
        } else {
            D.sign_.push_back(-1);
            D.edges_.push_back({x[0], x[1], x[3], x[2]});
        }
    }
    return D;
}

LinkDiagram LinkDiagram::from_braid(const std::vector<int>& word, int strands) {
    if (strands < 1) throw DiagramError("braid needs at least one strand");
    std::vector<int> cur(strands);
    std::iota(cur.begin(), cur.end(), 0);
    std::vector<bool> touched(strands, false);
    int next = strands;
    PD pd;
    std::vector<std::pair<int, int>> head_of;  // (label, occurrence)
    for (int g : word) {
        int i = std::abs(g) - 1;
        if (g == 0 || i + 1 >= strands) throw DiagramError("braid generator " + std::to_string(g) + " out of range");
        int c = static_cast<int>(pd.size());
        int ni = next++, nj = next++;
        if (g > 0) {
            pd.push_back({cur[i + 1], nj, ni, cur[i]});
            head_of.push_back({cur[i + 1], 4 * c});
            head_of.push_back({cur[i], 4 * c + 3});
        } else {
            pd.push_back({cur[i], cur[i + 1], nj, ni});
            head_of.push_back({cur[i], 4 * c});
            head_of.push_back({cur[i + 1], 4 * c + 1});
        }
        // The strand at i moves to i + 1 and vice versa.
        cur[i] = ni;
        cur[i + 1] = nj;
        touched[i] = touched[i + 1] = true;
    }
    std::map<int, int> close;
    for (int p = 0; p < strands; ++p)
        if (touched[p]) close[cur[p]] = p;
    int loops = 0;
    for (int p = 0; p < strands; ++p) loops += touched[p] ? 0 : 1;
    for (auto& x : pd)
        for (int& l : x)
            if (auto it = close.find(l); it != close.end()) l = it->second;

    std::map<int, int> renum;
    for (const auto& x : pd)
        for (int l : x) renum.emplace(l, 0);
    int k = 0;
    for (auto& [l, r] : renum) r = k++;
    std::vector<int> heads(renum.size(), -1);
    for (auto [l, o] : head_of) {
        if (auto it = close.find(l); it != close.end()) l = it->second;
        heads[renum.at(l)] = o;
    }
    return from_pd(pd, loops, &heads);
}

int LinkDiagram::component_of(int label) const {
    if (label < num_labels()) return comp_.at(label);
    return num_components_ - free_loops_ + (label - num_labels());
}

int LinkDiagram::writhe() const { return std::accumulate(sign_.begin(), sign_.end(), 0); }

std::vector<int> LinkDiagram::self_writhe() const {
    std::vector<int> w(num_components_, 0);
    for (int c = 0; c < num_crossings(); ++c) {
        int a = comp_[pd_[c][0]], b = comp_[pd_[c][1]];
        if (a == b) w[a] += sign_[c];
    }
    return w;
}

LinkDiagram LinkDiagram::mirror() const {
    PD pd;
    std::vector<int> heads(num_labels());
    for (int c = 0; c < num_crossings(); ++c) {
        const auto& x = pd_[c];
        // The old over-strand becomes the under-strand; keep ccw order.
        int rot = sign_[c] > 0 ? 3 : 1;
        std::array<int, 4> y{};
        for (int s = 0; s < 4; ++s) y[s] = x[(s + rot) % 4];
        pd.push_back(y);
        for (int s = 0; s < 4; ++s)
            if (head_[x[s]] == 4 * c + s) heads[x[s]] = 4 * c + (s - rot + 4) % 4;
    }
    return from_pd(pd, free_loops_, &heads);
}

std::string LinkDiagram::canonical() const {
    std::ostringstream os;
    os << "PD[";
    for (std::size_t c = 0; c < pd_.size(); ++c) {
        if (c) os << ", ";
        os << "X[" << pd_[c][0] + 1 << "," << pd_[c][1] + 1 << "," << pd_[c][2] + 1 << "," << pd_[c][3] + 1 << "]";
    }
    os << "]";
    if (free_loops_) os << " + " << free_loops_ << " loops";
    return os.str();
}

}  // namespace krsl2

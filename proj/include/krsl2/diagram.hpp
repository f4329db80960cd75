#pragma once

#include "krsl2/web.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace krsl2 {

class DiagramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An oriented link diagram from a PD code. X[i,j,k,l] lists the four edge
// labels counterclockwise starting from the incoming under-strand, which
// runs i -> k; the crossing is positive when the over-strand runs l -> j.
// Labels are renumbered 0..L-1 by increasing original value.
class LinkDiagram {
public:
    using PD = std::vector<std::array<int, 4>>;

    LinkDiagram() = default;

    // `heads`, when given, fixes the orientation: heads[label] is the
    // occurrence (4 * crossing + slot) where that label ends, in the
    // renumbered labels. Otherwise the orientation is read off the
    // under-strands of each component.
    static LinkDiagram from_pd(const PD& pd, int free_loops = 0, const std::vector<int>* heads = nullptr);
    // Closure of a braid word; generator k > 0 is sigma_k, k < 0 its inverse.
    static LinkDiagram from_braid(const std::vector<int>& word, int strands);

    int num_labels() const { return static_cast<int>(head_.size()); }
    int num_crossings() const { return static_cast<int>(pd_.size()); }
    int free_loops() const { return free_loops_; }
    const PD& pd() const { return pd_; }
    int sign(int c) const { return sign_[c]; }
    const CrossingEdges& edges(int c) const { return edges_[c]; }
    std::vector<CrossingEdges> all_edges() const { return edges_; }

    int num_components() const { return num_components_; }
    // Component of a label; labels L.. address free loops.
    int component_of(int label) const;
    // Smallest label on each component (free loops: L + k).
    int base_point(int comp) const { return base_point_[comp]; }
    // Label following `label` along the orientation.
    int successor(int label) const { return succ_[label]; }
    int original_label(int label) const { return original_[label]; }

    int writhe() const;
    // Sum of the signs of crossings between a component and itself.
    std::vector<int> self_writhe() const;

    // Crossing change everywhere.
    LinkDiagram mirror() const;
    // PD text with renumbered labels, from which this diagram parses back.
    std::string canonical() const;

private:
    PD pd_;
    std::vector<int> original_;
    std::vector<int> head_;  // occurrence where each label ends
    std::vector<int> succ_;
    std::vector<int> sign_;
    std::vector<CrossingEdges> edges_;
    std::vector<int> comp_;
    std::vector<int> base_point_;
    int num_components_ = 0;
    int free_loops_ = 0;
};

}  // namespace krsl2

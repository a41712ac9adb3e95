#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

// Positioned parse/type error: slice and token indices are 1-based in
// messages.
struct DiagramError : std::runtime_error {
    DiagramError(int slice, int pos, const std::string& msg)
        : std::runtime_error("slice " + std::to_string(slice) + ", token " +
                             std::to_string(pos) + ": " + msg),
          slice_index(slice), token_index(pos) {}
    int slice_index, token_index;
};

// Color labels are strings; a trailing '*' marks the dual side of a strand.
std::string star_label(const std::string& c);
std::string base_label(const std::string& c);
bool is_starred(const std::string& c);

struct Token {
    enum Kind { Id, Cup, Cap, XPos, XNeg, TwPos, TwNeg, Coupon } kind;
    std::vector<std::string> colors;    // 1 for id/cup/cap/tw, 2 for crossings
    std::string coupon_name;            // Coupon only
    std::vector<std::string> coupon_in; // Coupon only
    std::vector<std::string> coupon_out;

    int in_width() const;
    int out_width() const;
    std::vector<std::string> in_labels() const;
    std::vector<std::string> out_labels() const;
    std::string str() const;
    bool operator==(const Token& o) const;
};

Token tok_id(const std::string& c);
Token tok_cup(const std::string& c);
Token tok_cap(const std::string& c);
Token tok_xpos(const std::string& c, const std::string& d);
Token tok_xneg(const std::string& c, const std::string& d);
Token tok_twpos(const std::string& c);
Token tok_twneg(const std::string& c);
Token tok_coupon(const std::string& name, std::vector<std::string> in,
                 std::vector<std::string> out);

// A colored ribbon-graph diagram as a vertical stack of slices. Wire counts
// and labels are checked between consecutive slices at construction; all the
// derived combinatorics (components, writhes, linking numbers) are computed
// once.
class SlicedDiagram {
public:
    SlicedDiagram() { rebuild(); }
    explicit SlicedDiagram(std::vector<std::vector<Token>> slices,
                           std::vector<std::string> bottom = {});

    static SlicedDiagram parse(const std::string& text);
    std::string str() const;

    const std::vector<std::vector<Token>>& slices() const { return slices_; }
    // wire labels at gap g (gap 0 = bottom boundary, gap slices().size() = top)
    const std::vector<std::string>& wires_at(size_t gap) const { return wires_.at(gap); }
    size_t gap_count() const { return wires_.size(); }
    bool closed() const { return wires_.front().empty() && wires_.back().empty(); }
    bool empty() const;

    // components -----------------------------------------------------------
    int component_count() const { return ncomponents_; }
    int component_at(size_t gap, size_t pos) const;
    // color of the component = base label at its first-appearing wire slot
    const std::string& component_color(int comp) const { return comp_color_.at(comp); }
    bool component_has_coupon(int comp) const { return comp_coupon_.at(comp); }
    bool component_is_closed(int comp) const { return comp_closed_.at(comp); }
    // first wire slot of the component (lowest gap, leftmost)
    std::pair<size_t, size_t> component_anchor(int comp) const { return comp_anchor_.at(comp); }

    // framing combinatorics (closed coupon-free components only) -----------
    long writhe(int comp) const;
    // off-diagonal linking number; throws on odd signed crossing count
    long linking(int compA, int compB) const;

    // admissibility: every component of the graph carries at least one color
    // whose base label satisfies the predicate
    template <class Pred>
    std::vector<int> inadmissible_components(Pred is_projective) const {
        std::vector<int> bad;
        for (int c = 0; c < ncomponents_; ++c) {
            bool ok = false;
            for (const auto& lbl : comp_labels_.at(c))
                if (is_projective(base_label(lbl))) { ok = true; break; }
            if (!ok) bad.push_back(c);
        }
        return bad;
    }

    // mutation helpers (return new diagrams) --------------------------------
    SlicedDiagram recolored(int comp, const std::string& new_base) const;
    SlicedDiagram recolored_all(const std::map<int, std::string>& comp_to_base) const;
    SlicedDiagram with_slice_inserted(size_t gap, std::vector<Token> slice) const;
    // insert `count` twist tokens (sign of count picks twpos/twneg) on the
    // component's anchor wire
    SlicedDiagram with_twists(int comp, long count) const;
    SlicedDiagram beside(const SlicedDiagram& right) const; // disjoint union

private:
    void rebuild();
    std::vector<std::vector<Token>> slices_;
    std::vector<std::string> bottom_;
    std::vector<std::vector<std::string>> wires_;
    std::vector<std::vector<int>> comp_at_;
    int ncomponents_ = 0;
    std::vector<std::string> comp_color_;
    std::vector<bool> comp_coupon_, comp_closed_;
    std::vector<std::pair<size_t, size_t>> comp_anchor_;
    std::vector<std::set<std::string>> comp_labels_;
    struct CrossingRec { int compA, compB; int sign; };
    std::vector<CrossingRec> crossings_;
};

} // namespace skein

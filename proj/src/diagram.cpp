#include "skein/diagram.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace skein {

std::string star_label(const std::string& c) {
    if (is_starred(c)) return c.substr(0, c.size() - 1);
    return c + "*";
}

std::string base_label(const std::string& c) {
    return is_starred(c) ? c.substr(0, c.size() - 1) : c;
}

bool is_starred(const std::string& c) { return !c.empty() && c.back() == '*'; }

int Token::in_width() const {
    switch (kind) {
        case Id: case TwPos: case TwNeg: return 1;
        case Cup: return 0;
        case Cap: case XPos: case XNeg: return 2;
        case Coupon: return static_cast<int>(coupon_in.size());
    }
    return 0;
}

int Token::out_width() const {
    switch (kind) {
        case Id: case TwPos: case TwNeg: return 1;
        case Cup: return 2;
        case Cap: return 0;
        case XPos: case XNeg: return 2;
        case Coupon: return static_cast<int>(coupon_out.size());
    }
    return 0;
}

std::vector<std::string> Token::in_labels() const {
    switch (kind) {
        case Id: case TwPos: case TwNeg: return {colors[0]};
        case Cup: return {};
        case Cap: return {colors[0], star_label(colors[0])};
        case XPos: case XNeg: return {colors[0], colors[1]};
        case Coupon: return coupon_in;
    }
    return {};
}

std::vector<std::string> Token::out_labels() const {
    switch (kind) {
        case Id: case TwPos: case TwNeg: return {colors[0]};
        case Cup: return {colors[0], star_label(colors[0])};
        case Cap: return {};
        case XPos: case XNeg: return {colors[1], colors[0]};
        case Coupon: return coupon_out;
    }
    return {};
}

std::string Token::str() const {
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += " ";
            s += v[i];
        }
        return s;
    };
    switch (kind) {
        case Id: return "id(" + colors[0] + ")";
        case Cup: return "cup(" + colors[0] + ")";
        case Cap: return "cap(" + colors[0] + ")";
        case XPos: return "xpos(" + colors[0] + "," + colors[1] + ")";
        case XNeg: return "xneg(" + colors[0] + "," + colors[1] + ")";
        case TwPos: return "twpos(" + colors[0] + ")";
        case TwNeg: return "twneg(" + colors[0] + ")";
        case Coupon:
            return "coupon(" + coupon_name + "," + join(coupon_in) + "," + join(coupon_out) + ")";
    }
    return "?";
}

bool Token::operator==(const Token& o) const {
    return kind == o.kind && colors == o.colors && coupon_name == o.coupon_name &&
           coupon_in == o.coupon_in && coupon_out == o.coupon_out;
}

Token tok_id(const std::string& c) { return Token{Token::Id, {c}, "", {}, {}}; }
Token tok_cup(const std::string& c) { return Token{Token::Cup, {c}, "", {}, {}}; }
Token tok_cap(const std::string& c) { return Token{Token::Cap, {c}, "", {}, {}}; }
Token tok_xpos(const std::string& c, const std::string& d) {
    return Token{Token::XPos, {c, d}, "", {}, {}};
}
Token tok_xneg(const std::string& c, const std::string& d) {
    return Token{Token::XNeg, {c, d}, "", {}, {}};
}
Token tok_twpos(const std::string& c) { return Token{Token::TwPos, {c}, "", {}, {}}; }
Token tok_twneg(const std::string& c) { return Token{Token::TwNeg, {c}, "", {}, {}}; }
Token tok_coupon(const std::string& name, std::vector<std::string> in,
                 std::vector<std::string> out) {
    return Token{Token::Coupon, {}, name, std::move(in), std::move(out)};
}

SlicedDiagram::SlicedDiagram(std::vector<std::vector<Token>> slices,
                             std::vector<std::string> bottom)
    : slices_(std::move(slices)), bottom_(std::move(bottom)) {
    rebuild();
}

bool SlicedDiagram::empty() const {
    if (!bottom_.empty()) return false;
    for (const auto& s : slices_)
        if (!s.empty()) return false;
    return true;
}

namespace {
std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}
} // namespace

SlicedDiagram SlicedDiagram::parse(const std::string& text) {
    std::vector<std::vector<Token>> slices;
    std::vector<std::string> bottom;
    std::vector<std::string> slice_texts;
    {
        std::string cur;
        for (char ch : text) {
            if (ch == ';') {
                slice_texts.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) slice_texts.push_back(cur);
    }
    int sidx = 0;
    for (const auto& stext : slice_texts) {
        ++sidx;
        std::vector<Token> slice;
        // tokenize: words, where a word runs to the closing ')'
        std::string s = stext;
        size_t i = 0;
        int tidx = 0;
        while (i < s.size()) {
            if (isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
            size_t open = s.find('(', i);
            if (open == std::string::npos)
                throw DiagramError(sidx, tidx + 1, "expected '(' in token near '" + s.substr(i) + "'");
            size_t close = s.find(')', open);
            if (close == std::string::npos)
                throw DiagramError(sidx, tidx + 1, "missing ')'");
            std::string name = s.substr(i, open - i);
            std::string args = s.substr(open + 1, close - open - 1);
            i = close + 1;
            ++tidx;
            std::vector<std::string> fields;
            {
                std::string cur;
                for (char ch : args) {
                    if (ch == ',') { fields.push_back(cur); cur.clear(); }
                    else cur += ch;
                }
                fields.push_back(cur);
            }
            auto strip = [](std::string v) {
                v.erase(std::remove_if(v.begin(), v.end(),
                                       [](unsigned char ch) { return std::isspace(ch); }),
                        v.end());
                return v;
            };
            if (name == "boundary") {
                if (sidx != 1 || !slice.empty())
                    throw DiagramError(sidx, tidx, "boundary declaration must come first");
                bottom = split_ws(args);
                continue;
            }
            if (name == "id") slice.push_back(tok_id(strip(fields.at(0))));
            else if (name == "cup") slice.push_back(tok_cup(strip(fields.at(0))));
            else if (name == "cap") slice.push_back(tok_cap(strip(fields.at(0))));
            else if (name == "twpos") slice.push_back(tok_twpos(strip(fields.at(0))));
            else if (name == "twneg") slice.push_back(tok_twneg(strip(fields.at(0))));
            else if (name == "xpos" || name == "xneg") {
                if (fields.size() != 2)
                    throw DiagramError(sidx, tidx, name + " needs two colors");
                if (name == "xpos") slice.push_back(tok_xpos(strip(fields[0]), strip(fields[1])));
                else slice.push_back(tok_xneg(strip(fields[0]), strip(fields[1])));
            } else if (name == "coupon") {
                if (fields.size() != 3)
                    throw DiagramError(sidx, tidx, "coupon needs name,in,out fields");
                slice.push_back(tok_coupon(strip(fields[0]), split_ws(fields[1]), split_ws(fields[2])));
            } else {
                throw DiagramError(sidx, tidx, "unknown token '" + name + "'");
            }
        }
        // allow the boundary-only first slice to disappear
        if (!(sidx == 1 && slice.empty() && !bottom.empty()) || !slice.empty())
            slices.push_back(std::move(slice));
    }
    // trailing empty slice from "a; b;" form
    while (!slices.empty() && slices.back().empty()) slices.pop_back();
    return SlicedDiagram(std::move(slices), std::move(bottom));
}

std::string SlicedDiagram::str() const {
    std::ostringstream os;
    bool first = true;
    if (!bottom_.empty()) {
        os << "boundary(";
        for (size_t i = 0; i < bottom_.size(); ++i) os << (i ? " " : "") << bottom_[i];
        os << ")";
        first = false;
    }
    for (const auto& slice : slices_) {
        if (!first) os << "; ";
        first = false;
        for (size_t i = 0; i < slice.size(); ++i) os << (i ? " " : "") << slice[i].str();
    }
    return os.str();
}

int SlicedDiagram::component_at(size_t gap, size_t pos) const {
    return comp_at_.at(gap).at(pos);
}

long SlicedDiagram::writhe(int comp) const {
    long w = 0;
    for (const auto& c : crossings_)
        if (c.compA == comp && c.compB == comp) w += c.sign;
    return w;
}

long SlicedDiagram::linking(int a, int b) const {
    long s = 0;
    for (const auto& c : crossings_)
        if ((c.compA == a && c.compB == b) || (c.compA == b && c.compB == a)) s += c.sign;
    if (s % 2 != 0)
        throw std::logic_error("odd signed inter-component crossing count; malformed diagram");
    return s / 2;
}

void SlicedDiagram::rebuild() {
    // wires per gap
    wires_.clear();
    wires_.push_back(bottom_);
    int sidx = 0;
    for (const auto& slice : slices_) {
        ++sidx;
        const std::vector<std::string>& in = wires_.back();
        std::vector<std::string> out;
        size_t ib = 0;
        int tidx = 0;
        for (const auto& tok : slice) {
            ++tidx;
            std::vector<std::string> need = tok.in_labels();
            if (ib + need.size() > in.size())
                throw DiagramError(sidx, tidx, "wire-count mismatch: slice consumes more wires than available");
            for (size_t j = 0; j < need.size(); ++j) {
                if (in[ib + j] != need[j])
                    throw DiagramError(sidx, tidx, "color mismatch: expected '" + need[j] +
                                                      "', wire carries '" + in[ib + j] + "'");
            }
            ib += need.size();
            for (const auto& l : tok.out_labels()) out.push_back(l);
        }
        if (ib != in.size())
            throw DiagramError(sidx, static_cast<int>(slice.size()),
                               "wire-count mismatch: " + std::to_string(in.size() - ib) +
                                   " wires left unconsumed");
        wires_.push_back(std::move(out));
    }

    // slot ids
    std::vector<size_t> offset(wires_.size() + 1, 0);
    for (size_t g = 0; g < wires_.size(); ++g) offset[g + 1] = offset[g] + wires_[g].size();
    size_t nslots = offset.back();
    std::vector<int> parent(nslots);
    for (size_t i = 0; i < nslots; ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    auto slot = [&](size_t g, size_t p) { return static_cast<int>(offset[g] + p); };

    // orientation constraint edges: dir(a) = sign * dir(b)
    struct Edge { int a, b, sign; };
    std::vector<Edge> edges;
    std::vector<bool> slot_in_coupon_comp(nslots, false);
    struct CrossSlot { int botL, botR; int base; };
    std::vector<CrossSlot> crossing_slots;
    std::vector<std::vector<int>> coupon_groups;

    for (size_t s = 0; s < slices_.size(); ++s) {
        size_t ib = 0, ob = 0;
        for (const auto& tok : slices_[s]) {
            int iw = tok.in_width(), ow = tok.out_width();
            switch (tok.kind) {
                case Token::Id: case Token::TwPos: case Token::TwNeg:
                    unite(slot(s, ib), slot(s + 1, ob));
                    edges.push_back({slot(s, ib), slot(s + 1, ob), +1});
                    break;
                case Token::Cup:
                    unite(slot(s + 1, ob), slot(s + 1, ob + 1));
                    edges.push_back({slot(s + 1, ob), slot(s + 1, ob + 1), -1});
                    break;
                case Token::Cap:
                    unite(slot(s, ib), slot(s, ib + 1));
                    edges.push_back({slot(s, ib), slot(s, ib + 1), -1});
                    break;
                case Token::XPos: case Token::XNeg: {
                    unite(slot(s, ib), slot(s + 1, ob + 1));
                    unite(slot(s, ib + 1), slot(s + 1, ob));
                    edges.push_back({slot(s, ib), slot(s + 1, ob + 1), +1});
                    edges.push_back({slot(s, ib + 1), slot(s + 1, ob), +1});
                    crossing_slots.push_back(
                        {slot(s, ib), slot(s, ib + 1), tok.kind == Token::XPos ? +1 : -1});
                    break;
                }
                case Token::Coupon: {
                    std::vector<int> group;
                    for (int j = 0; j < iw; ++j) group.push_back(slot(s, ib + j));
                    for (int j = 0; j < ow; ++j) group.push_back(slot(s + 1, ob + j));
                    if (group.empty())
                        throw DiagramError(static_cast<int>(s) + 1, 1,
                                           "coupon must touch at least one wire");
                    for (size_t j = 1; j < group.size(); ++j) unite(group[0], group[j]);
                    coupon_groups.push_back(group);
                    break;
                }
            }
            ib += iw;
            ob += ow;
        }
    }

    // dense component ids by first slot appearance
    std::map<int, int> root_to_comp;
    ncomponents_ = 0;
    comp_color_.clear(); comp_coupon_.clear(); comp_closed_.clear();
    comp_anchor_.clear(); comp_labels_.clear();
    comp_at_.assign(wires_.size(), {});
    for (size_t g = 0; g < wires_.size(); ++g) {
        comp_at_[g].assign(wires_[g].size(), -1);
        for (size_t p = 0; p < wires_[g].size(); ++p) {
            int r = find(slot(g, p));
            auto it = root_to_comp.find(r);
            if (it == root_to_comp.end()) {
                it = root_to_comp.emplace(r, ncomponents_++).first;
                comp_color_.push_back(base_label(wires_[g][p]));
                comp_coupon_.push_back(false);
                comp_closed_.push_back(true);
                comp_anchor_.emplace_back(g, p);
                comp_labels_.emplace_back();
            }
            comp_at_[g][p] = it->second;
            comp_labels_[it->second].insert(wires_[g][p]);
            if (g == 0 || g + 1 == wires_.size()) comp_closed_[it->second] = false;
        }
    }
    for (const auto& group : coupon_groups) {
        int comp = root_to_comp.at(find(group[0]));
        comp_coupon_[comp] = true;
    }

    // orientation: BFS with signs; coupon components stay unoriented
    std::vector<int> dir(nslots, 0);
    std::vector<std::vector<std::pair<int, int>>> adj(nslots);
    for (const auto& e : edges) {
        adj[e.a].push_back({e.b, e.sign});
        adj[e.b].push_back({e.a, e.sign});
    }
    for (int c = 0; c < ncomponents_; ++c) {
        if (comp_coupon_[c]) continue;
        auto [g, p] = comp_anchor_[c];
        int start = slot(g, p);
        dir[start] = 1;
        std::vector<int> queue{start};
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (auto [v, sgn] : adj[u]) {
                int want = dir[u] * sgn;
                if (dir[v] == 0) {
                    dir[v] = want;
                    queue.push_back(v);
                } else if (dir[v] != want) {
                    throw std::logic_error("inconsistent strand orientation");
                }
            }
        }
    }

    crossings_.clear();
    for (const auto& cs : crossing_slots) {
        int ca = root_to_comp.at(find(cs.botL));
        int cb = root_to_comp.at(find(cs.botR));
        int s = 0;
        if (dir[cs.botL] != 0 && dir[cs.botR] != 0)
            s = cs.base * dir[cs.botL] * dir[cs.botR];
        crossings_.push_back({ca, cb, s});
    }
}

SlicedDiagram SlicedDiagram::recolored(int comp, const std::string& new_base) const {
    return recolored_all({{comp, new_base}});
}

SlicedDiagram SlicedDiagram::recolored_all(const std::map<int, std::string>& m) const {
    auto relabel = [&](const std::string& lbl, int comp) {
        auto it = m.find(comp);
        if (it == m.end()) return lbl;
        return is_starred(lbl) ? it->second + "*" : it->second;
    };
    std::vector<std::vector<Token>> out = slices_;
    for (size_t s = 0; s < slices_.size(); ++s) {
        size_t ib = 0, ob = 0;
        for (size_t t = 0; t < slices_[s].size(); ++t) {
            Token& tok = out[s][t];
            const Token& old = slices_[s][t];
            switch (old.kind) {
                case Token::Id: case Token::TwPos: case Token::TwNeg:
                    tok.colors[0] = relabel(old.colors[0], comp_at_[s][ib]);
                    break;
                case Token::Cup:
                    tok.colors[0] = relabel(old.colors[0], comp_at_[s + 1][ob]);
                    break;
                case Token::Cap:
                    tok.colors[0] = relabel(old.colors[0], comp_at_[s][ib]);
                    break;
                case Token::XPos: case Token::XNeg:
                    tok.colors[0] = relabel(old.colors[0], comp_at_[s][ib]);
                    tok.colors[1] = relabel(old.colors[1], comp_at_[s][ib + 1]);
                    break;
                case Token::Coupon: {
                    for (size_t j = 0; j < old.coupon_in.size(); ++j)
                        tok.coupon_in[j] = relabel(old.coupon_in[j], comp_at_[s][ib + j]);
                    for (size_t j = 0; j < old.coupon_out.size(); ++j)
                        tok.coupon_out[j] = relabel(old.coupon_out[j], comp_at_[s + 1][ob + j]);
                    break;
                }
            }
            ib += old.in_width();
            ob += old.out_width();
        }
    }
    std::vector<std::string> newbot = bottom_;
    for (size_t p = 0; p < bottom_.size(); ++p) newbot[p] = relabel(bottom_[p], comp_at_[0][p]);
    return SlicedDiagram(std::move(out), std::move(newbot));
}

SlicedDiagram SlicedDiagram::with_slice_inserted(size_t gap, std::vector<Token> slice) const {
    std::vector<std::vector<Token>> out = slices_;
    out.insert(out.begin() + gap, std::move(slice));
    return SlicedDiagram(std::move(out), bottom_);
}

SlicedDiagram SlicedDiagram::with_twists(int comp, long count) const {
    if (count == 0) return *this;
    auto [g, p] = comp_anchor_[comp];
    // build a full identity slice at gap g with twists on wire p
    std::vector<std::vector<Token>> out = slices_;
    const std::vector<std::string>& w = wires_[g];
    for (long k = 0; k < std::abs(count); ++k) {
        std::vector<Token> slice;
        for (size_t i = 0; i < w.size(); ++i) {
            if (i == p)
                slice.push_back(count > 0 ? tok_twpos(w[i]) : tok_twneg(w[i]));
            else
                slice.push_back(tok_id(w[i]));
        }
        out.insert(out.begin() + g, slice);
    }
    return SlicedDiagram(std::move(out), bottom_);
}

SlicedDiagram SlicedDiagram::beside(const SlicedDiagram& right) const {
    // pad to common slice count with identity slices on top
    std::vector<std::vector<Token>> ls = slices_, rs = right.slices_;
    auto pad = [](std::vector<std::vector<Token>>& v, const std::vector<std::string>& top,
                  size_t upto) {
        while (v.size() < upto) {
            std::vector<Token> idslice;
            for (const auto& c : top) idslice.push_back(tok_id(c));
            v.push_back(idslice);
        }
    };
    size_t n = std::max(ls.size(), rs.size());
    pad(ls, wires_.back(), n);
    pad(rs, right.wires_.back(), n);
    std::vector<std::vector<Token>> out;
    for (size_t s = 0; s < n; ++s) {
        std::vector<Token> slice = ls[s];
        for (const auto& t : rs[s]) slice.push_back(t);
        out.push_back(std::move(slice));
    }
    std::vector<std::string> bot = bottom_;
    for (const auto& c : right.bottom_) bot.push_back(c);
    return SlicedDiagram(std::move(out), std::move(bot));
}

} // namespace skein

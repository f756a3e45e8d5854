#include "rotorlab/link_pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotorlab {

LinkPattern::LinkPattern(std::vector<int> partner) : partner_(std::move(partner)) {
    for (int i = 0; i < size(); ++i) {
        int j = partner_[i];
        if (j == kDefect) continue;
        if (j < 0 || j >= size() || j == i || partner_[j] != i)
            throw std::invalid_argument("LinkPattern: partner array is not an involution");
    }
}

int LinkPattern::defect_count() const {
    return static_cast<int>(std::count(partner_.begin(), partner_.end(), kDefect));
}

std::string LinkPattern::to_string() const {
    std::string s(partner_.size(), '?');
    char next = 'A';
    for (int i = 0; i < size(); ++i) {
        if (partner_[i] == kDefect) {
            s[i] = '.';
        } else if (partner_[i] > i) {
            s[i] = s[partner_[i]] = next++;
        }
    }
    return s;
}

LinkPattern LinkPattern::from_string(const std::string& s) {
    int n = static_cast<int>(s.size());
    std::vector<int> partner(n, kDefect);
    for (int i = 0; i < n; ++i) {
        if (s[i] == '.') continue;
        for (int j = i + 1; j < n; ++j) {
            if (s[j] == s[i]) {
                partner[i] = j;
                partner[j] = i;
                break;
            }
        }
    }
    return LinkPattern(std::move(partner));
}

namespace {

// Chords (a,b), (c,d) as point sets cross iff their endpoints interleave
// around the circle; for perfect matchings the condition is the same on the
// line and on the circle.
bool chords_cross(int a, int b, int c, int d) {
    if (a > b) std::swap(a, b);
    bool c_in = (c > a && c < b);
    bool d_in = (d > a && d < b);
    return c_in != d_in;
}

} // namespace

bool LinkPattern::valid(Geometry geom) const {
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> defects;
    for (int i = 0; i < size(); ++i) {
        if (partner_[i] == kDefect) {
            defects.push_back(i);
        } else if (partner_[i] > i) {
            arcs.emplace_back(i, partner_[i]);
        }
    }
    if (defects.size() > 1) return false;
    for (size_t x = 0; x < arcs.size(); ++x)
        for (size_t y = x + 1; y < arcs.size(); ++y)
            if (chords_cross(arcs[x].first, arcs[x].second, arcs[y].first, arcs[y].second))
                return false;
    if (geom == Geometry::HalfPlane) {
        for (int d : defects)
            for (auto& [a, b] : arcs)
                if (a < d && d < b) return false;   // arc over the defect line
    }
    return true;
}

LinkPattern LinkPattern::rotated() const {
    int n = size();
    std::vector<int> out(n, kDefect);
    for (int i = 0; i < n; ++i) {
        if (partner_[i] == kDefect)
            out[(i + 1) % n] = kDefect;
        else
            out[(i + 1) % n] = (partner_[i] + 1) % n;
    }
    return LinkPattern(std::move(out));
}

namespace {

void enumerate_rec(std::vector<int>& partner, int n, int defect_budget,
                   std::vector<LinkPattern>& out) {
    int i = 0;
    while (i < n && partner[i] != -2) ++i;
    if (i == n) {
        out.emplace_back(partner);
        return;
    }
    if (defect_budget > 0) {
        partner[i] = LinkPattern::kDefect;
        enumerate_rec(partner, n, defect_budget - 1, out);
        partner[i] = -2;
    }
    for (int j = i + 1; j < n; ++j) {
        if (partner[j] != -2) continue;
        partner[i] = j;
        partner[j] = i;
        enumerate_rec(partner, n, defect_budget, out);
        partner[i] = partner[j] = -2;
    }
}

} // namespace

std::vector<LinkPattern> enumerate_patterns(int n, int defects, Geometry geom) {
    if (n < 1) throw std::invalid_argument("enumerate_patterns: N >= 1 required");
    if (defects < 0 || defects > 1)
        throw std::invalid_argument("enumerate_patterns: unsupported defect sector");
    if ((n - defects) % 2 != 0)
        throw std::invalid_argument("enumerate_patterns: N - defects must be even");
    if (defects == 1 && geom == Geometry::Disk)
        throw std::invalid_argument("enumerate_patterns: defects on the disk are unsupported");

    std::vector<int> partner(n, -2);  // -2 = unassigned
    std::vector<LinkPattern> all;
    enumerate_rec(partner, n, defects, all);

    std::vector<LinkPattern> out;
    for (auto& p : all)
        if (p.valid(geom)) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

int site_count(int n, Geometry geom) {
    return geom == Geometry::Disk ? n : n - 1;
}

LinkPattern apply_e(int site, const LinkPattern& p, Geometry geom) {
    int n = p.size();
    if (site < 1 || site > site_count(n, geom))
        throw std::invalid_argument("apply_e: site out of range");
    int i = site - 1;
    int j = site % n;       // wraps to 0 only for site = N on the disk

    std::vector<int> out = p.raw();
    int pi = out[i];
    int pj = out[j];
    if (pi == j) return p;  // closed loop, weight 1

    out[i] = j;
    out[j] = i;
    // Former partners of i and j join up; a defect end just moves across.
    if (pi == LinkPattern::kDefect && pj == LinkPattern::kDefect)
        throw std::logic_error("apply_e: two defects in one pattern");
    if (pi == LinkPattern::kDefect) {
        out[pj] = LinkPattern::kDefect;
    } else if (pj == LinkPattern::kDefect) {
        out[pi] = LinkPattern::kDefect;
    } else {
        out[pi] = pj;
        out[pj] = pi;
    }
    return LinkPattern(std::move(out));
}

} // namespace rotorlab

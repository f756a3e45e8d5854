#pragma once

#include <string>
#include <vector>

namespace rotorlab {

// Where the pattern lives. Disk = points on a circle (periodic lattices),
// HalfPlane = points on a line with arcs above it (closed boundaries).
// The two differ only when defect lines are present: on the half plane no
// arc may pass over a defect line.
enum class Geometry { Disk, HalfPlane };

/**
 * Non-crossing matching of N ordered points, with at most one unmatched
 * (defect) point. partner[i] = j means points i and j are joined by an arc
 * (0-based, involution), partner[i] = kDefect marks a defect line.
 *
 * Serialized as letter strings: matched pairs share a letter (assigned in
 * order of first appearance), '.' marks a defect. E.g. "ABBA." is the
 * 5-point pattern with arcs (1,4), (2,3) and a defect at point 5.
 */
class LinkPattern {
public:
    static constexpr int kDefect = -1;

    LinkPattern() = default;
    explicit LinkPattern(std::vector<int> partner);

    int size() const { return static_cast<int>(partner_.size()); }
    // 1-based point access, matching the site convention used everywhere.
    int partner(int point) const { return partner_[point - 1] + 1; } // 0 = defect
    bool is_defect(int point) const { return partner_[point - 1] == kDefect; }
    bool has_arc(int p1, int p2) const {
        return partner_[p1 - 1] == p2 - 1;
    }
    int defect_count() const;

    const std::vector<int>& raw() const { return partner_; }

    bool operator==(const LinkPattern& o) const { return partner_ == o.partner_; }
    bool operator<(const LinkPattern& o) const { return partner_ < o.partner_; }

    std::string to_string() const;
    static LinkPattern from_string(const std::string& s);

    // Structural validity: involution, no crossing chords, and (half plane)
    // no arc over a defect line.
    bool valid(Geometry geom) const;

    // Relabel point i -> i+1 mod N (disk geometry only).
    LinkPattern rotated() const;

private:
    std::vector<int> partner_;
};

/**
 * All valid patterns on N points with the given defect count, exactly once,
 * sorted lexicographically on the partner array (the canonical basis order).
 * defects must be 0 or 1 and N - defects even; one defect is only supported
 * on the half plane.
 */
std::vector<LinkPattern> enumerate_patterns(int n, int defects, Geometry geom);

/**
 * Temperley-Lieb generator e_i at loop weight 1. Joins points i, i+1 by a
 * new arc and rewires their former partners to each other; a defect line at
 * i or i+1 is transferred to the freed partner. If i, i+1 were already
 * joined the pattern is returned unchanged (the closed loop has weight 1).
 * Site i is 1-based; i = N acts on the pair (N, 1) and is only legal on the
 * disk.
 */
LinkPattern apply_e(int site, const LinkPattern& p, Geometry geom);

// Number of valid sites for e_i: N on the disk (wrapping), N-1 on the half
// plane.
int site_count(int n, Geometry geom);

} // namespace rotorlab

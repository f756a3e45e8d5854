#include "rotorlab/transfer.hpp"

#include <map>
#include <stdexcept>

namespace rotorlab {

namespace {

constexpr int8_t kDead = -9;

// One colour's frontier: a pairing of live strand ends. Node layout for a
// row of width n with m emitted layers (1 for a single row, 2 for the
// double row):
//   [0, n)          consumed-side endpoints of the incoming pattern
//   [n, (m+1) n)    emitted endpoints, one block per layer
//   (m+1) n         W1, left end of the initial auxiliary strand
//   (m+1) n + 1     AUX, open end of the running auxiliary strand
//   (m+1) n + 2     DEF, anchor of the defect line
struct Nodes {
    int n, layers;
    int bot(int i) const { return i; }
    int layer(int l, int i) const { return (l + 1) * n + i; }
    int w1() const { return (layers + 1) * n; }
    int aux() const { return (layers + 1) * n + 1; }
    int def() const { return (layers + 1) * n + 2; }
    int count() const { return (layers + 1) * n + 3; }
};

using Link = std::vector<int8_t>;

void bind(Link& link, int a, int b) {
    link[a] = static_cast<int8_t>(b);
    link[b] = static_cast<int8_t>(a);
}

// cfg A: the consumed point joins the outgoing auxiliary strand and the
// emitted point terminates the incoming one. cfg B: the consumed point
// terminates the incoming strand (possibly closing a loop, weight 1) and
// the emitted point starts the outgoing one.
void step_face(Link& link, const Nodes& nd, int consumed, int emitted, bool cfg_a) {
    int aux = nd.aux();
    if (cfg_a) {
        int x = link[aux];
        bind(link, x, emitted);
        int p = link[consumed];
        bind(link, p, aux);
    } else {
        int x = link[aux];
        if (x != consumed) {
            int p = link[consumed];
            bind(link, x, p);
        }
        bind(link, emitted, aux);
    }
    link[consumed] = kDead;
}

void glue_aux_to_w1(Link& link, const Nodes& nd) {
    int x = link[nd.aux()];
    if (x != nd.w1()) {
        int y = link[nd.w1()];
        bind(link, x, y);
    }
    link[nd.aux()] = kDead;
    link[nd.w1()] = kDead;
}

Link init_link(const Nodes& nd, const LinkPattern& p) {
    Link link(nd.count(), kDead);
    const auto& raw = p.raw();
    for (int i = 0; i < nd.n; ++i) {
        if (raw[i] == LinkPattern::kDefect)
            bind(link, nd.bot(i), nd.def());
        else if (raw[i] > i)
            bind(link, nd.bot(i), nd.bot(raw[i]));
    }
    bind(link, nd.w1(), nd.aux());
    return link;
}

LinkPattern extract_layer(const Link& link, const Nodes& nd, int layer) {
    std::vector<int> partner(nd.n, LinkPattern::kDefect);
    int base = nd.layer(layer, 0);
    for (int i = 0; i < nd.n; ++i) {
        int p = link[base + i];
        if (p == nd.def()) continue;
        if (p < base || p >= base + nd.n)
            throw std::logic_error("transfer frontier: dangling strand after closure");
        partner[i] = p - base;
    }
    return LinkPattern(std::move(partner));
}

struct FaceWeightRow {
    // weight of the (red cfg, green cfg) combination: [0][0] = (A,A) etc.
    Eis w[2][2];
};

// Per-column weights of a face with omega arguments (a, b): the (B,B)
// combination is the identity-like face D, (A,A) the double-arc face A,
// and the mixed faces carry omega_R = omega_L. Assigning D to cfg B is the
// orientation that realizes the intertwining contract (c) in its printed
// form; the opposite assignment produces the mirror-image row. At b = a
// only the D faces survive and the row degenerates to a one-step rotation.
FaceWeightRow row_weights(const Eis& a, const Eis& b) {
    FaceWeightRow fw;
    Eis wD = omega(FaceKind::D, a, b);
    Eis wA = omega(FaceKind::A, a, b);
    Eis wM = omega(FaceKind::R, a, b);
    fw.w[0][0] = wA;
    fw.w[1][1] = wD;
    fw.w[0][1] = wM;
    fw.w[1][0] = wM;
    return fw;
}

struct PairKey {
    Link red, green;
    bool operator<(const PairKey& o) const {
        if (red != o.red) return red < o.red;
        return green < o.green;
    }
};

using Front = std::map<PairKey, Eis>;

void sweep(Front& cur, const Nodes& nd, int consumed, int emitted, const FaceWeightRow& fw) {
    Front next;
    for (const auto& [key, wt] : cur) {
        for (int rc = 0; rc < 2; ++rc) {
            for (int gc = 0; gc < 2; ++gc) {
                if (fw.w[rc][gc].is_zero()) continue;
                PairKey k2 = key;
                step_face(k2.red, nd, consumed, emitted, rc == 0);
                step_face(k2.green, nd, consumed, emitted, gc == 0);
                next[std::move(k2)] += wt * fw.w[rc][gc];
            }
        }
    }
    cur = std::move(next);
}

void check_left_eigenvector(const TransferMatrix& tm, const Eis& expected, bool measured) {
    auto sums = tm.entries.column_sums();
    Eis lam = measured ? sums[0] : expected;
    for (int col = 0; col < tm.entries.cols(); ++col) {
        if (!(sums[col] == lam))
            throw std::runtime_error(
                "transfer contract (b) failed: column " + std::to_string(col) + " (state " +
                tm.basis->state(col).to_string() + ") sums to " + sums[col].to_string() +
                ", expected " + lam.to_string());
    }
    if (measured && lam.is_zero())
        throw std::runtime_error("transfer contract (b): measured eigenvalue is zero");
}

} // namespace

Eis lambda_pbc_even(const SamplePoint& point) {
    Eis lam(1);
    for (const auto& z : point.z) lam *= Eis::q() * z * z - point.t * point.t;
    return lam;
}

TransferMatrix build_transfer_pbc_even(const SamplePoint& point) {
    int n = static_cast<int>(point.z.size());
    auto basis = PairBasis::get(Bc::PbcEven, n);
    Nodes nd{n, 1};

    std::vector<FaceWeightRow> weights;
    for (int i = 0; i < n; ++i) weights.push_back(row_weights(point.t, point.z[i]));

    TransferMatrix tm{Bc::PbcEven, n, point, basis, EisMatrix(basis->dim(), basis->dim()), Eis(0)};
    for (int col = 0; col < basis->dim(); ++col) {
        PairState in = basis->state(col);
        Front cur;
        cur[PairKey{init_link(nd, in.red), init_link(nd, in.green)}] = Eis(1);
        for (int i = 0; i < n; ++i) sweep(cur, nd, nd.bot(i), nd.layer(0, i), weights[i]);
        for (const auto& [key, wt] : cur) {
            PairKey k2 = key;
            glue_aux_to_w1(k2.red, nd);
            glue_aux_to_w1(k2.green, nd);
            PairState out{extract_layer(k2.red, nd, 0), extract_layer(k2.green, nd, 0)};
            tm.entries(basis->index_of(out), col) += wt;
        }
    }
    tm.lambda = lambda_pbc_even(point);
    check_left_eigenvector(tm, tm.lambda, false);
    return tm;
}

TransferMatrix build_transfer_cbc(Bc bc, const SamplePoint& point) {
    if (bc != Bc::CbcEven && bc != Bc::CbcOdd)
        throw std::invalid_argument("build_transfer_cbc: not a cbc boundary condition");
    int n = static_cast<int>(point.z.size());
    auto basis = PairBasis::get(bc, n);
    Nodes nd{n, 2};

    if (point.t.is_zero()) throw std::invalid_argument("build_transfer_cbc: t must be invertible");
    Eis t_back = point.t.inv();

    TransferMatrix tm{bc, n, point, basis, EisMatrix(basis->dim(), basis->dim()), Eis(0)};
    for (int col = 0; col < basis->dim(); ++col) {
        PairState in = basis->state(col);
        Front cur;
        cur[PairKey{init_link(nd, in.red), init_link(nd, in.green)}] = Eis(1);
        // outward row, left to right, faces omega(t, z_i)
        for (int i = 0; i < n; ++i)
            sweep(cur, nd, nd.bot(i), nd.layer(0, i), row_weights(point.t, point.z[i]));
        // K-matrix U-turn at the right boundary: the auxiliary strands
        // continue into the return row with inverted parameter; the return
        // faces carry omega(z_i, 1/t), the orientation pinned by the
        // commuting family and the z -> 1/z eigenvector invariance
        for (int i = n - 1; i >= 0; --i)
            sweep(cur, nd, nd.layer(0, i), nd.layer(1, i), row_weights(point.z[i], t_back));
        for (const auto& [key, wt] : cur) {
            PairKey k2 = key;
            glue_aux_to_w1(k2.red, nd);
            glue_aux_to_w1(k2.green, nd);
            PairState out{extract_layer(k2.red, nd, 1), extract_layer(k2.green, nd, 1)};
            tm.entries(basis->index_of(out), col) += wt;
        }
    }
    auto sums = tm.entries.column_sums();
    tm.lambda = sums[0];
    check_left_eigenvector(tm, tm.lambda, true);
    return tm;
}

TransferMatrix build_transfer(Bc bc, const SamplePoint& point) {
    return bc == Bc::PbcEven ? build_transfer_pbc_even(point) : build_transfer_cbc(bc, point);
}

EisMatrix build_transfer_o1(const std::vector<Eis>& x, const Eis& s,
                            const std::shared_ptr<const PairBasis>& basis) {
    int n = static_cast<int>(x.size());
    if (n != basis->size()) throw std::invalid_argument("build_transfer_o1: size mismatch");
    Nodes nd{n, 1};
    int dim = basis->single_dim();
    EisMatrix t(dim, dim);
    for (int col = 0; col < dim; ++col) {
        std::map<Link, Eis> cur;
        cur[init_link(nd, basis->single(col))] = Eis(1);
        for (int i = 0; i < n; ++i) {
            // traced column weights: cfg B carries omega_D + omega_R and
            // cfg A carries omega_A + omega_R, i.e. q s - x and q^2 (s - x)
            Eis wa = Eis::q2() * (s - x[i]);
            Eis wb = Eis::q() * s - x[i];
            std::map<Link, Eis> next;
            for (const auto& [key, wt] : cur) {
                for (int c = 0; c < 2; ++c) {
                    Link k2 = key;
                    step_face(k2, nd, nd.bot(i), nd.layer(0, i), c == 0);
                    next[std::move(k2)] += wt * (c == 0 ? wa : wb);
                }
            }
            cur = std::move(next);
        }
        for (const auto& [key, wt] : cur) {
            Link k2 = key;
            glue_aux_to_w1(k2, nd);
            t(basis->single_index(extract_layer(k2, nd, 0)), col) += wt;
        }
    }
    return t;
}

bool check_commuting_family(Bc bc, const SamplePoint& point, const Eis& t_other) {
    TransferMatrix a = build_transfer(bc, point);
    SamplePoint other = point;
    other.t = t_other;
    TransferMatrix b = build_transfer(bc, other);
    return commutator(a.entries, b.entries).is_zero();
}

bool check_intertwining(const SamplePoint& point, int site) {
    TransferMatrix t_fwd = build_transfer_pbc_even(point);
    TransferMatrix t_swp = build_transfer_pbc_even(point.with_swapped(site));
    SiteOps ops(t_fwd.basis);
    EisMatrix r = rcheck_matrix(ops, site, point.z[site - 1], point.z[site]);
    return t_fwd.entries * r == r * t_swp.entries;
}

bool check_trace_intertwining(const SamplePoint& point) {
    TransferMatrix tm = build_transfer_pbc_even(point);
    std::vector<Eis> x;
    for (const auto& z : point.z) x.push_back(z * z);
    EisMatrix t_o1 = build_transfer_o1(x, point.t * point.t, tm.basis);
    EisMatrix tr = trace_matrix(*tm.basis);
    return tr * tm.entries == t_o1 * tr;
}

} // namespace rotorlab

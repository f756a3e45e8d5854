#include "rotorlab/polynomial.hpp"

#include <stdexcept>

namespace rotorlab {

MultiPoly::MultiPoly(int vars, std::vector<long> degree_bounds)
    : vars_(vars), bounds_(std::move(degree_bounds)) {
    if (static_cast<int>(bounds_.size()) != vars_)
        throw std::invalid_argument("MultiPoly: bounds size mismatch");
    strides_.assign(vars_, 1);
    for (int v = vars_ - 2; v >= 0; --v) strides_[v] = strides_[v + 1] * (bounds_[v + 1] + 1);
    size_t total = strides_.empty() ? 1 : strides_[0] * (bounds_[0] + 1);
    coeffs_.assign(total, Eis(0));
}

size_t MultiPoly::index(const std::vector<long>& e) const {
    size_t idx = 0;
    for (int v = 0; v < vars_; ++v) {
        if (e[v] < 0 || e[v] > bounds_[v]) throw std::out_of_range("MultiPoly: exponent");
        idx += strides_[v] * static_cast<size_t>(e[v]);
    }
    return idx;
}

Eis& MultiPoly::coeff(const std::vector<long>& e) { return coeffs_[index(e)]; }
const Eis& MultiPoly::coeff(const std::vector<long>& e) const { return coeffs_[index(e)]; }

Eis MultiPoly::eval(const std::vector<Eis>& values) const {
    // Horner over the flattened tensor, last variable fastest
    std::vector<long> e(vars_, 0);
    Eis out;
    std::vector<Eis> powers_cache;
    for (size_t flat = 0; flat < coeffs_.size(); ++flat) {
        if (!coeffs_[flat].is_zero()) {
            size_t rest = flat;
            Eis term = coeffs_[flat];
            for (int v = 0; v < vars_; ++v) {
                long exp = static_cast<long>(rest / strides_[v]);
                rest %= strides_[v];
                if (exp) term *= values[v].pow(exp);
            }
            out += term;
        }
    }
    return out;
}

long MultiPoly::degree(int var) const {
    long best = -1;
    for (size_t flat = 0; flat < coeffs_.size(); ++flat) {
        if (coeffs_[flat].is_zero()) continue;
        long exp = static_cast<long>(flat / strides_[var] % (bounds_[var] + 1));
        best = std::max(best, exp);
    }
    return best;
}

bool MultiPoly::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (bounds_ != o.bounds_) throw std::invalid_argument("MultiPoly: bound mismatch in -");
    MultiPoly out = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= o.coeffs_[i];
    return out;
}

std::optional<MultiPoly> MultiPoly::divide_linear(int a, int b, const Eis& coef) const {
    // Treat as a polynomial in z_a over the remaining variables and divide
    // synthetically by the monic z_a + coef z_b.
    MultiPoly quotient(vars_, bounds_);
    MultiPoly remainder = *this;
    for (long da = bounds_[a]; da >= 1; --da) {
        // move coefficient of z_a^da into quotient at z_a^{da-1} and
        // subtract (z_a + coef z_b) * that from the remainder
        for (size_t flat = 0; flat < coeffs_.size(); ++flat) {
            long ea = static_cast<long>(flat / strides_[a] % (bounds_[a] + 1));
            if (ea != da) continue;
            Eis c = remainder.coeffs_[flat];
            if (c.is_zero()) continue;
            size_t qflat = flat - strides_[a];  // z_a^{da-1}
            quotient.coeffs_[qflat] += c;
            remainder.coeffs_[flat] -= c;  // cancel z_a^da term
            // subtract coef * z_b * z_a^{da-1} * c
            long eb = static_cast<long>(qflat / strides_[b] % (bounds_[b] + 1));
            if (eb + 1 > bounds_[b]) return std::nullopt;
            remainder.coeffs_[qflat + strides_[b]] -= coef * c;
        }
    }
    if (!remainder.is_zero()) return std::nullopt;
    return quotient;
}

bool MultiPoly::symmetric_in(int a, int b) const {
    for (size_t flat = 0; flat < coeffs_.size(); ++flat) {
        long ea = static_cast<long>(flat / strides_[a] % (bounds_[a] + 1));
        long eb = static_cast<long>(flat / strides_[b] % (bounds_[b] + 1));
        if (ea == eb) continue;
        size_t swapped = flat + strides_[a] * (eb - ea) + strides_[b] * (ea - eb);
        if (!(coeffs_[flat] == coeffs_[swapped])) return false;
    }
    return true;
}

MultiPoly MultiPoly::interpolate(const std::vector<std::vector<Eis>>& nodes,
                                 const std::vector<Eis>& values) {
    int vars = static_cast<int>(nodes.size());
    std::vector<long> bounds;
    size_t total = 1;
    for (const auto& nd : nodes) {
        bounds.push_back(static_cast<long>(nd.size()) - 1);
        total *= nd.size();
    }
    if (values.size() != total) throw std::invalid_argument("interpolate: value count mismatch");

    // convert axis by axis from samples to coefficients: for each line
    // along variable v, replace the sampled values by the coefficients of
    // the univariate interpolating polynomial
    MultiPoly out(vars, bounds);
    std::vector<Eis> work = values;
    for (int v = vars - 1; v >= 0; --v) {
        size_t m = nodes[v].size();
        size_t stride = 1;
        for (int u = v + 1; u < vars; ++u) stride *= nodes[u].size();
        // univariate Lagrange -> coefficient conversion matrix applied per line
        // build the coefficient form of each Lagrange basis polynomial once
        std::vector<std::vector<Eis>> basis(m, std::vector<Eis>(m));
        for (size_t j = 0; j < m; ++j) {
            std::vector<Eis> poly{Eis(1)};
            Eis denom(1);
            for (size_t l = 0; l < m; ++l) {
                if (l == j) continue;
                denom *= nodes[v][j] - nodes[v][l];
                std::vector<Eis> next(poly.size() + 1);
                for (size_t d = 0; d < poly.size(); ++d) {
                    next[d] += poly[d] * (-nodes[v][l]);
                    next[d + 1] += poly[d];
                }
                poly = std::move(next);
            }
            Eis inv = denom.inv();
            for (size_t d = 0; d < m; ++d)
                basis[j][d] = d < poly.size() ? poly[d] * inv : Eis(0);
        }
        size_t lines = work.size() / m;
        std::vector<Eis> result(work.size());
        for (size_t line = 0; line < lines; ++line) {
            // the m samples of this line sit at base + i*stride where the
            // index pattern skips over the faster-varying tail dimensions
            size_t block = line / stride;
            size_t offset = line % stride;
            size_t base = block * stride * m + offset;
            for (size_t d = 0; d < m; ++d) {
                Eis c;
                for (size_t j = 0; j < m; ++j) {
                    const Eis& sample = work[base + j * stride];
                    if (!sample.is_zero() && !basis[j][d].is_zero()) c += sample * basis[j][d];
                }
                result[base + d * stride] = c;
            }
        }
        work = std::move(result);
    }
    out.coeffs_ = std::move(work);
    return out;
}

bool ReconstructedGroundState::consistent_at(const SamplePoint& point) const {
    GroundState gs = solve_ground_state(build_transfer(bc, point));
    Eis sum_closed = bc == Bc::PbcEven ? sum_formula(SumRule::PbcEven, point.z)
                                       : sum_formula(SumRule::Cbc, point.z);
    Eis scale = sum_closed / gs.vector.sum();
    for (int i = 0; i < basis->dim(); ++i)
        if (!(components[i].eval(point.z) == scale * gs.vector[i])) return false;
    return true;
}

ReconstructedGroundState reconstruct_polynomial(Bc bc, int n, const Rat& t) {
    long degree = bc == Bc::PbcEven ? 2 * (n / 2 - 1) : 4 * ((n + 1) / 2 - 1);
    if ((bc == Bc::PbcEven && n > 4) || (bc != Bc::PbcEven && n > 4))
        throw std::invalid_argument("reconstruct_polynomial: size beyond the supported range");

    // per-variable node lists, disjoint across variables so every grid
    // point stays off the closed-boundary degeneracy loci
    std::vector<std::vector<Eis>> nodes(n);
    for (int v = 0; v < n; ++v)
        for (long j = 0; j <= degree; ++j) nodes[v].push_back(Eis(Rat(2 + j + 10L * v)));

    auto basis = PairBasis::get(bc, n);
    size_t total = 1;
    for (int v = 0; v < n; ++v) total *= nodes[v].size();

    std::vector<std::vector<Eis>> samples(basis->dim(), std::vector<Eis>(total));
    std::vector<long> idx(n, 0);
    for (size_t flat = 0; flat < total; ++flat) {
        SamplePoint p;
        p.t = Eis(t);
        size_t rest = flat;
        for (int v = n - 1; v >= 0; --v) {
            p.z.insert(p.z.begin(), nodes[v][rest % nodes[v].size()]);
            rest /= nodes[v].size();
        }
        GroundState gs = solve_ground_state(build_transfer(bc, p));
        Eis sum_closed = bc == Bc::PbcEven ? sum_formula(SumRule::PbcEven, p.z)
                                           : sum_formula(SumRule::Cbc, p.z);
        Eis scale = sum_closed / gs.vector.sum();
        for (int i = 0; i < basis->dim(); ++i) samples[i][flat] = scale * gs.vector[i];
    }

    ReconstructedGroundState out{bc, n, basis, {}, degree};
    for (int i = 0; i < basis->dim(); ++i)
        out.components.push_back(MultiPoly::interpolate(nodes, samples[i]));
    return out;
}

} // namespace rotorlab

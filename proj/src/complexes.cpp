#include "gentle/complexes.hpp"

#include <algorithm>

namespace gentle {

bool parallel(const Quiver& q, const Path& a, const Path& b) {
    return a.source() == b.source() && a.target(q) == b.target(q);
}
bool antiparallel(const Quiver& q, const Path& a, const Path& b) {
    return a.source() == b.target(q) && a.target(q) == b.source();
}

CochainCombo cochain_d(const GentlePresentation& p, const FieldConfig& f, const ParallelPair& u) {
    const Quiver& q = p.quiver();
    CochainCombo out;
    int m = u.degree();
    VertexId top = u.gamma.target(q);
    VertexId bot = u.gamma.source();
    for (ArrowId b = 0; b < q.num_arrows(); ++b) {
        if (q.source(b) != top) continue;
        Path bg = Path::of_arrow(q, b).compose_after(q, u.gamma);
        if (!p.in_Gamma(bg)) continue;
        Path ba = Path::of_arrow(q, b).compose_after(q, u.alpha);
        if (!p.in_B(ba)) continue;
        out.add_int(f, ParallelPair{bg, ba}, 1);
    }
    long sign = (m % 2 == 0) ? -1 : 1; // -(-1)^m
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        if (q.target(a) != bot) continue;
        Path ga = u.gamma.compose_after(q, Path::of_arrow(q, a));
        if (!p.in_Gamma(ga)) continue;
        Path aa = u.alpha.compose_after(q, Path::of_arrow(q, a));
        if (!p.in_B(aa)) continue;
        out.add_int(f, ParallelPair{ga, aa}, sign);
    }
    return out;
}

CochainCombo cochain_d(const GentlePresentation& p, const FieldConfig& f, const CochainCombo& u) {
    CochainCombo out;
    int deg = -1;
    for (const auto& [pair, c] : u.terms()) {
        if (deg < 0) deg = pair.degree();
        else if (deg != pair.degree())
            throw std::invalid_argument("cochain_d: combination is not homogeneous");
        out.add_scaled(f, cochain_d(p, f, pair), c);
    }
    return out;
}

ChainCombo chain_d(const GentlePresentation& p, const FieldConfig& f, const AntiparallelPair& u) {
    const Quiver& q = p.quiver();
    int m = u.degree();
    if (m < 1) throw std::invalid_argument("chain_d: degree must be >= 1");
    ChainCombo out;
    // (α·l1γ, l2γ)
    Path l1 = Path::of_arrow(q, u.gamma.lfact1());
    Path first = u.alpha.compose_after(q, l1);
    if (p.in_B(first)) out.add_int(f, AntiparallelPair{first, u.gamma.lfact2(q)}, 1);
    // (−1)^m (r2γ·α, r1γ)
    Path r2 = Path::of_arrow(q, u.gamma.rfact2());
    Path second = r2.compose_after(q, u.alpha);
    if (p.in_B(second)) out.add_int(f, AntiparallelPair{second, u.gamma.rfact1(q)}, m % 2 ? -1 : 1);
    return out;
}

ChainCombo chain_d(const GentlePresentation& p, const FieldConfig& f, const ChainCombo& u) {
    ChainCombo out;
    int deg = -1;
    for (const auto& [pair, c] : u.terms()) {
        if (deg < 0) deg = pair.degree();
        else if (deg != pair.degree())
            throw std::invalid_argument("chain_d: combination is not homogeneous");
        out.add_scaled(f, chain_d(p, f, pair), c);
    }
    return out;
}

CircuitKey circuit_key(const GentlePresentation& p, const AntiparallelPair& u) {
    const Quiver& q = p.quiver();
    if (u.alpha.is_trivial() && u.gamma.is_trivial()) return CircuitKey{u.alpha};
    Path cyc = u.alpha.compose_after(q, u.gamma);
    return CircuitKey{canonical_cycle(q, cyc)};
}

CochainBasis::CochainBasis(const GentlePresentation& p, const PathSets& sets) {
    const Quiver& q = p.quiver();
    int gmax = static_cast<int>(sets.Gamma.size()) - 1;
    levels_.resize(gmax + 1);
    for (int m = 0; m <= gmax; ++m) {
        for (const Path& g : sets.Gamma[m])
            for (const auto& lvl : sets.B)
                for (const Path& a : lvl)
                    if (parallel(q, g, a)) levels_[m].push_back(ParallelPair{g, a});
        std::sort(levels_[m].begin(), levels_[m].end());
    }
    index_.resize(levels_.size());
    for (size_t m = 0; m < levels_.size(); ++m)
        for (size_t i = 0; i < levels_[m].size(); ++i)
            index_[m][levels_[m][i]] = static_cast<int>(i);
}

int CochainBasis::index_of(int m, const ParallelPair& u) const {
    auto it = index_.at(m).find(u);
    return it == index_.at(m).end() ? -1 : it->second;
}

SparseVec CochainBasis::to_vec(const FieldConfig& f, const CochainCombo& u, int m) const {
    SparseVec v;
    for (const auto& [pair, c] : u.terms()) {
        int i = index_of(m, pair);
        if (i < 0) throw std::out_of_range("cochain pair outside the materialized basis");
        v[i] = c;
    }
    return v;
}

CochainCombo CochainBasis::from_vec(const FieldConfig& f, const SparseVec& v, int m) const {
    CochainCombo u;
    for (const auto& [i, c] : v) u.add(f, levels_.at(m).at(i), c);
    return u;
}

ChainBasis::ChainBasis(const GentlePresentation& p, const PathSets& sets) {
    const Quiver& q = p.quiver();
    int gmax = static_cast<int>(sets.Gamma.size()) - 1;
    levels_.resize(gmax + 1);
    for (int m = 0; m <= gmax; ++m) {
        for (const Path& g : sets.Gamma[m])
            for (const auto& lvl : sets.B)
                for (const Path& a : lvl)
                    if (antiparallel(q, a, g)) levels_[m].push_back(AntiparallelPair{a, g});
        std::sort(levels_[m].begin(), levels_[m].end());
    }
    index_.resize(levels_.size());
    for (size_t m = 0; m < levels_.size(); ++m)
        for (size_t i = 0; i < levels_[m].size(); ++i)
            index_[m][levels_[m][i]] = static_cast<int>(i);
}

int ChainBasis::index_of(int m, const AntiparallelPair& u) const {
    auto it = index_.at(m).find(u);
    return it == index_.at(m).end() ? -1 : it->second;
}

SparseVec ChainBasis::to_vec(const FieldConfig& f, const ChainCombo& u, int m) const {
    SparseVec v;
    for (const auto& [pair, c] : u.terms()) {
        int i = index_of(m, pair);
        if (i < 0) throw std::out_of_range("chain pair outside the materialized basis");
        v[i] = c;
    }
    return v;
}

ChainCombo ChainBasis::from_vec(const FieldConfig& f, const SparseVec& v, int m) const {
    ChainCombo u;
    for (const auto& [i, c] : v) u.add(f, levels_.at(m).at(i), c);
    return u;
}

std::map<CircuitKey, std::vector<AntiparallelPair>> ChainBasis::decompose(
    const GentlePresentation& p, int m) const {
    std::map<CircuitKey, std::vector<AntiparallelPair>> out;
    for (const AntiparallelPair& u : level(m)) out[circuit_key(p, u)].push_back(u);
    return out;
}

std::vector<SparseVec> cochain_d_matrix(const GentlePresentation& p, const FieldConfig& f,
                                        const CochainBasis& basis, int m) {
    std::vector<SparseVec> cols;
    for (const ParallelPair& u : basis.level(m))
        cols.push_back(basis.to_vec(f, cochain_d(p, f, u), m + 1));
    return cols;
}

std::vector<SparseVec> chain_d_matrix(const GentlePresentation& p, const FieldConfig& f,
                                      const ChainBasis& basis, int m) {
    std::vector<SparseVec> cols;
    for (const AntiparallelPair& u : basis.level(m))
        cols.push_back(basis.to_vec(f, chain_d(p, f, u), m - 1));
    return cols;
}

namespace {

// kernel basis of d at level m, reduced modulo the image of the incoming
// differential; the independent kernel vectors are the homology classes
std::vector<SparseVec> homology_reps(const FieldConfig& f, const std::vector<SparseVec>& d_out,
                                     const std::vector<SparseVec>& d_in, int& dim) {
    Eliminator image(f);
    for (const auto& c : d_in) image.insert(c);
    std::vector<SparseVec> kernel = kernel_basis(f, d_out);
    std::vector<SparseVec> reps;
    Eliminator classes = image;
    for (const auto& k : kernel)
        if (!classes.insert(k)) reps.push_back(k);
    dim = static_cast<int>(reps.size());
    return reps;
}

} // namespace

OracleResult cochain_homology_oracle(const GentlePresentation& p, const FieldConfig& f,
                                     const PathSets& sets, const CochainBasis& basis, int m) {
    OracleResult r;
    if (m + 1 > basis.max_degree() && !sets.Gamma_complete)
        throw std::invalid_argument("cochain oracle: bound too small for degree " +
                                    std::to_string(m));
    if (m > basis.max_degree()) { // Γ is certified empty from some level on
        r.certified = sets.B_complete;
        if (!r.certified) r.required_bound = sets.bound + 1;
        return r;
    }
    auto d_out = m + 1 <= basis.max_degree() ? cochain_d_matrix(p, f, basis, m)
                                             : std::vector<SparseVec>(basis.level(m).size());
    std::vector<SparseVec> d_in;
    if (m >= 1) d_in = cochain_d_matrix(p, f, basis, m - 1);
    std::vector<SparseVec> reps = homology_reps(f, d_out, d_in, r.dimension);
    for (const auto& v : reps) r.cochain_reps.push_back(basis.from_vec(f, v, m));
    // Certification: the B side must be fully enumerated (an empty level
    // certifies all higher ones); Γ levels within the bound are exhaustive.
    r.certified = sets.B_complete && (m + 1 <= sets.bound || sets.Gamma_complete);
    if (!r.certified) r.required_bound = sets.bound + 1;
    return r;
}

OracleResult cochain_homology_oracle_weight(const GentlePresentation& p, const FieldConfig& f,
                                            const PathSets& sets, const CochainBasis& basis,
                                            int m, int w) {
    OracleResult r;
    if (m + 1 > basis.max_degree())
        throw std::invalid_argument("cochain oracle: bound too small");
    auto filter = [&](int deg) {
        std::vector<ParallelPair> out;
        for (const ParallelPair& u : basis.level(deg))
            if (u.weight() == w) out.push_back(u);
        return out;
    };
    auto lvl_m = filter(m);
    auto lvl_up = filter(m + 1);
    auto lvl_dn = m >= 1 ? filter(m - 1) : std::vector<ParallelPair>{};
    std::map<ParallelPair, int> up_index;
    for (size_t i = 0; i < lvl_up.size(); ++i) up_index[lvl_up[i]] = static_cast<int>(i);
    std::map<ParallelPair, int> m_index;
    for (size_t i = 0; i < lvl_m.size(); ++i) m_index[lvl_m[i]] = static_cast<int>(i);
    auto to_vec = [&](const CochainCombo& u, const std::map<ParallelPair, int>& ix) {
        SparseVec v;
        for (const auto& [pair, c] : u.terms()) v[ix.at(pair)] = c;
        return v;
    };
    std::vector<SparseVec> d_out, d_in;
    for (const ParallelPair& u : lvl_m) d_out.push_back(to_vec(cochain_d(p, f, u), up_index));
    for (const ParallelPair& u : lvl_dn) d_in.push_back(to_vec(cochain_d(p, f, u), m_index));
    std::vector<SparseVec> reps = homology_reps(f, d_out, d_in, r.dimension);
    for (const auto& v : reps) {
        CochainCombo u;
        for (const auto& [i, c] : v) u.add(f, lvl_m.at(i), c);
        r.cochain_reps.push_back(std::move(u));
    }
    // pairs of degree m+1 and weight w have |α| = m+1+w
    r.certified = (m + 1 <= sets.max_nonempty_Gamma() + 1) &&
                  (sets.B_complete || m + 1 + w <= sets.bound - 1);
    if (!r.certified) r.required_bound = std::max(m + 2, m + 2 + w);
    return r;
}

OracleResult chain_homology_oracle(const GentlePresentation& p, const FieldConfig& f,
                                   const PathSets& sets, const ChainBasis& basis, int m) {
    OracleResult r;
    if (m + 1 > basis.max_degree() && !sets.Gamma_complete)
        throw std::invalid_argument("chain oracle: bound too small for degree " +
                                    std::to_string(m));
    if (m > basis.max_degree()) {
        r.certified = sets.B_complete;
        if (!r.certified) r.required_bound = sets.bound + 1;
        return r;
    }
    std::vector<SparseVec> d_out;
    if (m >= 1) d_out = chain_d_matrix(p, f, basis, m);
    else {
        // degree 0: the kernel is everything
        d_out.assign(basis.level(0).size(), SparseVec{});
    }
    std::vector<SparseVec> d_in;
    if (m + 1 <= basis.max_degree()) d_in = chain_d_matrix(p, f, basis, m + 1);
    std::vector<SparseVec> reps = homology_reps(f, d_out, d_in, r.dimension);
    for (const auto& v : reps) r.chain_reps.push_back(basis.from_vec(f, v, m));
    // B⊙Γ pairs (α,γ) come from circuits of length |α|+|γ|; every summand
    // is fully materialized once B is completely enumerated.
    r.certified = sets.B_complete && (m + 1 <= sets.bound || sets.Gamma_complete);
    if (!r.certified) r.required_bound = sets.bound + 1;
    return r;
}

} // namespace gentle

#pragma once

#include "gentle/combinatorics.hpp"
#include "gentle/field.hpp"
#include "gentle/linalg.hpp"
#include "gentle/presentation.hpp"

#include <map>
#include <vector>

namespace gentle {

// (γ, α) with γ ∈ Γ_m, α ∈ B, s(γ)=s(α), t(γ)=t(α); cochain basis element
struct ParallelPair {
    Path gamma, alpha;
    int degree() const { return gamma.length(); }
    int weight() const { return alpha.length() - gamma.length(); }
    friend auto operator<=>(const ParallelPair&, const ParallelPair&) = default;
};

// (α, γ) with α ∈ B, γ ∈ Γ_m, s(α)=t(γ), t(α)=s(γ); chain basis element
struct AntiparallelPair {
    Path alpha;
    Path gamma;
    int degree() const { return gamma.length(); }
    friend auto operator<=>(const AntiparallelPair&, const AntiparallelPair&) = default;
};

// sparse field-coefficient linear combination; no zero coefficients stored
template <class PairT>
class Combo {
public:
    Combo() = default;

    void add(const FieldConfig& f, const PairT& p, const Scalar& c) {
        if (c.is_zero(f)) return;
        auto it = terms_.find(p);
        if (it == terms_.end()) {
            terms_.emplace(p, c);
        } else {
            it->second = gentle::add(f, it->second, c);
            if (it->second.is_zero(f)) terms_.erase(it);
        }
    }
    void add_int(const FieldConfig& f, const PairT& p, long c) {
        add(f, p, Scalar::from_int(f, c));
    }
    void add_scaled(const FieldConfig& f, const Combo& other, const Scalar& c) {
        for (const auto& [p, v] : other.terms_) add(f, p, mul(f, v, c));
    }

    bool empty() const { return terms_.empty(); }
    size_t rank() const { return terms_.size(); } // number of pairs present
    const std::map<PairT, Scalar>& terms() const { return terms_; }

    bool equals(const FieldConfig& f, const Combo& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        for (; a != terms_.end(); ++a, ++b)
            if (a->first != b->first || !a->second.equals(f, b->second)) return false;
        return true;
    }

private:
    std::map<PairT, Scalar> terms_;
};

using CochainCombo = Combo<ParallelPair>;
using ChainCombo = Combo<AntiparallelPair>;

bool parallel(const Quiver& q, const Path& a, const Path& b);
bool antiparallel(const Quiver& q, const Path& a, const Path& b);

// d^m(γ,α) = Σ_b (bγ, bα) − (−1)^m Σ_a (γa, αa) over the admissible arrows
CochainCombo cochain_d(const GentlePresentation& p, const FieldConfig& f, const ParallelPair& u);
CochainCombo cochain_d(const GentlePresentation& p, const FieldConfig& f, const CochainCombo& u);

// d_m(α,γ) = (α·l1γ, l2γ) + (−1)^m (r2γ·α, r1γ), terms outside B dropped
ChainCombo chain_d(const GentlePresentation& p, const FieldConfig& f, const AntiparallelPair& u);
ChainCombo chain_d(const GentlePresentation& p, const FieldConfig& f, const ChainCombo& u);

// The circuit-or-vertex key of Eq-style chain decomposition: the canonical
// cycle containing αγ, or the base vertex for the trivial summand.
struct CircuitKey {
    Path cycle; // trivial path = vertex summand
    friend auto operator<=>(const CircuitKey&, const CircuitKey&) = default;
};
CircuitKey circuit_key(const GentlePresentation& p, const AntiparallelPair& u);

// Materialized bases of the two complexes up to the path-set bound.
class CochainBasis {
public:
    CochainBasis(const GentlePresentation& p, const PathSets& sets);
    // pairs (γ,α) with |γ| = m, any |α| within bound
    const std::vector<ParallelPair>& level(int m) const { return levels_.at(m); }
    int max_degree() const { return static_cast<int>(levels_.size()) - 1; }
    int index_of(int m, const ParallelPair& u) const;
    SparseVec to_vec(const FieldConfig& f, const CochainCombo& u, int m) const;
    CochainCombo from_vec(const FieldConfig& f, const SparseVec& v, int m) const;

private:
    std::vector<std::vector<ParallelPair>> levels_;
    std::vector<std::map<ParallelPair, int>> index_;
};

class ChainBasis {
public:
    ChainBasis(const GentlePresentation& p, const PathSets& sets);
    const std::vector<AntiparallelPair>& level(int m) const { return levels_.at(m); }
    int max_degree() const { return static_cast<int>(levels_.size()) - 1; }
    int index_of(int m, const AntiparallelPair& u) const;
    SparseVec to_vec(const FieldConfig& f, const ChainCombo& u, int m) const;
    ChainCombo from_vec(const FieldConfig& f, const SparseVec& v, int m) const;
    // partition of level m by circuit key
    std::map<CircuitKey, std::vector<AntiparallelPair>> decompose(const GentlePresentation& p,
                                                                  int m) const;

private:
    std::vector<std::vector<AntiparallelPair>> levels_;
    std::vector<std::map<AntiparallelPair, int>> index_;
};

struct OracleResult {
    int dimension = 0;
    std::vector<CochainCombo> cochain_reps;
    std::vector<ChainCombo> chain_reps;
    bool certified = false;     // truncation cannot affect this answer
    int required_bound = 0;     // when not certified: a bound that would certify
};

// Brute-force homology at degree m by exact Gaussian elimination.
// Cohomology of k(Γ∥B):
OracleResult cochain_homology_oracle(const GentlePresentation& p, const FieldConfig& f,
                                     const PathSets& sets, const CochainBasis& basis, int m);
// Homology of k(B⊙Γ):
OracleResult chain_homology_oracle(const GentlePresentation& p, const FieldConfig& f,
                                   const PathSets& sets, const ChainBasis& basis, int m);

// dimension of the weight-w part of the degree-m cochain cohomology (the
// differential preserves weight); certified iff m+1 <= bound and all pairs
// of degree m+1 and weight w are materialized
OracleResult cochain_homology_oracle_weight(const GentlePresentation& p, const FieldConfig& f,
                                            const PathSets& sets, const CochainBasis& basis,
                                            int m, int w);

// matrix of d^m / d_m in the materialized bases, as sparse columns
std::vector<SparseVec> cochain_d_matrix(const GentlePresentation& p, const FieldConfig& f,
                                        const CochainBasis& basis, int m);
std::vector<SparseVec> chain_d_matrix(const GentlePresentation& p, const FieldConfig& f,
                                      const ChainBasis& basis, int m);

} // namespace gentle

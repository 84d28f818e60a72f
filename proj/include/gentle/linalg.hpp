#pragma once

#include "gentle/field.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gentle {

// sparse column vector: row index -> nonzero coefficient
using SparseVec = std::map<int, Scalar>;

inline void vec_add_scaled(const FieldConfig& f, SparseVec& dst, const SparseVec& src,
                           const Scalar& c) {
    if (c.is_zero(f)) return;
    for (const auto& [row, val] : src) {
        auto it = dst.find(row);
        if (it == dst.end()) {
            Scalar nv = mul(f, val, c);
            if (!nv.is_zero(f)) dst.emplace(row, nv);
        } else {
            it->second = add(f, it->second, mul(f, val, c));
            if (it->second.is_zero(f)) dst.erase(it);
        }
    }
}

// Incremental exact Gaussian elimination with deterministic pivoting (least
// row index). Columns are inserted one at a time; each stored echelon column
// remembers its expression in terms of the inserted columns, so dependent
// insertions yield kernel combinations and membership queries yield
// coordinates.
class Eliminator {
public:
    explicit Eliminator(const FieldConfig& f) : field_(f) {}

    int rank() const { return static_cast<int>(echelon_.size()); }

    struct Reduction {
        SparseVec residual;   // what is left after reducing by the echelon
        SparseVec expression; // coefficients over previously inserted columns
    };

    // reduce v against the stored columns; expression e satisfies
    //   v = residual + sum_j e_j * column_j
    Reduction reduce(const SparseVec& v) const {
        Reduction r;
        r.residual = v;
        for (const auto& [pivot, col] : echelon_) {
            auto it = r.residual.find(pivot);
            if (it == r.residual.end()) continue;
            Scalar c = it->second; // pivot entries are normalized to 1
            vec_add_scaled(field_, r.residual, col, neg(field_, c));
            vec_add_scaled(field_, r.expression, expr_.at(pivot), c);
        }
        return r;
    }

    // insert a column; if dependent, returns the kernel combination
    //   sum_j k_j * column_j = 0   (with k at the new index = 1)
    std::optional<SparseVec> insert(const SparseVec& v) {
        int idx = ncols_++;
        Reduction r = reduce(v);
        if (r.residual.empty()) {
            SparseVec k = r.expression;
            for (auto& [j, c] : k) c = neg(field_, c);
            k[idx] = Scalar::from_int(field_, 1);
            return k;
        }
        int pivot = r.residual.begin()->first;
        Scalar lead = r.residual.begin()->second;
        Scalar ilead = inv(field_, lead);
        SparseVec col, expr;
        for (auto& [row, val] : r.residual) col[row] = mul(field_, val, ilead);
        // v = residual + sum e_j col_j  =>  normalized column expression
        expr = r.expression;
        for (auto& [j, c] : expr) c = mul(field_, neg(field_, c), ilead);
        expr[idx] = ilead;
        // re-reduce previously stored columns so lookups stay independent of
        // insertion interleaving? Not needed for rank/solve; keep it simple.
        echelon_.emplace(pivot, std::move(col));
        expr_.emplace(pivot, std::move(expr));
        return std::nullopt;
    }

    // is v in the span? if so, coefficients over the inserted columns
    std::optional<SparseVec> solve(const SparseVec& v) const {
        Reduction r = reduce(v);
        if (!r.residual.empty()) return std::nullopt;
        return r.expression;
    }

    bool contains(const SparseVec& v) const { return reduce(v).residual.empty(); }

private:
    FieldConfig field_;
    int ncols_ = 0;
    std::map<int, SparseVec> echelon_; // pivot row -> column (pivot entry 1)
    std::map<int, SparseVec> expr_;    // pivot row -> expression over inserted columns
};

// rank of a sparse matrix given by columns
inline int matrix_rank(const FieldConfig& f, const std::vector<SparseVec>& cols) {
    Eliminator e(f);
    for (const auto& c : cols) e.insert(c);
    return e.rank();
}

// kernel basis of the matrix given by columns (coefficient vectors over the
// column indices), in insertion order
inline std::vector<SparseVec> kernel_basis(const FieldConfig& f,
                                           const std::vector<SparseVec>& cols) {
    Eliminator e(f);
    std::vector<SparseVec> kernel;
    for (const auto& c : cols)
        if (auto k = e.insert(c)) kernel.push_back(std::move(*k));
    return kernel;
}

} // namespace gentle

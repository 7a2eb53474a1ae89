#pragma once

#include "galg/galgebra.hpp"

#include <array>
#include <iosfwd>
#include <map>
#include <vector>

namespace galg {

/// Dense matrix over the rationals, row-major.
class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols);
    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat operator*(const RatMat& o) const;
    RatMat scaled(const Rat& c) const;
    bool is_zero() const;
    bool operator==(const RatMat&) const = default;

    std::vector<Rat> apply(const std::vector<Rat>& v) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

RatMat kron(const RatMat& A, const RatMat& B);

/// Debugging output only, the format is not stable.
std::ostream& operator<<(std::ostream& os, const RatMat& M);

/// Fraction-free Gaussian elimination (Bareiss) after clearing denominators.
long rank(const RatMat& M);

/// Incremental row span over Q with exact elimination.
class RowSpan {
public:
    explicit RowSpan(int dim) : dim_(dim) {}
    /// Reduces v by the stored pivot rows; if a nonzero remainder survives it
    /// becomes a new pivot row and true is returned.  v is left reduced.
    bool insert(std::vector<Rat>& v);
    long rank() const { return static_cast<long>(rows_.size()); }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }

private:
    int dim_;
    std::vector<std::vector<Rat>> rows_;  // pivot-normalized, sorted by pivot column
    std::vector<int> pivots_;
};

/// Simple sl2 module of highest weight n on the basis v_0 .. v_n:
/// H v_k = (n-2k) v_k,  F v_k = v_{k+1},  E v_k = k(n-k+1) v_{k-1}.
struct Irrep {
    int n = 0;
    RatMat E, H, F;
};
Irrep irrep(int n);

/// V(lambda)_0 (x) V(mu)_{a0} with the six truncated-algebra generators acting
/// as x0 = X (x) 1 + 1 (x) X and x1 = a0 (1 (x) X); basis v_i (x) w_j at index
/// i*(mu+1)+j, highest weight vector at index 0.
struct EvalModule {
    int lambda = 0, mu = 0;
    Rat a0;
    int dim = 0;
    int hw_index = 0;
    bool simple = false;  // false when a0 = 0: the tensor module degenerates
    std::array<RatMat, 6> action;
};
EvalModule evaluation_tensor_module(int lambda, int mu, const Rat& a0);

/// All defining brackets of the truncated algebra hold as matrix identities.
bool module_brackets_ok(const EvalModule& M);

/// Matrix of the element (coefficients specialized at M.a0; throws on a pole).
RatMat poly_matrix(const EvalModule& M, const NcPoly& f);

/// Every generator, evaluated as a matrix word, kills the highest weight vector.
bool annihilates(const std::vector<NcPoly>& gens, const EvalModule& M);

/// Dimension of the span of the highest weight vector under repeated
/// application of the six generators.
long cyclic_dimension(const EvalModule& M);

/// Graded dimensions of the associated graded module of the t-degree
/// filtration span{words of t-degree <= r applied to the highest weight
/// vector}; zero increments are omitted.  Throws std::domain_error for a0 = 0.
std::map<long, long> fusion_graded_dims_oracle(int lambda, int mu, const Rat& a0);

/// Rank of { f1^k f0^(ell-k) . v_hw : 0 <= k <= p }.
long lowering_rank(const EvalModule& M, int p, int ell);

}  // namespace galg

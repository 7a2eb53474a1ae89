#include "galg/repmod.hpp"

#include "galg/fusion.hpp"

#include <ostream>
#include <stdexcept>

namespace galg {

RatMat::RatMat(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMat: shape mismatch");
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMat: shape mismatch");
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMat: shape mismatch");
    RatMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& y = o.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

RatMat RatMat::scaled(const Rat& c) const {
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

bool RatMat::is_zero() const {
    for (const Rat& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Rat> RatMat::apply(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("RatMat: shape mismatch");
    std::vector<Rat> r(rows_);
    for (int j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < rows_; ++i) {
            const Rat& x = at(i, j);
            if (!x.is_zero()) r[i] += x * v[j];
        }
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const RatMat& M) {
    for (int i = 0; i < M.rows(); ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < M.cols(); ++j) os << " " << M.at(i, j).str();
        os << (i + 1 == M.rows() ? " ]" : "\n");
    }
    return os;
}

RatMat kron(const RatMat& A, const RatMat& B) {
    RatMat r(A.rows() * B.rows(), A.cols() * B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            if (A.at(i, j).is_zero()) continue;
            for (int k = 0; k < B.rows(); ++k)
                for (int l = 0; l < B.cols(); ++l)
                    r.at(i * B.rows() + k, j * B.cols() + l) = A.at(i, j) * B.at(k, l);
        }
    return r;
}

long rank(const RatMat& M) {
    // clear denominators row by row, then Bareiss
    int rows = M.rows(), cols = M.cols();
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i) {
        mpz_class lcm = 1;
        for (int j = 0; j < cols; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), M.at(i, j).den().get_mpz_t());
        for (int j = 0; j < cols; ++j) m[i][j] = M.at(i, j).num() * (lcm / M.at(i, j).den());
    }
    long r = 0;
    mpz_class prev_pivot = 1;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int i = row; i < rows; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                m[i][j] = m[row][col] * m[i][j] - m[i][col] * m[row][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev_pivot = m[row][col];
        ++row;
        ++r;
    }
    return r;
}

bool RowSpan::insert(std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("RowSpan: width mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rat c = v[pivots_[r]];
        if (c.is_zero()) continue;
        for (int j = 0; j < dim_; ++j)
            if (!rows_[r][j].is_zero()) v[j] -= c * rows_[r][j];
    }
    int piv = -1;
    for (int j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    Rat inv = v[piv].inv();
    for (int j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) v[j] *= inv;
    // keep the rows in reduced echelon form so one reduction pass suffices
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rat c = rows_[r][piv];
        if (c.is_zero()) continue;
        for (int j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) rows_[r][j] -= c * v[j];
    }
    rows_.push_back(v);
    pivots_.push_back(piv);
    return true;
}

Irrep irrep(int n) {
    if (n < 0) throw std::invalid_argument("irrep: negative highest weight");
    Irrep V;
    V.n = n;
    V.E = RatMat(n + 1, n + 1);
    V.H = RatMat(n + 1, n + 1);
    V.F = RatMat(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) {
        V.H.at(k, k) = Rat(n - 2 * k);
        if (k + 1 <= n) V.F.at(k + 1, k) = Rat(1);
        if (k >= 1) V.E.at(k - 1, k) = Rat(static_cast<long>(k) * (n - k + 1));
    }
    return V;
}

EvalModule evaluation_tensor_module(int lambda, int mu, const Rat& a0) {
    Irrep Vl = irrep(lambda), Vm = irrep(mu);
    EvalModule M;
    M.lambda = lambda;
    M.mu = mu;
    M.a0 = a0;
    M.dim = (lambda + 1) * (mu + 1);
    M.hw_index = 0;
    M.simple = !a0.is_zero();
    RatMat Il = RatMat::identity(lambda + 1), Im = RatMat::identity(mu + 1);
    auto zero_action = [&](const RatMat& Xl, const RatMat& Xm) {
        return kron(Xl, Im) + kron(Il, Xm);
    };
    auto one_action = [&](const RatMat& Xm) { return kron(Il, Xm).scaled(a0); };
    M.action[sl2gen::e0] = zero_action(Vl.E, Vm.E);
    M.action[sl2gen::e1] = one_action(Vm.E);
    M.action[sl2gen::h0] = zero_action(Vl.H, Vm.H);
    M.action[sl2gen::h1] = one_action(Vm.H);
    M.action[sl2gen::f0] = zero_action(Vl.F, Vm.F);
    M.action[sl2gen::f1] = one_action(Vm.F);
    if (!module_brackets_ok(M))
        throw std::logic_error("evaluation_tensor_module: defining brackets fail as matrices");
    return M;
}

bool module_brackets_ok(const EvalModule& M) {
    GAlgebra A = fusion_algebra_at(M.a0);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            RatMat lhs = M.action[j] * M.action[i] - M.action[i] * M.action[j];
            RatMat rhs = poly_matrix(M, A.d(i, j));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

RatMat poly_matrix(const EvalModule& M, const NcPoly& f) {
    RatMat out(M.dim, M.dim);
    for (const NcTerm& t : f.terms()) {
        RatMat w = RatMat::identity(M.dim);
        for (int i = 0; i < 6; ++i)
            for (int rep = 0; rep < t.mono[i]; ++rep) w = w * M.action[i];
        out = out + w.scaled(t.coef.specialize(M.a0));
    }
    return out;
}

namespace {

std::vector<Rat> apply_word(const EvalModule& M, const ExpVec& word, std::vector<Rat> v) {
    for (int i = 5; i >= 0; --i)
        for (int rep = 0; rep < word[i]; ++rep) v = M.action[i].apply(v);
    return v;
}

std::vector<Rat> hw_vector(const EvalModule& M) {
    std::vector<Rat> v(M.dim);
    v[M.hw_index] = Rat(1);
    return v;
}

}  // namespace

bool annihilates(const std::vector<NcPoly>& gens, const EvalModule& M) {
    std::vector<Rat> hw = hw_vector(M);
    for (const NcPoly& g : gens) {
        std::vector<Rat> acc(M.dim);
        for (const NcTerm& t : g.terms()) {
            Rat c = t.coef.specialize(M.a0);
            std::vector<Rat> w = apply_word(M, t.mono, hw);
            for (int i = 0; i < M.dim; ++i) acc[i] += c * w[i];
        }
        for (const Rat& x : acc)
            if (!x.is_zero()) return false;
    }
    return true;
}

long cyclic_dimension(const EvalModule& M) {
    RowSpan span(M.dim);
    std::vector<std::vector<Rat>> frontier;
    {
        std::vector<Rat> v = hw_vector(M);
        span.insert(v);
        frontier.push_back(v);
    }
    while (!frontier.empty() && span.rank() < M.dim) {
        std::vector<std::vector<Rat>> next;
        for (const auto& v : frontier)
            for (int g = 0; g < 6; ++g) {
                std::vector<Rat> u = M.action[g].apply(v);
                if (span.insert(u)) next.push_back(u);
            }
        frontier = std::move(next);
    }
    return span.rank();
}

std::map<long, long> fusion_graded_dims_oracle(int lambda, int mu, const Rat& a0) {
    if (a0.is_zero())
        throw std::domain_error("fusion_graded_dims_oracle: filtration degenerates at a0 = 0");
    EvalModule M = evaluation_tensor_module(lambda, mu, a0);
    const int deg0[] = {sl2gen::e0, sl2gen::h0, sl2gen::f0};
    const int deg1[] = {sl2gen::e1, sl2gen::h1, sl2gen::f1};
    long full = static_cast<long>(M.dim);

    RowSpan span(M.dim);
    std::vector<std::vector<Rat>> frontier;
    {
        std::vector<Rat> v = hw_vector(M);
        span.insert(v);
        frontier.push_back(v);
    }
    auto close_degree0 = [&]() {
        while (!frontier.empty() && span.rank() < full) {
            std::vector<std::vector<Rat>> next;
            for (const auto& v : frontier)
                for (int g : deg0) {
                    std::vector<Rat> u = M.action[g].apply(v);
                    if (span.insert(u)) next.push_back(u);
                }
            frontier = std::move(next);
        }
    };

    std::map<long, long> graded;
    close_degree0();
    long prev = span.rank();
    graded[0] = prev;
    for (long r = 1; span.rank() < full; ++r) {
        // raise the t-degree once on a basis of the previous layer, then close
        std::vector<std::vector<Rat>> basis = span.rows();
        frontier.clear();
        for (const auto& v : basis)
            for (int g : deg1) {
                std::vector<Rat> u = M.action[g].apply(v);
                if (span.insert(u)) frontier.push_back(u);
            }
        close_degree0();
        long now = span.rank();
        if (now == prev) break;  // stable: all higher layers coincide
        graded[r] = now - prev;
        prev = now;
    }
    return graded;
}

long lowering_rank(const EvalModule& M, int p, int ell) {
    RatMat rows(p + 1, M.dim);
    std::vector<Rat> hw = hw_vector(M);
    for (int k = 0; k <= p; ++k) {
        ExpVec word(6, 0);
        word[sl2gen::f1] = k;
        word[sl2gen::f0] = ell - k;
        std::vector<Rat> v = apply_word(M, word, hw);
        for (int j = 0; j < M.dim; ++j) rows.at(k, j) = v[j];
    }
    return rank(rows);
}

}  // namespace galg

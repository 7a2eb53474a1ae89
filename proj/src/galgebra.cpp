#include "galg/galgebra.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace galg {

namespace {

struct DescCmp {
    const MonomialOrder* ord;
    bool operator()(const ExpVec& a, const ExpVec& b) const { return ord->compare(a, b) > 0; }
};

using TermMap = std::map<ExpVec, ParamRat, DescCmp>;

void acc(TermMap& m, const ExpVec& e, const ParamRat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

bool valid_name(const std::string& s) {
    if (s.empty() || s == "a") return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char ch : s)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    return true;
}

}  // namespace

struct ProductCache {
    std::mutex mu;
    std::map<std::pair<int, ExpVec>, NcPoly> gen_mul;
};

// ---- NcPoly -----------------------------------------------------------------

NcPoly NcPoly::make(const MonomialOrder& ord, std::vector<NcTerm> terms) {
    for (const NcTerm& t : terms)
        if (static_cast<int>(t.mono.size()) != ord.width())
            throw std::invalid_argument("NcPoly: exponent width mismatch");
    TermMap m{DescCmp{&ord}};
    for (NcTerm& t : terms) acc(m, t.mono, t.coef);
    NcPoly p;
    p.terms_.reserve(m.size());
    for (auto& [e, c] : m) p.terms_.push_back({e, c});
    return p;
}

const ExpVec& NcPoly::lexp() const {
    if (is_zero()) throw std::domain_error("NcPoly: zero polynomial has no leading term");
    return terms_.front().mono;
}

const ParamRat& NcPoly::lc() const {
    if (is_zero()) throw std::domain_error("NcPoly: zero polynomial has no leading term");
    return terms_.front().coef;
}

// ---- GAlgebra ---------------------------------------------------------------

int GAlgebra::pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

GAlgebra::GAlgebra(std::vector<std::string> names, MonomialOrder order)
    : n_(static_cast<int>(names.size())),
      names_(std::move(names)),
      order_(std::move(order)),
      q_(static_cast<size_t>(n_) * (n_ - 1) / 2, ParamRat(1)),
      d_(static_cast<size_t>(n_) * (n_ - 1) / 2),
      cache_(std::make_unique<ProductCache>()) {
    validate();
    lie_type_ = true;
}

GAlgebra::GAlgebra(std::vector<std::string> names, MonomialOrder order, std::vector<ParamRat> q,
                   std::vector<NcPoly> d)
    : n_(static_cast<int>(names.size())),
      names_(std::move(names)),
      order_(std::move(order)),
      q_(std::move(q)),
      d_(std::move(d)),
      cache_(std::make_unique<ProductCache>()) {
    validate();
    lie_type_ = true;
    for (const ParamRat& x : q_)
        if (!x.is_one()) {
            lie_type_ = false;
            break;
        }
}

GAlgebra::GAlgebra(GAlgebra&&) noexcept = default;
GAlgebra& GAlgebra::operator=(GAlgebra&&) noexcept = default;
GAlgebra::~GAlgebra() = default;

void GAlgebra::validate() const {
    if (order_.width() != n_) throw std::invalid_argument("GAlgebra: order width mismatch");
    size_t npairs = static_cast<size_t>(n_) * (n_ - 1) / 2;
    if (q_.size() != npairs || d_.size() != npairs)
        throw std::invalid_argument("GAlgebra: relation table size mismatch");
    for (int i = 0; i < n_; ++i) {
        if (!valid_name(names_[i])) throw std::invalid_argument("GAlgebra: bad generator name '" + names_[i] + "'");
        for (int j = i + 1; j < n_; ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("GAlgebra: duplicate generator name '" + names_[i] + "'");
    }
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            const ParamRat& qq = q_[pair_index(i, j)];
            if (qq.is_zero()) throw std::invalid_argument("GAlgebra: zero q coefficient");
            const NcPoly& dd = d_[pair_index(i, j)];
            if (dd.is_zero()) continue;
            ExpVec xixj(n_, 0);
            xixj[i] += 1;
            xixj[j] += 1;
            if (order_.compare(dd.lexp(), xixj) > 0)
                throw std::invalid_argument("GAlgebra: relation tail above x_i*x_j (order not admissible for d_" +
                                            names_[i] + "," + names_[j] + ")");
        }
}

int GAlgebra::gen_index(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (names_[i] == name) return i;
    return -1;
}

NcPoly GAlgebra::constant(const ParamRat& c) const {
    if (c.is_zero()) return {};
    NcPoly p;
    p.terms_.push_back({ExpVec(n_, 0), c});
    return p;
}

NcPoly GAlgebra::generator(int i) const {
    if (i < 0 || i >= n_) throw std::invalid_argument("GAlgebra: generator index out of range");
    ExpVec e(n_, 0);
    e[i] = 1;
    return monomial(std::move(e));
}

NcPoly GAlgebra::monomial(ExpVec e, ParamRat c) const {
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("GAlgebra: exponent width mismatch");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("GAlgebra: negative exponent");
    if (c.is_zero()) return {};
    NcPoly p;
    p.terms_.push_back({std::move(e), std::move(c)});
    return p;
}

NcPoly GAlgebra::from_terms(std::vector<NcTerm> terms) const { return NcPoly::make(order_, std::move(terms)); }

NcPoly GAlgebra::add(const NcPoly& f, const NcPoly& g) const {
    NcPoly r;
    r.terms_.reserve(f.size() + g.size());
    size_t i = 0, j = 0;
    while (i < f.size() && j < g.size()) {
        auto c = order_.compare(f.terms_[i].mono, g.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(f.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(g.terms_[j++]);
        } else {
            ParamRat s = f.terms_[i].coef + g.terms_[j].coef;
            if (!s.is_zero()) r.terms_.push_back({f.terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < f.size(); ++i) r.terms_.push_back(f.terms_[i]);
    for (; j < g.size(); ++j) r.terms_.push_back(g.terms_[j]);
    return r;
}

NcPoly GAlgebra::negate(const NcPoly& f) const {
    NcPoly r = f;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

NcPoly GAlgebra::sub(const NcPoly& f, const NcPoly& g) const { return add(f, negate(g)); }

NcPoly GAlgebra::scale(const NcPoly& f, const ParamRat& c) const {
    if (c.is_zero()) return {};
    NcPoly r = f;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

NcPoly GAlgebra::monic(const NcPoly& f) const {
    if (f.is_zero()) return f;
    return scale(f, f.lc().inv());
}

// x_k * x^gamma in normal form, memoized.  Standard words are descending,
// x_{n-1}^.. x_1^.. x_0^.., so prepending x_k is direct when k dominates the
// support of gamma and otherwise swaps past the leading letter.
const NcPoly& GAlgebra::gen_times_mono(int k, const ExpVec& gamma) const {
    {
        std::lock_guard lk(cache_->mu);
        auto it = cache_->gen_mul.find({k, gamma});
        if (it != cache_->gen_mul.end()) return it->second;
    }

    NcPoly result;
    int b = -1;
    for (int i = n_ - 1; i >= 0; --i)
        if (gamma[i] > 0) {
            b = i;
            break;
        }
    if (b < 0 || k >= b) {
        // already a standard word
        ExpVec e = gamma;
        e[k] += 1;
        result = monomial(std::move(e));
    } else {
        // swap x_k past the leading x_b using x_k x_b = (x_b x_k - d_kb) / q_kb
        ExpVec delta = gamma;
        delta[b] -= 1;
        NcPoly rec = gen_times_mono(k, delta);  // copy: recursive calls may touch the cache
        TermMap out{DescCmp{&order_}};
        ParamRat qinv = q_[pair_index(k, b)].inv();
        for (const NcTerm& t : rec.terms()) {
            const NcPoly& h = gen_times_mono(b, t.mono);
            ParamRat c = qinv * t.coef;
            for (const NcTerm& u : h.terms()) acc(out, u.mono, u.coef * c);
        }
        const NcPoly& dd = d_[pair_index(k, b)];
        for (const NcTerm& t : dd.terms()) {
            NcPoly h = normal_form_product(t.mono, delta);
            ParamRat c = -qinv * t.coef;
            for (const NcTerm& u : h.terms()) acc(out, u.mono, u.coef * c);
        }
        NcPoly p;
        p.terms_.reserve(out.size());
        for (auto& [e, c] : out) p.terms_.push_back({e, c});
        result = std::move(p);
    }

    std::lock_guard lk(cache_->mu);
    auto [it, ignored] = cache_->gen_mul.try_emplace({k, gamma}, std::move(result));
    return it->second;
}

NcPoly GAlgebra::normal_form_product(const ExpVec& alpha, const ExpVec& beta) const {
    if (static_cast<int>(alpha.size()) != n_ || static_cast<int>(beta.size()) != n_)
        throw std::invalid_argument("GAlgebra: exponent width mismatch");
    NcPoly p = monomial(beta);
    for (int i = 0; i < n_; ++i) {
        for (int rep = 0; rep < alpha[i]; ++rep) {
            TermMap out{DescCmp{&order_}};
            for (const NcTerm& t : p.terms()) {
                const NcPoly& h = gen_times_mono(i, t.mono);
                for (const NcTerm& u : h.terms()) acc(out, u.mono, u.coef * t.coef);
            }
            NcPoly next;
            next.terms_.reserve(out.size());
            for (auto& [e, c] : out) next.terms_.push_back({e, c});
            p = std::move(next);
        }
    }
    return p;
}

NcPoly GAlgebra::multiply(const NcPoly& f, const NcPoly& g) const {
    if (f.is_zero() || g.is_zero()) return {};
    TermMap out{DescCmp{&order_}};
    for (const NcTerm& tf : f.terms()) {
        for (const NcTerm& tg : g.terms()) {
            NcPoly h = normal_form_product(tf.mono, tg.mono);
            ParamRat c = tf.coef * tg.coef;
            for (const NcTerm& u : h.terms()) acc(out, u.mono, u.coef * c);
        }
    }
    NcPoly r;
    r.terms_.reserve(out.size());
    for (auto& [e, c] : out) r.terms_.push_back({e, c});
    return r;
}

NcPoly GAlgebra::commutator(const NcPoly& f, const NcPoly& g) const {
    return sub(multiply(f, g), multiply(g, f));
}

NcPoly GAlgebra::power(const NcPoly& f, int k) const {
    if (k < 0) throw std::invalid_argument("GAlgebra: negative power");
    NcPoly r = one();
    for (int i = 0; i < k; ++i) r = multiply(r, f);
    return r;
}

PbwReport GAlgebra::pbw_consistency_check() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            for (int k = j + 1; k < n_; ++k) {
                NcPoly xi = generator(i), xj = generator(j), xk = generator(k);
                NcPoly way1 = multiply(multiply(xi, xj), xk);
                NcPoly way2 = multiply(xi, multiply(xj, xk));
                if (!(way1 == way2)) {
                    std::ostringstream os;
                    os << "overlap " << names_[i] << "*" << names_[j] << "*" << names_[k]
                       << " resolves inconsistently";
                    return {false, std::array<int, 3>{i, j, k}, os.str()};
                }
            }
    return {true, std::nullopt, ""};
}

GAlgebra GAlgebra::specialized(const Rat& a0) const {
    std::vector<ParamRat> q2;
    q2.reserve(q_.size());
    for (const ParamRat& x : q_) {
        Rat v = x.specialize(a0);
        if (v.is_zero())
            throw std::domain_error("GAlgebra: q coefficient vanishes at a = " + a0.str());
        q2.emplace_back(v);
    }
    std::vector<NcPoly> d2;
    d2.reserve(d_.size());
    for (const NcPoly& p : d_) d2.push_back(specialize_poly(p, a0));
    return GAlgebra(names_, order_, std::move(q2), std::move(d2));
}

bool GAlgebra::same_presentation(const GAlgebra& o) const {
    return names_ == o.names_ && order_ == o.order_ && q_ == o.q_ && d_ == o.d_;
}

NcPoly specialize_poly(const NcPoly& f, const Rat& a0) {
    // monomials and their relative order are untouched, so rebuild in place
    NcPoly r;
    r.terms_.reserve(f.size());
    for (const NcTerm& t : f.terms()) {
        Rat v = t.coef.specialize(a0);
        if (!v.is_zero()) r.terms_.push_back({t.mono, ParamRat(v)});
    }
    return r;
}

}  // namespace galg

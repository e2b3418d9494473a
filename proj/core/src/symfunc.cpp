#include "chromaposet/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace chromaposet {

char basis_letter(Basis b) {
    switch (b) {
        case Basis::M: return 'm';
        case Basis::P: return 'p';
        case Basis::E: return 'e';
        case Basis::S: return 's';
    }
    throw std::logic_error("unreachable");
}

Basis basis_from_letter(char c) {
    switch (c) {
        case 'm': case 'M': return Basis::M;
        case 'p': case 'P': return Basis::P;
        case 'e': case 'E': return Basis::E;
        case 's': case 'S': return Basis::S;
    }
    throw std::invalid_argument(std::string("unknown basis letter: ") + c);
}

SymFunc SymFunc::basis_element(Basis basis, const Partition& index) {
    SymFunc f(index.weight(), basis);
    f.set_coeff(index, 1);
    return f;
}

Rational SymFunc::coeff(const Partition& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymFunc::set_coeff(const Partition& p, const Rational& value) {
    if (p.weight() != degree_)
        throw std::invalid_argument("coefficient index does not partition the degree");
    if (value == 0)
        coeffs_.erase(p);
    else
        coeffs_[p] = value;
}

void SymFunc::add_coeff(const Partition& p, const Rational& value) {
    if (p.weight() != degree_)
        throw std::invalid_argument("coefficient index does not partition the degree");
    auto it = coeffs_.find(p);
    if (it == coeffs_.end()) {
        if (value != 0) coeffs_.emplace(p, value);
        return;
    }
    it->second += value;
    if (it->second == 0) coeffs_.erase(it);
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
    if (degree_ != other.degree_ || basis_ != other.basis_)
        throw std::invalid_argument("cannot add symmetric functions of mixed degree or basis");
    for (const auto& [p, c] : other.coeffs_) add_coeff(p, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
    if (degree_ != other.degree_ || basis_ != other.basis_)
        throw std::invalid_argument("cannot subtract symmetric functions of mixed degree or basis");
    for (const auto& [p, c] : other.coeffs_) add_coeff(p, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [p, c] : coeffs_) c *= scalar;
    return *this;
}

bool SymFunc::operator==(const SymFunc& other) const {
    return degree_ == other.degree_ && basis_ == other.basis_ && coeffs_ == other.coeffs_;
}

std::string SymFunc::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : coeffs_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (a != 1) out += chromaposet::to_string(a) + " ";
        out += basis_letter(basis_);
        out += p.to_string();
    }
    return out;
}

nlohmann::json SymFunc::to_json() const {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [p, c] : coeffs_) coeffs[p.to_string()] = chromaposet::to_string(c);
    return nlohmann::json{{"degree", degree_},
                          {"basis", std::string(1, basis_letter(basis_))},
                          {"coeffs", coeffs}};
}

SymFunc SymFunc::from_json(const nlohmann::json& j) {
    int degree = j.at("degree").get<int>();
    std::string b = j.at("basis").get<std::string>();
    if (b.size() != 1) throw std::invalid_argument("basis must be a single letter");
    SymFunc f(degree, basis_from_letter(b[0]));
    for (const auto& [key, value] : j.at("coeffs").items()) {
        auto p = Partition::parse(key);
        if (!p) throw std::invalid_argument("invalid partition key: " + key);
        f.set_coeff(*p, parse_rational(value.get<std::string>()));
    }
    return f;
}

namespace {

// Symmetric polynomials in `nvars` variables represented by the coefficient
// of the sorted monomial x^kappa, i.e. exactly the m-basis coefficient map.
using MonomialMap = std::map<Partition, Rational, PartitionCanonicalOrder>;

Partition sorted_partition(std::vector<int> v) {
    std::erase(v, 0);
    std::sort(v.begin(), v.end(), std::greater<>());
    return Partition{std::move(v)};
}

MonomialMap multiply_by_elementary(const MonomialMap& cur, int k, int degree_now, int nvars) {
    MonomialMap next;
    for (const Partition& kappa : partitions_of(degree_now + k)) {
        if (kappa.length() > nvars) continue;
        int len = kappa.length();
        if (k > len) continue;
        // Sum over k-subsets of the nonzero positions of kappa.
        std::vector<int> pick(static_cast<size_t>(k));
        std::iota(pick.begin(), pick.end(), 0);
        Rational total = 0;
        while (true) {
            std::vector<int> reduced = kappa.parts();
            for (int pos : pick) reduced[static_cast<size_t>(pos)] -= 1;
            auto it = cur.find(sorted_partition(std::move(reduced)));
            if (it != cur.end()) total += it->second;
            // next combination
            int i = k - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == len - k + i) --i;
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
            for (int t = i + 1; t < k; ++t)
                pick[static_cast<size_t>(t)] = pick[static_cast<size_t>(t - 1)] + 1;
        }
        if (total != 0) next[kappa] = total;
    }
    return next;
}

MonomialMap multiply_by_power_sum(const MonomialMap& cur, int k, int degree_now, int nvars) {
    MonomialMap next;
    for (const Partition& kappa : partitions_of(degree_now + k)) {
        if (kappa.length() > nvars) continue;
        Rational total = 0;
        for (int i = 0; i < kappa.length(); ++i) {
            if (kappa.part(i) < k) continue;
            std::vector<int> reduced = kappa.parts();
            reduced[static_cast<size_t>(i)] -= k;
            auto it = cur.find(sorted_partition(std::move(reduced)));
            if (it != cur.end()) total += it->second;
        }
        if (total != 0) next[kappa] = total;
    }
    return next;
}

MonomialMap expand_product(const Partition& lambda, bool elementary, int nvars) {
    MonomialMap cur;
    cur[Partition{}] = 1;
    int degree_now = 0;
    for (int part : lambda.parts()) {
        cur = elementary ? multiply_by_elementary(cur, part, degree_now, nvars)
                         : multiply_by_power_sum(cur, part, degree_now, nvars);
        degree_now += part;
    }
    return cur;
}

Integer count_ssyt(const Partition& shape, const Partition& content) {
    if (shape.weight() != content.weight()) return 0;
    int rows = shape.length();
    int values = content.length();
    std::vector<int> remaining(content.parts().begin(), content.parts().end());
    std::vector<std::vector<int>> fill(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) fill[static_cast<size_t>(r)].assign(static_cast<size_t>(shape.part(r)), 0);

    Integer count = 0;
    // Cell-by-cell backtracking in row-major order: rows weakly increase,
    // columns strictly increase, content consumed exactly.
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            ++count;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == shape.part(r)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
        if (r > 0) lo = std::max(lo, fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
        for (int v = lo; v <= values; ++v) {
            if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
            --remaining[static_cast<size_t>(v - 1)];
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            self(self, nr, nc);
            ++remaining[static_cast<size_t>(v - 1)];
        }
    };
    if (rows == 0) return 1;
    rec(rec, 0, 0);
    return count;
}

}  // namespace

Integer kostka_number(const Partition& shape, const Partition& content) {
    return count_ssyt(shape, content);
}

RatMatrix invert_matrix(const RatMatrix& a) {
    size_t n = a.size();
    RatMatrix work = a;
    RatMatrix inv(n, std::vector<Rational>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && work[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("singular transition matrix");
        std::swap(work[pivot], work[col]);
        std::swap(inv[pivot], inv[col]);
        Rational p = work[col][col];
        for (size_t j = 0; j < n; ++j) {
            work[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || work[row][col] == 0) continue;
            Rational factor = work[row][col];
            for (size_t j = 0; j < n; ++j) {
                work[row][j] -= factor * work[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

TransitionTable::TransitionTable(int n) : degree_(n), index_(partitions_of(n)) {
    for (int i = 0; i < static_cast<int>(index_.size()); ++i)
        position_.emplace(index_[static_cast<size_t>(i)], i);

    size_t dim = index_.size();
    auto identity = [&] {
        RatMatrix id(dim, std::vector<Rational>(dim, 0));
        for (size_t i = 0; i < dim; ++i) id[i][i] = 1;
        return id;
    };

    into_m_[static_cast<int>(Basis::M)] = identity();
    from_m_[static_cast<int>(Basis::M)] = identity();

    auto fill_rows = [&](Basis b, bool elementary) {
        RatMatrix mat(dim, std::vector<Rational>(dim, 0));
        for (size_t r = 0; r < dim; ++r) {
            MonomialMap expansion = expand_product(index_[r], elementary, n);
            for (const auto& [p, c] : expansion) mat[r][static_cast<size_t>(index_of(p))] = c;
        }
        into_m_[static_cast<int>(b)] = std::move(mat);
    };
    fill_rows(Basis::E, true);
    fill_rows(Basis::P, false);

    RatMatrix kostka(dim, std::vector<Rational>(dim, 0));
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c)
            kostka[r][c] = Rational(kostka_number(index_[r], index_[c]));
    into_m_[static_cast<int>(Basis::S)] = std::move(kostka);

    for (int b : {static_cast<int>(Basis::P), static_cast<int>(Basis::E),
                  static_cast<int>(Basis::S)})
        from_m_[b] = invert_matrix(into_m_[b]);
}

const TransitionTable& TransitionTable::for_degree(int n) {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<TransitionTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::unique_ptr<TransitionTable>(new TransitionTable(n))).first;
    return *it->second;
}

int TransitionTable::index_of(const Partition& p) const {
    auto it = position_.find(p);
    if (it == position_.end())
        throw std::invalid_argument("partition does not have the table's weight");
    return it->second;
}

const RatMatrix& TransitionTable::expansion_into_m(Basis b) const {
    return into_m_[static_cast<int>(b)];
}

const RatMatrix& TransitionTable::expansion_from_m(Basis b) const {
    return from_m_[static_cast<int>(b)];
}

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    const TransitionTable& table = TransitionTable::for_degree(f.degree());
    size_t dim = static_cast<size_t>(table.dimension());

    // source coefficients -> m coordinates
    std::vector<Rational> m_coords(dim, 0);
    if (f.basis() == Basis::M) {
        for (const auto& [p, c] : f.coeffs()) m_coords[static_cast<size_t>(table.index_of(p))] = c;
    } else {
        const RatMatrix& into = table.expansion_into_m(f.basis());
        for (const auto& [p, c] : f.coeffs()) {
            size_t row = static_cast<size_t>(table.index_of(p));
            for (size_t j = 0; j < dim; ++j)
                if (into[row][j] != 0) m_coords[j] += c * into[row][j];
        }
    }

    SymFunc out(f.degree(), target);
    if (target == Basis::M) {
        for (size_t j = 0; j < dim; ++j)
            if (m_coords[j] != 0) out.set_coeff(table.index()[j], m_coords[j]);
        return out;
    }
    const RatMatrix& from = table.expansion_from_m(target);
    for (size_t j = 0; j < dim; ++j) {
        Rational total = 0;
        for (size_t v = 0; v < dim; ++v)
            if (m_coords[v] != 0 && from[v][j] != 0) total += m_coords[v] * from[v][j];
        if (total != 0) out.set_coeff(table.index()[j], total);
    }
    return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = convert(f, Basis::P);
    SymFunc gp = convert(g, Basis::P);
    SymFunc out(f.degree() + g.degree(), Basis::P);
    for (const auto& [pf, cf] : fp.coeffs()) {
        for (const auto& [pg, cg] : gp.coeffs()) {
            std::vector<int> parts = pf.parts();
            parts.insert(parts.end(), pg.parts().begin(), pg.parts().end());
            std::sort(parts.begin(), parts.end(), std::greater<>());
            out.add_coeff(Partition{std::move(parts)}, cf * cg);
        }
    }
    if (f.basis() == g.basis()) return convert(out, f.basis());
    return out;
}

bool is_nonneg_in(const SymFunc& f, Basis basis) {
    SymFunc converted = convert(f, basis);
    for (const auto& [p, c] : converted.coeffs())
        if (c < 0) return false;
    return true;
}

SymFunc newton_p_in_e(int n) {
    if (n < 1) throw std::invalid_argument("newton_p_in_e: n must be positive");
    SymFunc out(n, Basis::E);
    for (const Partition& lambda : partitions_of(n)) {
        int len = lambda.length();
        Rational c(factorial(len - 1) * n, automorphism_factor(lambda));
        if ((n - len) % 2 != 0) c = -c;
        out.set_coeff(lambda, c);
    }
    return out;
}

SymFunc jacobi_trudi_s_in_e(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("jacobi_trudi_s_in_e: empty shape");
    Partition t = transpose(lambda);
    int size = lambda.part(0);  // == t.length()
    SymFunc out(lambda.weight(), Basis::E);

    std::vector<int> perm(static_cast<size_t>(size));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
        std::vector<int> parts;
        bool zero = false;
        for (int i = 0; i < size && !zero; ++i) {
            int idx = t.part(i) - i + perm[static_cast<size_t>(i)];  // entry e_{t_i - i + sigma(i)}
            if (idx < 0) zero = true;
            else if (idx > 0) parts.push_back(idx);
        }
        if (zero) continue;
        std::sort(parts.begin(), parts.end(), std::greater<>());
        out.add_coeff(Partition{std::move(parts)}, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace chromaposet

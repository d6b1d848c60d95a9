#include "ahg/forms.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ahg {

namespace {

constexpr int kMaxDim = 12;

long long binom_table[kMaxDim + 1][kMaxDim + 1];
bool binom_init = [] {
    for (int n = 0; n <= kMaxDim; ++n)
        for (int k = 0; k <= kMaxDim; ++k)
            binom_table[n][k] = (k == 0)                ? 1
                                : (n == 0)              ? 0
                                                        : binom_table[n - 1][k - 1] + binom_table[n - 1][k];
    return true;
}();

} // namespace

int Combs::rank(std::span<const int> sorted) const {
    long long r = 0;
    for (int i = 0; i < k; ++i) r += binom_table[sorted[i]][i + 1];
    return int(r);
}

const Combs& combs(int dim, int k) {
    static std::map<std::pair<int, int>, Combs> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto key = std::make_pair(dim, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (dim > kMaxDim || k > dim || k < 0) throw DomainError("combs: unsupported (dim, k)");
    Combs c;
    c.dim = dim;
    c.k = k;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    if (k == 0) {
        c.list.push_back({});
    } else {
        for (;;) {
            c.list.push_back(cur);
            int i = k - 1;
            while (i >= 0 && cur[i] == dim - k + i) --i;
            if (i < 0) break;
            ++cur[i];
            for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
        }
        // the combinatorial number system ranks in colex order
        std::sort(c.list.begin(), c.list.end(),
                  [&](const std::vector<int>& a, const std::vector<int>& b) {
                      return c.rank(a) < c.rank(b);
                  });
    }
    return cache.emplace(key, std::move(c)).first->second;
}

int sort_sign(std::span<int> idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        int v = idx[i];
        std::size_t j = i;
        while (j > 0 && idx[j - 1] > v) {
            idx[j] = idx[j - 1];
            --j;
            sign = -sign;
        }
        idx[j] = v;
    }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

MetricJets make_metric_jets(const MatJ& h, double orient) {
    MetricJets g;
    g.h = h;
    g.hinv = inverse(h);
    Jet det = determinant(h);
    if (!(det.value > 0)) throw StructureError("metric determinant not positive");
    g.sqrt_det = sqrt(det);
    g.orient = orient;
    return g;
}

namespace {

// sign of the permutation (A, complement(A)) of {0..dim-1}, both sorted
int complement_sign(std::span<const int> a, std::span<const int> b) {
    int inv = 0;
    for (int x : a)
        for (int y : b)
            if (x > y) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

} // namespace

JetForm hodge(const JetForm& w, const MetricJets& g) {
    if (w.basis != Basis::Coordinate) throw DomainError("hodge needs coordinate components");
    const int d = w.dim, k = w.deg;
    Jet z = w.zero * 0.0;
    // raise all indices: sharp_A = sum_C w_C det(hinv[A, C])
    const auto& ck = combs(d, k).list;
    std::vector<Jet> sharp(ck.size(), z);
    if (k == 0) {
        sharp[0] = w.c[0];
    } else {
        MatJ minor(k, k);
        for (std::size_t a = 0; a < ck.size(); ++a) {
            Jet acc = z;
            for (std::size_t c = 0; c < ck.size(); ++c) {
                for (int r = 0; r < k; ++r)
                    for (int s = 0; s < k; ++s) minor(r, s) = g.hinv(ck[a][r], ck[c][s]);
                acc = acc + w.c[c] * determinant(minor);
            }
            sharp[a] = acc;
        }
    }
    JetForm r(d, d - k, Basis::Coordinate, z);
    const auto& co = combs(d, d - k).list;
    std::vector<int> comp(k);
    for (std::size_t b = 0; b < co.size(); ++b) {
        // complement of the output combo
        int pos = 0;
        std::vector<char> used(d, 0);
        for (int x : co[b]) used[x] = 1;
        for (int x = 0; x < d; ++x)
            if (!used[x]) comp[pos++] = x;
        int s = complement_sign(comp, co[b]);
        Jet val = sharp[combs(d, k).rank(comp)] * (double(s) * g.orient);
        r.c[b] = val * g.sqrt_det;
    }
    return r;
}

JetForm codifferential(const JetForm& w, const MetricJets& g) {
    if (w.deg == 0) throw DomainError("codifferential of a 0-form");
    JetForm sw = hodge(w, g);
    JetForm dsw = extd(sw);
    JetForm sdsw = hodge(dsw, g);
    return sdsw * (-1.0);
}

double inner(const Form& a, const Form& b) {
    if (a.deg != b.deg || a.dim != b.dim) throw DomainError("inner: degree mismatch");
    if (a.basis == Basis::Coordinate || b.basis == Basis::Coordinate)
        throw DomainError("inner needs orthonormal-basis components");
    double s = 0;
    for (std::size_t i = 0; i < a.c.size(); ++i) s += a.c[i] * b.c[i];
    return s;
}

std::complex<double> hinner(const CForm& a, const CForm& b) {
    if (a.deg != b.deg || a.dim != b.dim) throw DomainError("hinner: degree mismatch");
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < a.c.size(); ++i) s += a.c[i] * std::conj(b.c[i]);
    return s;
}

double norm_sq(const Form& a) { return inner(a, a); }

double norm_sq(const CForm& a) {
    double s = 0;
    for (const auto& x : a.c) s += std::norm(x);
    return s;
}

Form values_of(const JetForm& w) {
    Form r(w.dim, w.deg, w.basis);
    for (std::size_t i = 0; i < w.c.size(); ++i) r.c[i] = w.c[i].value;
    return r;
}

CForm values_of(const CJetForm& w) {
    CForm r(w.dim, w.deg, w.basis);
    for (std::size_t i = 0; i < w.c.size(); ++i) r.c[i] = w.c[i].value;
    return r;
}

CForm complexify(const Form& w) {
    CForm r(w.dim, w.deg, w.basis);
    for (std::size_t i = 0; i < w.c.size(); ++i) r.c[i] = w.c[i];
    return r;
}

CJetForm complexify(const JetForm& w) {
    CJetForm r(w.dim, w.deg, w.basis, complexify(w.zero));
    for (std::size_t i = 0; i < w.c.size(); ++i) r.c[i] = complexify(w.c[i]);
    return r;
}

Form real_part(const CForm& w) {
    Form r(w.dim, w.deg, w.basis);
    for (std::size_t i = 0; i < w.c.size(); ++i) r.c[i] = w.c[i].real();
    return r;
}

Form j_action(const Form& w, const MatD& J) {
    Form r = pullback(w, J, w.basis);
    double s = w.deg % 2 == 0 ? 1.0 : -1.0;
    return r * s;
}

double max_abs_diff(const Form& a, const Form& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.c.size(); ++i) m = std::max(m, std::abs(a.c[i] - b.c[i]));
    return m;
}

double max_abs(const Form& a) {
    double m = 0;
    for (double x : a.c) m = std::max(m, std::abs(x));
    return m;
}

double max_abs(const CForm& a) {
    double m = 0;
    for (const auto& x : a.c) m = std::max(m, std::abs(x));
    return m;
}

namespace {
constexpr double kTau = 6.28318530717958647692;
}

CJetForm pq_project_field(const CJetForm& w, const MatJ& J, int p, int q) {
    if (p + q != w.deg) throw DomainError("pq_project_field: p + q must equal the degree");
    const int k = w.deg, d = w.dim;
    const int nang = 2 * k + 1;
    const int nu = p - q;
    const std::complex<double> I(0, 1);
    CJetForm acc(d, k, Basis::Coordinate, w.zero);
    for (int m = 0; m < nang; ++m) {
        double th = kTau * m / nang;
        Mat<CJet> rot(d, d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                CJet e = complexify(J(a, b) * std::sin(th));
                if (a == b) e = e + std::cos(th);
                rot(a, b) = e;
            }
        CJetForm rw = pullback(w, rot, Basis::Coordinate);
        std::complex<double> wgt = std::exp(-I * (double(nu) * th)) / double(nang);
        for (std::size_t i = 0; i < acc.c.size(); ++i) acc.c[i] = acc.c[i] + rw.c[i] * wgt;
    }
    return acc;
}

CForm pq_project_values(const CForm& w, const MatD& J, int p, int q) {
    if (p + q != w.deg) throw DomainError("pq_project_values: p + q must equal the degree");
    const int k = w.deg, d = w.dim;
    const int nang = 2 * k + 1;
    const int nu = p - q;
    const std::complex<double> I(0, 1);
    CForm acc(d, k, Basis::Coordinate);
    for (int m = 0; m < nang; ++m) {
        double th = kTau * m / nang;
        MatC rot(d, d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                rot(a, b) = (a == b ? std::cos(th) : 0.0) + J(a, b) * std::sin(th);
        CForm rw = pullback(w, rot, Basis::Coordinate);
        std::complex<double> wgt = std::exp(-I * (double(nu) * th)) / double(nang);
        for (std::size_t i = 0; i < acc.c.size(); ++i) acc.c[i] = acc.c[i] + rw.c[i] * wgt;
    }
    return acc;
}

} // namespace ahg

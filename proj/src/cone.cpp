#include "cone.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <string>

namespace hyperpoly::detail {

DtScalar dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    DtScalar acc;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() || b[i].is_zero()) continue;
        acc = acc + a[i] * b[i];
    }
    return acc;
}

namespace {

struct Ray {
    Vec v;
    std::vector<bool> sat;  // saturation bits for the rows processed so far
};

int first_nonzero(const Vec& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
}

void scale_canonical(Vec& v) {
    int p = first_nonzero(v);
    if (p < 0) return;
    DtScalar s = v[p].abs().inverse();
    for (auto& c : v) c = c * s;
}

std::string vec_key(const Vec& v) {
    std::string k;
    for (const auto& c : v) {
        k += c.str();
        k += '|';
    }
    return k;
}

struct State {
    size_t dim;
    std::vector<Vec> lines;
    std::vector<Ray> rays;

    // Puts lines in reduced row echelon form, reduces rays modulo the
    // lineality space, rescales and deduplicates. Lines saturate every
    // processed row, so none of this changes saturation bits.
    void normalize() {
        std::vector<Vec> basis;
        for (Vec l : lines) {
            for (const Vec& b : basis) {
                int p = first_nonzero(b);
                if (p >= 0 && !l[p].is_zero()) {
                    DtScalar f = l[p];
                    for (size_t i = 0; i < dim; ++i) l[i] = l[i] - f * b[i];
                }
            }
            int p = first_nonzero(l);
            if (p < 0) continue;
            DtScalar inv = l[p].inverse();
            for (auto& c : l) c = c * inv;
            basis.push_back(std::move(l));
        }
        // Back-substitute for uniqueness.
        std::sort(basis.begin(), basis.end(),
                  [](const Vec& a, const Vec& b) { return first_nonzero(a) < first_nonzero(b); });
        for (size_t i = basis.size(); i-- > 0;) {
            int p = first_nonzero(basis[i]);
            for (size_t j = 0; j < i; ++j) {
                if (basis[j][p].is_zero()) continue;
                DtScalar f = basis[j][p];
                for (size_t k = 0; k < dim; ++k)
                    basis[j][k] = basis[j][k] - f * basis[i][k];
            }
        }
        lines = std::move(basis);

        std::vector<Ray> kept;
        std::map<std::string, bool> seen;
        for (Ray& r : rays) {
            for (const Vec& b : lines) {
                int p = first_nonzero(b);
                if (!r.v[p].is_zero()) {
                    DtScalar f = r.v[p];
                    for (size_t i = 0; i < dim; ++i) r.v[i] = r.v[i] - f * b[i];
                }
            }
            if (first_nonzero(r.v) < 0) continue;  // swallowed by the lineality space
            scale_canonical(r.v);
            std::string key = vec_key(r.v);
            if (seen.emplace(key, true).second) kept.push_back(std::move(r));
        }
        rays = std::move(kept);
    }

    void add_row(const Vec& c, size_t row_index) {
        // A line not saturating the row pivots: it absorbs the row for
        // everything else and itself becomes a ray on the positive side.
        int pivot = -1;
        for (size_t i = 0; i < lines.size(); ++i) {
            if (!dot(c, lines[i]).is_zero()) {
                pivot = static_cast<int>(i);
                break;
            }
        }
        if (pivot >= 0) {
            Vec l0 = lines[pivot];
            lines.erase(lines.begin() + pivot);
            DtScalar d0 = dot(c, l0);
            for (Vec& l : lines) {
                DtScalar d = dot(c, l);
                if (d.is_zero()) continue;
                DtScalar f = d / d0;
                for (size_t i = 0; i < dim; ++i) l[i] = l[i] - f * l0[i];
            }
            for (Ray& r : rays) {
                DtScalar d = dot(c, r.v);
                if (d.is_zero()) continue;
                DtScalar f = d / d0;
                for (size_t i = 0; i < dim; ++i) r.v[i] = r.v[i] - f * l0[i];
            }
            for (Ray& r : rays) r.sat.push_back(true);
            if (d0.sign() < 0)
                for (auto& x : l0) x = -x;
            Ray nr;
            nr.v = std::move(l0);
            nr.sat.assign(row_index, true);
            nr.sat.push_back(false);
            rays.push_back(std::move(nr));
            normalize();
            return;
        }

        std::vector<size_t> pos, neg;
        std::vector<DtScalar> prod(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) {
            prod[i] = dot(c, rays[i].v);
            int s = prod[i].sign();
            if (s > 0) pos.push_back(i);
            if (s < 0) neg.push_back(i);
        }
        if (neg.empty()) {
            for (size_t i = 0; i < rays.size(); ++i) rays[i].sat.push_back(prod[i].is_zero());
            return;
        }

        auto adjacent = [&](size_t a, size_t b) {
            const auto& sa = rays[a].sat;
            const auto& sb = rays[b].sat;
            for (size_t r = 0; r < rays.size(); ++r) {
                if (r == a || r == b) continue;
                const auto& sr = rays[r].sat;
                bool superset = true;
                for (size_t k = 0; k < sa.size() && superset; ++k)
                    if (sa[k] && sb[k] && !sr[k]) superset = false;
                if (superset) return false;
            }
            return true;
        };

        std::vector<Ray> next;
        for (size_t i = 0; i < rays.size(); ++i) {
            int s = prod[i].sign();
            if (s >= 0) {
                Ray r = rays[i];
                r.sat.push_back(s == 0);
                next.push_back(std::move(r));
            }
        }
        for (size_t ip : pos) {
            for (size_t in : neg) {
                if (!adjacent(ip, in)) continue;
                Ray combo;
                combo.v.resize(dim);
                const DtScalar& dp = prod[ip];
                const DtScalar& dn = prod[in];
                for (size_t k = 0; k < dim; ++k)
                    combo.v[k] = dp * rays[in].v[k] - dn * rays[ip].v[k];
                combo.sat.resize(row_index + 1);
                for (size_t k = 0; k < row_index; ++k)
                    combo.sat[k] = rays[ip].sat[k] && rays[in].sat[k];
                combo.sat[row_index] = true;
                next.push_back(std::move(combo));
            }
        }
        rays = std::move(next);
        normalize();
    }
};

}  // namespace

ConeGenerators cone_generators(size_t dim, const std::vector<ConeRow>& rows) {
    State st;
    st.dim = dim;
    for (size_t i = 0; i < dim; ++i) {
        Vec e(dim);
        e[i] = DtScalar(1);
        st.lines.push_back(std::move(e));
    }

    // Equalities expand into opposing inequality pairs.
    std::vector<Vec> expanded;
    for (const ConeRow& r : rows) {
        assert(r.normal.size() == dim);
        if (first_nonzero(r.normal) < 0) continue;
        expanded.push_back(r.normal);
        if (r.equality) {
            Vec m(dim);
            for (size_t i = 0; i < dim; ++i) m[i] = -r.normal[i];
            expanded.push_back(std::move(m));
        }
    }
    for (size_t i = 0; i < expanded.size(); ++i) st.add_row(expanded[i], i);

    ConeGenerators out;
    out.lines = std::move(st.lines);
    for (Ray& r : st.rays) out.rays.push_back(std::move(r.v));
    return out;
}

}  // namespace hyperpoly::detail

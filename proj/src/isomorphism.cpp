#include "facelat/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace facelat {

namespace {

struct Incidence {
    int n = 0;
    std::vector<std::vector<int>> facet_verts;  // facet -> sorted vertex list
    std::vector<std::vector<int>> vert_facets;  // vertex -> sorted facet list
};

Incidence incidence_graph(const FaceLattice& p) {
    Incidence inc;
    inc.n = p.num_vertices();
    const auto& facets = p.facets();
    inc.facet_verts.resize(facets.size());
    inc.vert_facets.resize(static_cast<size_t>(inc.n));
    for (size_t j = 0; j < facets.size(); ++j) {
        inc.facet_verts[j] = to_indices(facets[j]);
        for (int v : inc.facet_verts[j]) inc.vert_facets[static_cast<size_t>(v)].push_back(static_cast<int>(j));
    }
    return inc;
}

// One round of color refinement: recolor facets by the multiset of incident
// vertex colors, then vertices by the multiset of incident facet colors.
// Colors are dense ranks of sorted signatures, so refinement only splits
// classes; a fixed point is reached once the class counts stop growing.
void refine(const Incidence& inc, std::vector<int>& vcol, std::vector<int>& fcol) {
    const size_t nf = inc.facet_verts.size();
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> fsig(nf);
        for (size_t j = 0; j < nf; ++j) {
            std::vector<int> sig;
            sig.reserve(inc.facet_verts[j].size() + 1);
            sig.push_back(fcol[j]);
            for (int v : inc.facet_verts[j]) sig.push_back(vcol[static_cast<size_t>(v)]);
            std::sort(sig.begin() + 1, sig.end());
            fsig[j] = {std::move(sig), static_cast<int>(j)};
        }
        std::map<std::vector<int>, int> frank;
        for (const auto& [sig, j] : fsig) frank.emplace(sig, 0);
        int next = 0;
        for (auto& [sig, id] : frank) id = next++;
        int old_fcolors = 1 + *std::max_element(fcol.begin(), fcol.end());
        for (const auto& [sig, j] : fsig) fcol[static_cast<size_t>(j)] = frank[sig];

        std::vector<std::pair<std::vector<int>, int>> vsig(static_cast<size_t>(inc.n));
        for (int v = 0; v < inc.n; ++v) {
            std::vector<int> sig;
            sig.reserve(inc.vert_facets[static_cast<size_t>(v)].size() + 1);
            sig.push_back(vcol[static_cast<size_t>(v)]);
            for (int j : inc.vert_facets[static_cast<size_t>(v)]) sig.push_back(fcol[static_cast<size_t>(j)]);
            std::sort(sig.begin() + 1, sig.end());
            vsig[static_cast<size_t>(v)] = {std::move(sig), v};
        }
        std::map<std::vector<int>, int> vrank;
        for (const auto& [sig, v] : vsig) vrank.emplace(sig, 0);
        next = 0;
        for (auto& [sig, id] : vrank) id = next++;
        int old_vcolors = 1 + *std::max_element(vcol.begin(), vcol.end());
        for (const auto& [sig, v] : vsig) vcol[static_cast<size_t>(v)] = vrank[sig];

        int new_vcolors = 1 + *std::max_element(vcol.begin(), vcol.end());
        int new_fcolors = 1 + *std::max_element(fcol.begin(), fcol.end());
        if (new_vcolors == old_vcolors && new_fcolors == old_fcolors) return;
    }
}

using Certificate = std::vector<std::vector<int>>;

Certificate relabeled_facets(const Incidence& inc, const std::vector<int>& label) {
    Certificate cert;
    cert.reserve(inc.facet_verts.size());
    for (const auto& fv : inc.facet_verts) {
        std::vector<int> mapped;
        mapped.reserve(fv.size());
        for (int v : fv) mapped.push_back(label[static_cast<size_t>(v)]);
        std::sort(mapped.begin(), mapped.end());
        cert.push_back(std::move(mapped));
    }
    std::sort(cert.begin(), cert.end());
    return cert;
}

struct CanonSearch {
    const Incidence& inc;
    Certificate best;
    std::vector<int> best_label;
    bool have_best = false;

    void run(std::vector<int> vcol, std::vector<int> fcol) {
        refine(inc, vcol, fcol);
        // smallest color class with at least two vertices
        int target = -1, target_size = 0;
        for (int c = 0;; ++c) {
            int count = static_cast<int>(std::count(vcol.begin(), vcol.end(), c));
            if (count == 0) break;
            if (count >= 2 && (target < 0 || count < target_size)) {
                target = c;
                target_size = count;
            }
        }
        if (target < 0) {
            // discrete coloring: colors are a permutation of 0..n-1
            Certificate cert = relabeled_facets(inc, vcol);
            if (!have_best || cert < best) {
                best = std::move(cert);
                best_label = vcol;
                have_best = true;
            }
            return;
        }
        int fresh = inc.n;  // strictly above every dense color in use
        for (int v = 0; v < inc.n; ++v) {
            if (vcol[static_cast<size_t>(v)] != target) continue;
            std::vector<int> vcol2 = vcol;
            vcol2[static_cast<size_t>(v)] = fresh;
            run(std::move(vcol2), fcol);
        }
    }
};

std::pair<Certificate, std::vector<int>> canonical_labeling(const Incidence& inc) {
    CanonSearch search{inc, {}, {}, false};
    search.run(std::vector<int>(static_cast<size_t>(inc.n), 0),
               std::vector<int>(inc.facet_verts.size(), 0));
    return {std::move(search.best), std::move(search.best_label)};
}

}  // namespace

std::vector<std::vector<int>> canonical_certificate(const FaceLattice& p) {
    return canonical_labeling(incidence_graph(p)).first;
}

IsomorphismResult is_isomorphic(const FaceLattice& p, const FaceLattice& q) {
    if (p.dim() != q.dim() || p.num_vertices() != q.num_vertices() ||
        p.f_vector() != q.f_vector())
        return {};

    Incidence ip = incidence_graph(p), iq = incidence_graph(q);
    auto [cert_p, label_p] = canonical_labeling(ip);
    auto [cert_q, label_q] = canonical_labeling(iq);
    if (cert_p != cert_q) return {};

    // witness = label_q^{-1} . label_p
    std::vector<int> inv_q(label_q.size());
    for (size_t v = 0; v < label_q.size(); ++v) inv_q[static_cast<size_t>(label_q[v])] = static_cast<int>(v);
    IsomorphismResult res;
    res.isomorphic = true;
    res.witness.resize(label_p.size());
    for (size_t v = 0; v < label_p.size(); ++v)
        res.witness[v] = inv_q[static_cast<size_t>(label_p[v])];
    return res;
}

std::optional<int> classify_simplicial_d2(const FaceLattice& p) {
    const int d = p.dim();
    if (d < 2 || p.num_vertices() != d + 2 || !p.is_simplicial()) return std::nullopt;
    for (int m = 1; m <= d / 2; ++m)
        if (is_isomorphic(p, direct_sum_simplices(m, d - m)).isomorphic) return m;
    return std::nullopt;
}

}  // namespace facelat

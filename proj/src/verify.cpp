#include "polyprod/verify.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "polyprod/document.hpp"
#include "polyprod/hochster.hpp"
#include "polyprod/random_complex.hpp"
#include "polyprod/space_models.hpp"

namespace polyprod {
namespace {

// Largest ground a suite accepts; exhaustive pair loops are 3^n.
constexpr int kMaxSuiteVertices = 12;
// Above this many pairs a trial checks an evenly spaced subset.
constexpr std::size_t kPairBudget = 20000;

struct Instance {
    std::vector<std::pair<std::string, SimplicialComplex>> complexes;
    SpherePairSystem spheres;
    std::vector<FiniteSpacePair> finite;
};

struct Suite {
    std::string name;
    std::function<Instance(Rng&, const VerifyOptions&)> generate;
    /// True when the instance satisfies the identity.
    std::function<bool(const Instance&)> check;
};

VertexSet first_labels(int n) { return VertexSet::range(1, n); }

std::vector<IndexPair> pairs_to_check(VertexSet ground, bool nonempty_omega) {
    std::vector<IndexPair> all = all_index_pairs(ground);
    std::vector<IndexPair> out;
    const std::size_t stride = std::max<std::size_t>(1, all.size() / kPairBudget);
    for (std::size_t i = 0; i < all.size(); i += stride)
        if (!nonempty_omega || !all[i].omega.empty())
            out.push_back(all[i]);
    return out;
}

// Block sizes in [1, 3] summing to at most max_total, for m blocks.
std::vector<int> random_blocks(Rng& rng, int m, int max_total) {
    std::vector<int> sizes(static_cast<std::size_t>(m));
    for (auto& s : sizes)
        s = uniform_int(rng, 1, 3);
    int total = 0;
    for (int s : sizes)
        total += s;
    for (std::size_t i = 0; total > max_total; i = (i + 1) % sizes.size())
        if (sizes[i] > 1) {
            --sizes[i];
            --total;
        }
    return sizes;
}

std::vector<VertexSet> block_grounds(const std::vector<int>& sizes) {
    std::vector<VertexSet> out;
    int next = 1;
    for (int s : sizes) {
        out.push_back(VertexSet::range(next, next + s - 1));
        next += s;
    }
    return out;
}

std::vector<SimplicialComplex> tail(const Instance& in, std::size_t from) {
    std::vector<SimplicialComplex> out;
    for (std::size_t i = from; i < in.complexes.size(); ++i)
        out.push_back(in.complexes[i].second);
    return out;
}

// K on [m] plus one complex per block; m small enough that blocks fit.
Instance composition_instance(Rng& rng, const VerifyOptions& o, bool nonvoid_blocks, int max_m) {
    const int m = uniform_int(rng, 1, std::max(1, std::min(max_m, o.max_vertices)));
    Instance in;
    in.complexes.emplace_back("K", random_complex(first_labels(m), rng));
    const auto grounds = block_grounds(random_blocks(rng, m, std::max(m, o.max_vertices)));
    for (std::size_t k = 0; k < grounds.size(); ++k) {
        SimplicialComplex l = random_complex(grounds[k], rng);
        if (nonvoid_blocks && l.is_void())
            l = SimplicialComplex::empty_face(grounds[k]);
        in.complexes.emplace_back("L" + std::to_string(k + 1), std::move(l));
    }
    return in;
}

std::vector<Suite> make_suites() {
    std::vector<Suite> s;

    s.push_back({"dual",
                 [](Rng& rng, const VerifyOptions& o) {
                     const VertexSet g = first_labels(uniform_int(rng, 1, o.max_vertices));
                     Instance in;
                     in.complexes.emplace_back("K1", random_complex(g, rng));
                     in.complexes.emplace_back("K2", random_complex(g, rng));
                     return in;
                 },
                 [](const Instance& in) {
                     const auto& a = in.complexes[0].second;
                     const auto& b = in.complexes[1].second;
                     const VertexSet sg = a.ground();
                     return dual(dual(a, sg), sg) == a &&
                            dual(complex_union(a, b), sg) == complex_intersection(dual(a, sg), dual(b, sg)) &&
                            dual(complex_intersection(a, b), sg) == complex_union(dual(a, sg), dual(b, sg));
                 }});

    s.push_back({"slice-dual",
                 [](Rng& rng, const VerifyOptions& o) {
                     Instance in;
                     in.complexes.emplace_back("K", random_complex(first_labels(uniform_int(rng, 1, o.max_vertices)), rng));
                     return in;
                 },
                 [](const Instance& in) {
                     const auto& k = in.complexes[0].second;
                     const VertexSet sg = k.ground();
                     const SimplicialComplex kd = dual(k, sg);
                     for (const auto& p : pairs_to_check(sg, true))
                         if (dual(slice(k, p), p.omega) != slice(kd, IndexPair(sg - (p.sigma | p.omega), p.omega)))
                             return false;
                     return true;
                 }});

    s.push_back({"compose-dual",
                 [](Rng& rng, const VerifyOptions& o) { return composition_instance(rng, o, false, 4); },
                 [](const Instance& in) {
                     const auto& k = in.complexes[0].second;
                     const auto ls = tail(in, 1);
                     const SimplicialComplex comp = composition_complex(k, ls);
                     std::vector<SimplicialComplex> duals;
                     for (const auto& l : ls)
                         duals.push_back(dual(l, l.ground()));
                     return dual(comp, comp.ground()) == composition_complex(dual(k, k.ground()), duals);
                 }});

    s.push_back({"compose-slice",
                 [](Rng& rng, const VerifyOptions& o) {
                     Instance in = composition_instance(rng, o, false, 4);
                     // Replace each L_k by a random pair (X_k, A_k).
                     Instance out;
                     out.complexes.push_back(in.complexes[0]);
                     for (std::size_t i = 1; i < in.complexes.size(); ++i) {
                         SimplicialPair p = random_pair(in.complexes[i].second.ground(), rng);
                         out.complexes.emplace_back("X" + std::to_string(i), p.X);
                         out.complexes.emplace_back("A" + std::to_string(i), p.A);
                     }
                     return out;
                 },
                 [](const Instance& in) {
                     const auto& k = in.complexes[0].second;
                     std::vector<SimplicialPair> pairs;
                     for (std::size_t i = 1; i + 1 < in.complexes.size(); i += 2)
                         pairs.emplace_back(in.complexes[i].second, in.complexes[i + 1].second);
                     const SimplicialComplex comp = polyhedral_complex(k, pairs);
                     for (const auto& p : pairs_to_check(comp.ground(), false)) {
                         std::vector<SimplicialPair> sliced;
                         for (const auto& pr : pairs) {
                             const IndexPair local(p.sigma & pr.ground(), p.omega & pr.ground());
                             sliced.emplace_back(slice(pr.X, local), slice(pr.A, local));
                         }
                         if (slice(comp, p) != polyhedral_complex(k, sliced))
                             return false;
                     }
                     return true;
                 }});

    s.push_back({"alexander",
                 [](Rng& rng, const VerifyOptions& o) {
                     Instance in;
                     in.complexes.emplace_back("K", random_complex(first_labels(uniform_int(rng, 1, o.max_vertices)), rng));
                     return in;
                 },
                 [](const Instance& in) {
                     const auto& k = in.complexes[0].second;
                     const SimplicialComplex kd = dual(k, k.ground());
                     for (const auto& p : pairs_to_check(k.ground(), true))
                         if (!alexander_duality_witness(k, kd, p, k.ground()).holds())
                             return false;
                     return true;
                 }});

    s.push_back({"composition-homology",
                 [](Rng& rng, const VerifyOptions& o) { return composition_instance(rng, o, false, 4); },
                 [](const Instance& in) {
                     const auto ls = tail(in, 1);
                     try {
                         return composition_homology(in.complexes[0].second, ls).agree;
                     } catch (const OutOfScopeError&) {
                         // Torsion is outside the integer formula; the field version must hold.
                         return composition_homology(in.complexes[0].second, ls, Coefficients::rationals()).agree;
                     }
                 }});

    s.push_back({"hochster-composition",
                 [](Rng& rng, const VerifyOptions& o) { return composition_instance(rng, o, true, 3); },
                 [](const Instance& in) {
                     const auto ls = tail(in, 1);
                     const auto& k = in.complexes[0].second;
                     auto report = hochster_composition_formula(k, ls);
                     if (report.mismatched == 0 && report.unsupported > 0)
                         report = hochster_composition_formula(k, ls, Coefficients::rationals());
                     return report.all_isomorphic();
                 }});

    s.push_back({"complement",
                 [](Rng& rng, const VerifyOptions& o) {
                     const int m = uniform_int(rng, 1, std::min(4, o.max_vertices));
                     Instance in;
                     in.complexes.emplace_back("K", random_complex(first_labels(m), rng));
                     for (int k = 0; k < m; ++k) {
                         std::vector<int> x;
                         std::vector<int> a;
                         const int size = uniform_int(rng, 0, 3);
                         for (int p = 1; p <= size; ++p) {
                             x.push_back(p);
                             if (uniform_int(rng, 0, 1) == 1)
                                 a.push_back(p);
                         }
                         in.finite.push_back(FiniteSpacePair::of(x, a));
                     }
                     return in;
                 },
                 [](const Instance& in) { return complement_identity_check(in.complexes[0].second, in.finite).holds; }});

    s.push_back({"substitution",
                 [](Rng& rng, const VerifyOptions& o) {
                     const int m = uniform_int(rng, 1, std::min(3, o.max_vertices));
                     Instance in;
                     in.complexes.emplace_back("K", random_complex(first_labels(m), rng));
                     std::vector<int> sizes(static_cast<std::size_t>(m));
                     for (auto& sz : sizes)
                         sz = uniform_int(rng, 1, 2);
                     int n = 0;
                     for (const VertexSet g : block_grounds(sizes)) {
                         SimplicialPair p = random_pair(g, rng);
                         in.complexes.emplace_back("X" + std::to_string(in.complexes.size() / 2 + 1), p.X);
                         in.complexes.emplace_back("A" + std::to_string(in.complexes.size() / 2), p.A);
                         n += g.size();
                     }
                     for (int i = 0; i < n; ++i) {
                         std::vector<int> u;
                         std::vector<int> c;
                         const int size = uniform_int(rng, 0, 2);
                         for (int p = 1; p <= size; ++p) {
                             u.push_back(p);
                             if (uniform_int(rng, 0, 1) == 1)
                                 c.push_back(p);
                         }
                         in.finite.push_back(FiniteSpacePair::of(u, c));
                     }
                     return in;
                 },
                 [](const Instance& in) {
                     std::vector<SimplicialPair> inner;
                     for (std::size_t i = 1; i + 1 < in.complexes.size(); i += 2)
                         inner.emplace_back(in.complexes[i].second, in.complexes[i + 1].second);
                     return substitution_identity_check(in.complexes[0].second, inner, in.finite).holds;
                 }});

    s.push_back({"sphere-duality",
                 [](Rng& rng, const VerifyOptions& o) {
                     const int n = uniform_int(rng, 1, o.max_vertices);
                     Instance in;
                     in.complexes.emplace_back("K", random_complex(first_labels(n), rng));
                     std::vector<SpherePair> params;
                     for (int k = 0; k < n; ++k) {
                         const int r = uniform_int(rng, 0, 3);
                         params.push_back({r, uniform_int(rng, 0, r)});
                     }
                     in.spheres = SpherePairSystem(std::move(params));
                     return in;
                 },
                 [](const Instance& in) { return sphere_pair_duality_check(in.complexes[0].second, in.spheres).holds(); }});
    return s;
}

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = make_suites();
    return all;
}

bool passes(const Suite& suite, const Instance& in) {
    try {
        return suite.check(in);
    } catch (const InputError&) {
        // Only reachable for minimization candidates that break the instance shape.
        return true;
    }
}

void print_instance(const Instance& in, std::ostream& out) {
    for (const auto& [name, k] : in.complexes) {
        out << "  " << name << ":\n";
        std::string doc = render_document(k);
        std::size_t start = 0;
        while (start < doc.size()) {
            const auto end = doc.find('\n', start);
            out << "    " << doc.substr(start, end - start) << '\n';
            start = end + 1;
        }
    }
    if (in.spheres.size() > 0)
        out << "  spheres: " << in.spheres.to_string() << '\n';
    for (std::size_t i = 0; i < in.finite.size(); ++i) {
        out << "  pair" << i + 1 << ": X={";
        bool first = true;
        for (const auto& p : in.finite[i].X) {
            out << (first ? "" : ",") << point_to_string(p);
            first = false;
        }
        out << "} A={";
        first = true;
        for (const auto& p : in.finite[i].A) {
            out << (first ? "" : ",") << point_to_string(p);
            first = false;
        }
        out << "}\n";
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : suites())
            out.push_back(s.name);
        return out;
    }();
    return names;
}

SimplicialComplex minimize_complex(const SimplicialComplex& k,
                                   const std::function<bool(const SimplicialComplex&)>& still_fails) {
    auto fails = [&](const SimplicialComplex& c) {
        try {
            return still_fails(c);
        } catch (const std::exception&) {
            return false;
        }
    };
    auto rebuild = [](VertexSet ground, const std::vector<VertexSet>& facets) {
        std::vector<std::uint64_t> bits;
        for (VertexSet f : facets)
            bits.push_back(f.bits());
        return SimplicialComplex::from_sorted_faces(ground, close_downward(bits));
    };
    SimplicialComplex cur = k;
    bool changed = true;
    while (changed) {
        changed = false;
        const auto facets = canonical_facets(cur);
        // Drop one facet, or replace it by its codimension-one faces.
        for (std::size_t i = 0; i < facets.size() && !changed; ++i) {
            std::vector<VertexSet> rest = facets;
            rest.erase(rest.begin() + static_cast<long>(i));
            SimplicialComplex cand = rebuild(cur.ground(), rest);
            if (fails(cand)) {
                cur = std::move(cand);
                changed = true;
                break;
            }
            for (int v : facets[i].labels())
                rest.push_back(facets[i] - VertexSet::single(v));
            if (!facets[i].empty()) {
                cand = rebuild(cur.ground(), rest);
                if (fails(cand)) {
                    cur = std::move(cand);
                    changed = true;
                }
            }
        }
        for (int v : cur.ground().labels()) {
            if (changed)
                break;
            SimplicialComplex cand = restrict_to(cur, cur.ground() - VertexSet::single(v));
            if (fails(cand)) {
                cur = std::move(cand);
                changed = true;
            }
        }
    }
    return cur;
}

VerifyOutcome run_suite(std::string_view name, const VerifyOptions& options, std::ostream& out) {
    const auto& all = suites();
    const auto it = std::find_if(all.begin(), all.end(), [&](const Suite& s) { return s.name == name; });
    if (it == all.end()) {
        std::string known;
        for (const auto& s : all)
            known += (known.empty() ? "" : ", ") + s.name;
        throw InputError("unknown suite '" + std::string(name) + "' (known: " + known + ")");
    }
    if (options.max_vertices < 1 || options.max_vertices > kMaxSuiteVertices)
        throw InputError("--max-vertices must lie in 1.." + std::to_string(kMaxSuiteVertices));
    if (options.trials < 0)
        throw InputError("--trials must be nonnegative");

    const Suite& suite = *it;
    VerifyOutcome outcome;
    for (int t = 0; t < options.trials; ++t) {
        const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(t);
        Rng rng(seed);
        Instance in = suite.generate(rng, options);
        const bool ok = passes(suite, in);
        ++outcome.trials;
        out << "TRIAL " << seed << ' ' << suite.name << (ok ? " PASS" : " FAIL") << '\n';
        if (ok) {
            ++outcome.passed;
            continue;
        }
        ++outcome.failed;
        for (std::size_t c = 0; c < in.complexes.size(); ++c) {
            in.complexes[c].second = minimize_complex(in.complexes[c].second, [&](const SimplicialComplex& cand) {
                Instance trial = in;
                trial.complexes[c].second = cand;
                return !suite.check(trial);
            });
        }
        out << "  counterexample (minimized):\n";
        print_instance(in, out);
    }
    out << "SUMMARY " << suite.name << " trials=" << outcome.trials << " passed=" << outcome.passed
        << " failed=" << outcome.failed << '\n';
    return outcome;
}

}  // namespace polyprod

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ahg/expr.hpp"
#include "ahg/jet.hpp"
#include "ahg/linalg.hpp"

namespace ahg {

struct ChartPoint {
    std::vector<double> coords;
    std::string chart_id = "main";
};

/// Metric and almost-complex-structure jets at one point.  J is stored as
/// J^A_B with J(d_B) = sum_A J(A,B) d_A.
struct StructureJets {
    int n = 0; // complex dimension; real dimension is 2n
    MatJ h;
    MatJ J;
};

/// order is the jet order carried by h and J (1 for cheap value probes,
/// 2 for the full curvature pipeline).
using StructureField = std::function<StructureJets(std::span<const double>, int order)>;

struct Domain {
    enum class Kind { PeriodicBox, HomogeneousAtlas };
    Kind kind = Kind::PeriodicBox;
    std::vector<std::pair<double, double>> box;        // fundamental domain (PeriodicBox)
    std::vector<std::pair<double, double>> sample_box; // where random points are drawn
    double volume = 0.0;                               // declared volume (HomogeneousAtlas)
    bool homogeneous = false;                          // curvature scalars constant
};

struct Manifold {
    std::string name;
    int n = 0;
    StructureField field;
    Domain domain;
    std::string expected_class; // e.g. "Kahler", "W4", "W1+W2+W3+W4"
    // expected scalar table; keys like "s", "s_J", "nsq_dF", "nsq_nablaF",
    // "s1@1", "s2@1", "s1@-1 - s2@-1"
    std::map<std::string, double> expected_scalars;
    bool exportable = false;
    std::vector<std::vector<std::string>> metric_exprs; // 2n x 2n, when exportable
    std::vector<std::vector<std::string>> j_exprs;

    int dim() const { return 2 * n; }
    StructureJets eval(std::span<const double> x, int order = 2) const { return field(x, order); }
    StructureJets eval(const ChartPoint& p, int order = 2) const {
        return field(p.coords, order);
    }
};

/// Built-in catalog.  Deterministic order; every entry carries its expected
/// classification and, where pinned, expected scalar values.
const std::vector<Manifold>& catalog();
const Manifold& find_manifold(const std::string& name);

/// Build intrinsic (h, J) jets from an embedding chart E: R^d -> R^m with
/// jets of one order higher, and an ambient J rule (a matrix-valued function
/// of the ambient position).  h = DE^T DE and J is the pullback of the
/// ambient rule through the pseudo-inverse of DE.
StructureJets embedded_structure(const std::vector<Jet>& embedding,
                                 const std::function<MatJ(const std::vector<Jet>&)>& ambient_j,
                                 int n);

/// JSON manifold spec I/O (the expr-lang file interface).
Manifold load_manifold_json(const std::string& path);
Manifold manifold_from_json_text(const std::string& text);
std::string manifold_to_json_text(const Manifold& m);

/// Deterministic splitmix64-based sampler (stable across platforms).
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

std::vector<ChartPoint> sample_points(const Manifold& m, int count, std::uint64_t seed);

} // namespace ahg

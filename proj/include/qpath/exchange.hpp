#pragma once

#include <string>
#include <vector>

#include "qpath/minors.hpp"
#include "qpath/pathkit.hpp"
#include "qpath/qtorus.hpp"
#include "qpath/segraph.hpp"

namespace qpath {

// white sets come from the first flow's index pair, black sets from the second
struct RefinedCortege {
    std::vector<int> Iw, Ib, Jw, Jb;
    bool is_white_row(int f) const;
    bool is_white_col(int f) const;
    int k() const { return static_cast<int>(Iw.size() + Ib.size() + Jw.size() + Jb.size()) / 2; }
};

RefinedCortege refine(const std::vector<int>& I, const std::vector<int>& J,
                      const std::vector<int>& I2, const std::vector<int>& J2);

struct YElem {
    bool is_row = false;
    int index = 0;  // 1-based source or sink index
    bool operator==(const YElem&) const = default;
    bool operator<(const YElem& o) const {
        return std::tie(is_row, index) < std::tie(o.is_row, o.index);
    }
};

enum class CoupleKind { R, C, RC };

struct Couple {
    YElem a, b;
    CoupleKind kind = CoupleKind::RC;
    bool operator==(const Couple&) const = default;
};

struct Matching {
    std::vector<Couple> couples;
};

// color rule per couple plus non-crossing chords on the circle that carries
// row indices ascending followed by column indices descending
bool feasible(const Matching& m, const RefinedCortege& rc, std::string* why = nullptr);

struct DoubleFlow {
    Flow first;   // the (I|J)-flow
    Flow second;  // the (I'|J')-flow
};

struct ExchangePath {
    std::vector<int> edges;            // graph edge indices, in traversal order
    std::vector<char> from_first;      // parallel to edges: 1 = first flow, 0 = second
    std::vector<int> verts;            // vertex indices, one longer than edges
    YElem end_a, end_b;                // endpoints at verts.front() / verts.back()
};

struct CycleComp {
    std::vector<int> edges;        // in cyclic traversal order
    std::vector<char> from_first;  // parallel to edges
    std::vector<int> verts;        // verts.front() == verts.back()
};

struct Decomposition {
    std::vector<ExchangePath> paths;
    std::vector<CycleComp> cycles;
    Matching matching;
    RefinedCortege cortege;
};

Decomposition decompose(const DoubleFlow& df, const SEGraph& g);

DoubleFlow exchange(const DoubleFlow& df, const Couple& pi, const SEGraph& g);

// exponent k with w(phi)w(phi') = q^k w(psi)w(psi')
std::int64_t exchange_ratio(const DoubleFlow& df, const Couple& pi, const SEGraph& g,
                            const CommutationTable& table);

// +1 when the smaller index of an R- or C-couple is white, -1 when black,
// 0 for RC-couples
int predicted_exchange_exponent(const Couple& pi, const RefinedCortege& rc);

// C: C-couple with white smaller index ... C5: RC-couple with black elements
enum class ExchangeCase { C, C1, C2, C3, C4, C5 };
ExchangeCase classify_case(const Couple& pi, const RefinedCortege& rc);
std::string case_name(ExchangeCase c);

// a maximal run of one flow inside the exchange path (snake) or a leftover
// piece of a flow path (link); trivial links are single vertices
struct Segment {
    DPath path;
    bool white = false;   // belongs to the first flow
    bool snake = false;
    bool trivial = false;
    int id = -1;
};

enum class BendKind { peak, pit };

struct Bend {
    int vertex = -1;
    BendKind kind = BendKind::peak;
    bool twin = false;       // shares its vertex with the complementary bend
    int white_seg = -1;      // segment ids of the two snakes meeting here
    int black_seg = -1;
};

struct SnakeLinkDecomposition {
    std::vector<Segment> segments;      // indexed by Segment::id
    std::vector<int> snake_order;       // ids of Z_1..Z_k in traversal order
    std::vector<Bend> bends;            // z_1..z_{k-1}
    std::vector<int> string_n;          // segment ids in the order of w(phi)w(phi')
    std::vector<int> string_nstar;      // segment ids in the order of w(psi)w(psi')
    bool degenerate = false;            // some non-twin alpha coincidence exists
    ExchangeCase kase = ExchangeCase::C;
};

// supported for cases (C), (C2) and (C4); the remaining cases are the same
// pictures with the two flows swapped, so callers apply the exchange first
SnakeLinkDecomposition snakes_and_links(const DoubleFlow& df, const Couple& pi, const SEGraph& g);

int gamma_of_bend(const Bend& z, const SnakeLinkDecomposition& dec, const SEGraph& g);
int gamma_Z(const SnakeLinkDecomposition& dec, const SEGraph& g);

struct StringProducts {
    std::int64_t phiI = 0;    // permuting link-link pairs
    std::int64_t phiII = 0;   // permuting snake-snake pairs
    std::int64_t phiIII = 0;  // permuting snake-link pairs
    std::int64_t total() const { return phiI + phiII + phiIII; }
};

StringProducts string_products(const SnakeLinkDecomposition& dec, const SEGraph& g,
                               const CommutationTable& table);

// plain geometric polyline, directed
using PolyLine = std::vector<std::pair<std::int64_t, std::int64_t>>;

// closed alternating cycle of directed snakes; snakes[0] is white, colors
// alternate around the cycle
struct ColoredCycle {
    std::vector<PolyLine> snakes;
};

enum class Orientation { cw, ccw };

struct GammaCycleResult {
    Orientation orientation = Orientation::cw;
    int gamma = 0;
};

GammaCycleResult gamma_cycle(const ColoredCycle& d);

// turns a harvested cycle component into a colored cycle; the first flow's
// runs become the white snakes
ColoredCycle cycle_from_component(const CycleComp& comp, const SEGraph& g);

}  // namespace qpath

#ifndef CANON_HILBERT_HPP
#define CANON_HILBERT_HPP

#include "canon/ratpoly.hpp"
#include "canon/rootloc.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace canon {

struct CurveData {
    std::int64_t genus = 0;
};

struct SurfaceData {
    Rational c1sq;
    Rational c2;
};

struct ThreefoldData {
    Rational c1cube;
    Rational c1c2;
};

/// Chern numbers tagged by dimension.
using ChernData = std::variant<CurveData, SurfaceData, ThreefoldData>;

int dimension_of(const ChernData& data);
std::string describe(const ChernData& data);

struct GrassmannianSpec {
    int k = 1;
    int n = 2;  // ambient vector-space dimension N

    /// Validates N >= 2k >= 2.
    static GrassmannianSpec make(int k, int n);
    [[nodiscard]] int dimension() const { return k * (n - k); }
};

/// real_part +- (1/2) sqrt(radicand) pairs plus isolated rational roots.
/// A negative radicand encodes a conjugate pair on Re z = real_part.
struct ClosedFormRoots {
    struct Pair {
        Rational real_part;
        Rational radicand;
    };
    std::vector<Pair> pairs;
    std::vector<Rational> isolated;

    [[nodiscard]] std::size_t count() const { return 2 * pairs.size() + isolated.size(); }
};

Polynomial hilbert_curve(std::int64_t genus);
Polynomial hilbert_surface(const SurfaceData& c);
Polynomial hilbert_threefold(const ThreefoldData& c);
Polynomial hilbert_from_chern(const ChernData& c);

/// prod_{i=1..n} ((n+1) z + i) / i
Polynomial hilbert_projective(int n);

/// c * prod_{i=1}^{N-1} (z + i/N)^{min(k, i, N-i)}, with c fixed by H(0) = 1.
Polynomial hilbert_grassmannian(const GrassmannianSpec& spec);

ClosedFormRoots closed_form_roots(const ChernData& c);

/// reflect(p) == (-1)^n p, i.e. H(-1-z) = (-1)^n H(z).
bool serre_check(const Polynomial& p, int n);

// ---------------------------------------------------------------------------
// Chern-number scans

enum class ScanFamily { DelPezzo, FanoThreefold, Surface, Threefold };

struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    /// "a..b" or a single integer.
    static IntRange parse(const std::string& text);
    [[nodiscard]] bool empty() const { return lo > hi; }
};

struct ScanRequest {
    ScanFamily family = ScanFamily::DelPezzo;
    IntRange first{1, 9};   // c1sq or c1cube
    IntRange second{0, 0};  // c2 or c1c2; ignored for the constrained families
};

/// Default ranges: dp c1sq 1..9; fano3 c1cube 2..64.
ScanRequest default_scan(ScanFamily family);
ScanFamily parse_family(const std::string& name);
std::string family_name(ScanFamily family);

struct ScanRow {
    ChernData data;
    StripVerdict verdict;
    /// 3 - 6 c2 / c1^2 for surfaces, -2 c1c2 / c1^3 for threefolds.
    Rational ratio;
};

struct ScanSummary {
    std::size_t rows = 0;
    std::size_t cs = 0;
    std::size_t ncs = 0;
    std::size_t cl = 0;
    std::size_t skipped = 0;  // data rejected by the constructors (c1sq == 0, ...)
};

struct ScanResult {
    std::vector<ScanRow> rows;
    ScanSummary summary;
};

/// Ascending enumeration over the ranges; rows are in range order.
ScanResult scan(const ScanRequest& request);

} // namespace canon

#endif

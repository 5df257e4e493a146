#pragma once

#include "riderlab/counting.hpp"
#include "riderlab/rational.hpp"

#include <optional>
#include <vector>

namespace riderlab {

/** Polynomial with exact rational coefficients, ascending degree order
 *  (coeffs[k] multiplies n^k). */
struct Polynomial {
    std::vector<Rat> coeffs;

    Rat eval(const Int& n) const;
    int degree() const; // -1 for the zero polynomial
    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/** Interpolating polynomial through (xs[i], ys[i]) via Newton divided
 *  differences; xs must be strictly increasing. */
Polynomial interpolate(const std::vector<Int>& xs, const std::vector<Rat>& ys);

/** Quasipolynomial of period p: constituents[r] applies to arguments
 *  n with n mod p == r. */
struct QuasiPoly {
    int period = 0;
    int degree = 0;
    std::vector<Polynomial> constituents; // indexed by n mod period

    Rat eval(const Int& n) const;
};

/** Fits a period-p quasipolynomial of the given degree to the table: per
 *  residue class, interpolates through the first degree+1 entries and checks
 *  every remaining entry exactly (at least one validation point per class).
 *  Returns nothing when some entry disagrees or a constituent's leading
 *  coefficient is not 1/q! (with degree = 2q).  Throws InsufficientDataError
 *  when the table is shorter than p*(degree+2). */
std::optional<QuasiPoly> fit_quasipoly(const CountTable& table, int p, int degree);

struct PeriodResult {
    int period = 0;
    QuasiPoly quasipoly;
};

/** Smallest p <= p_max whose fit succeeds.  Throws InsufficientDataError when
 *  the scan hits a p the table cannot support before finding a fit, and
 *  NoPeriodError when every supported p <= p_max fails. */
PeriodResult detect_period(const CountTable& table, int degree, int p_max);

struct PeriodDenominatorProbe {
    int period = 0;
    Int denominator;
    bool equal = false;
};

/** Probes the period-equals-denominator question for one piece and size:
 *  detects the counting period from a fresh table (n up to n_max) and computes
 *  the polytope denominator; reports both and whether they agree. */
PeriodDenominatorProbe check_period_equals_denominator(const Piece& piece, int q, int n_max);

} // namespace riderlab

#include "riderlab/quasipoly.hpp"
#include "riderlab/errors.hpp"
#include "riderlab/vertices.hpp"

#include <algorithm>

namespace riderlab {

Rat Polynomial::eval(const Int& n) const {
    Rat acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * Rat(n) + coeffs[k];
    return acc;
}

int Polynomial::degree() const {
    for (std::size_t k = coeffs.size(); k-- > 0;)
        if (coeffs[k] != 0) return static_cast<int>(k);
    return -1;
}

Polynomial interpolate(const std::vector<Int>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw ValidationError("interpolate: need equally many xs and ys, at least one");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] <= xs[i - 1]) throw ValidationError("interpolate: xs must increase strictly");
    const std::size_t m = xs.size();
    // Newton divided differences.
    std::vector<Rat> dd(ys);
    std::vector<Rat> newton(m);
    newton[0] = dd[0];
    for (std::size_t level = 1; level < m; ++level) {
        for (std::size_t i = 0; i + level < m; ++i)
            dd[i] = (dd[i + 1] - dd[i]) / Rat(xs[i + level] - xs[i]);
        newton[level] = dd[0];
    }
    // Expand the Newton form into standard coefficients.
    Polynomial p;
    p.coeffs = {newton[m - 1]};
    for (std::size_t level = m - 1; level-- > 0;) {
        // p <- p * (x - xs[level]) + newton[level]
        p.coeffs.insert(p.coeffs.begin(), Rat(0));
        for (std::size_t k = 0; k + 1 < p.coeffs.size(); ++k)
            p.coeffs[k] -= Rat(xs[level]) * p.coeffs[k + 1];
        p.coeffs[0] += newton[level];
    }
    // canonical form: no trailing zero coefficients
    while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
    return p;
}

Rat QuasiPoly::eval(const Int& n) const {
    Int r = n % period;
    if (r < 0) r += period;
    return constituents[static_cast<std::size_t>(r)].eval(n);
}

std::optional<QuasiPoly> fit_quasipoly(const CountTable& table, int p, int degree) {
    if (p < 1) throw ValidationError("fit_quasipoly: period must be >= 1");
    if (degree < 0) throw ValidationError("fit_quasipoly: degree must be >= 0");
    const int n_max = table.n_max();
    if (n_max < p * (degree + 2))
        throw InsufficientDataError("fit_quasipoly: table of size " + std::to_string(n_max) +
                                    " cannot support period " + std::to_string(p) +
                                    " at degree " + std::to_string(degree) +
                                    " (need " + std::to_string(p * (degree + 2)) + ")");
    QuasiPoly qp;
    qp.period = p;
    qp.degree = degree;
    qp.constituents.resize(p);
    // Leading coefficient of a genuine count fit must be 1/(degree/2)!.
    Rat expected_lead = 0;
    if (degree % 2 == 0) {
        Int f = 1;
        for (int i = 2; i <= degree / 2; ++i) f *= i;
        expected_lead = Rat(1, f);
    }
    for (int r = 0; r < p; ++r) {
        std::vector<Int> xs;
        std::vector<Rat> ys;
        int first = (r == 0) ? p : r;
        for (int n = first; n <= n_max && static_cast<int>(xs.size()) < degree + 1; n += p) {
            xs.push_back(n);
            ys.push_back(Rat(table.at(n)));
        }
        Polynomial c = interpolate(xs, ys);
        c.coeffs.resize(degree + 1, Rat(0));
        if (degree % 2 == 0 && c.coeffs[degree] != expected_lead) return std::nullopt;
        // Validate on every remaining same-class entry (at least one exists).
        for (Int n = xs.back() + p; n <= n_max; n += p)
            if (c.eval(n) != Rat(table.at(static_cast<int>(n)))) return std::nullopt;
        qp.constituents[r] = std::move(c);
    }
    return qp;
}

PeriodResult detect_period(const CountTable& table, int degree, int p_max) {
    if (p_max < 1) throw ValidationError("detect_period: p_max must be >= 1");
    for (int p = 1; p <= p_max; ++p) {
        // fit_quasipoly itself reports when the table can no longer support p.
        auto fit = fit_quasipoly(table, p, degree);
        if (fit) return PeriodResult{p, std::move(*fit)};
    }
    throw NoPeriodError("no period up to " + std::to_string(p_max) + " fits the table");
}

PeriodDenominatorProbe check_period_equals_denominator(const Piece& piece, int q, int n_max) {
    CountTable table = count_table(piece, q, n_max);
    int p_max = n_max / (2 * q + 2);
    PeriodResult pr = detect_period(table, 2 * q, p_max);
    DenominatorSpectrum ds = polytope_denominator(piece, q);
    PeriodDenominatorProbe probe;
    probe.period = pr.period;
    probe.denominator = ds.D;
    probe.equal = (Int(pr.period) == ds.D);
    return probe;
}

} // namespace riderlab

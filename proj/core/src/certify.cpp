#include "ramsey/certify.hpp"

namespace ramsey {

std::vector<int> term_residues(const Equation& eq, const Int& p, int modulus, int color) {
    if (modulus < 2)
        throw Error(ErrorKind::BadParameters, "modulus must be >= 2");
    if (!is_prime(p))
        throw Error(ErrorKind::NonPrimeModulus, int_str(p) + " is not prime");
    if (color < 0 || color >= modulus)
        throw Error(ErrorKind::BadParameters, "color out of range");
    std::vector<int> out;
    out.reserve(eq.terms().size());
    for (const auto& m : eq.terms()) {
        long v = padic_val(p, m.coeff).value(); // coeff nonzero by normalization
        long res = v + static_cast<long>(color) * static_cast<long>(m.degree());
        res %= modulus;
        if (res < 0)
            res += modulus;
        out.push_back(static_cast<int>(res));
    }
    return out;
}

ObstructionReport obstruction_certificate(const Equation& eq, const Int& p, int modulus) {
    if (eq.terms().empty())
        throw Error(ErrorKind::BadParameters, "equation is identically zero");
    for (const auto& m : eq.terms())
        if (m.exps.empty())
            throw Error(ErrorKind::ConstantTerm,
                        "constant monomial " + m.coeff.str() + " has a fixed valuation");

    ObstructionReport report{eq, p, modulus};
    report.obstructed = true;
    for (int color = 0; color < modulus; ++color) {
        std::vector<int> residues = term_residues(eq, p, modulus, color);
        report.residue_table.push_back(residues);
        if (!report.obstructed)
            continue;
        for (std::size_t a = 0; a < residues.size() && report.obstructed; ++a) {
            for (std::size_t b = a + 1; b < residues.size(); ++b) {
                if (residues[a] == residues[b]) {
                    report.obstructed = false;
                    report.collision_color = color;
                    report.collision_term_a = static_cast<int>(a);
                    report.collision_term_b = static_cast<int>(b);
                    break;
                }
            }
        }
    }
    return report;
}

} // namespace ramsey

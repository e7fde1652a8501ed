#include "ramsey/coloring.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace ramsey {

Coloring Coloring::padic(const Int& p, int modulus, long n) {
    if (modulus < 2)
        throw Error(ErrorKind::BadParameters, "modulus must be >= 2");
    if (n < 1)
        throw Error(ErrorKind::BadParameters, "domain size must be >= 1");
    if (!is_prime(p))
        throw Error(ErrorKind::NonPrimeModulus, int_str(p) + " is not prime");
    Coloring c;
    c.n_ = n;
    c.r_ = modulus;
    c.padic_ = PadicRule{p, modulus};
    return c;
}

Coloring Coloring::table(std::vector<int> colors, int r) {
    if (r < 1)
        throw Error(ErrorKind::BadParameters, "need at least one color");
    if (colors.empty())
        throw Error(ErrorKind::BadParameters, "empty color table");
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] < 0 || colors[i] >= r)
            throw Error(ErrorKind::BadParameters,
                        "color " + std::to_string(colors[i]) + " out of range at index " + std::to_string(i + 1));
    Coloring c;
    c.n_ = static_cast<long>(colors.size());
    c.r_ = r;
    c.table_ = std::move(colors);
    return c;
}

int Coloring::color(const Int& x) const {
    if (x < 1 || x > n_)
        throw Error(ErrorKind::OutOfDomain, int_str(x) + " outside [1, " + std::to_string(n_) + "]");
    if (padic_) {
        Int res = val_residue(padic_->p, Int(padic_->modulus), x);
        return static_cast<int>(res.get_si());
    }
    return table_[static_cast<std::size_t>(x.get_si()) - 1];
}

int Coloring::color(long x) const { return color(Int(x)); }

std::vector<long> Coloring::color_class(int c) const {
    std::vector<long> out;
    for (long x = 1; x <= n_; ++x)
        if (color(x) == c)
            out.push_back(x);
    return out;
}

bool operator==(const Coloring& a, const Coloring& b) {
    if (a.n_ != b.n_ || a.r_ != b.r_)
        return false;
    for (long x = 1; x <= a.n_; ++x)
        if (a.color(x) != b.color(x))
            return false;
    return true;
}

void save_coloring(const Coloring& coloring, std::ostream& out) {
    out << coloring.domain_size() << " " << coloring.colors() << "\n";
    for (long x = 1; x <= coloring.domain_size(); ++x)
        out << x << " " << coloring.color(x) << "\n";
}

namespace {

// Next content line, stripped of comments; false at EOF.
bool next_line(std::istream& in, std::string& line, long& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)))
                blank = false;
        if (!blank)
            return true;
    }
    return false;
}

[[noreturn]] void format_error(long line_no, const std::string& what) {
    throw Error(ErrorKind::FormatError, what + " (line " + std::to_string(line_no) + ")");
}

} // namespace

Coloring load_coloring(std::istream& in) {
    std::string line;
    long line_no = 0;
    if (!next_line(in, line, line_no))
        format_error(line_no, "missing header");
    long n = 0;
    int r = 0;
    {
        std::istringstream s(line);
        std::string extra;
        if (!(s >> n >> r) || (s >> extra))
            format_error(line_no, "header must be 'N r'");
    }
    if (n < 1 || r < 1)
        format_error(line_no, "need N >= 1 and r >= 1");
    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    for (long expect = 1; expect <= n; ++expect) {
        if (!next_line(in, line, line_no))
            format_error(line_no, "missing entry for " + std::to_string(expect));
        std::istringstream s(line);
        long i = 0;
        int c = 0;
        std::string extra;
        if (!(s >> i >> c) || (s >> extra))
            format_error(line_no, "entry must be 'i c'");
        if (i != expect)
            format_error(line_no, "expected index " + std::to_string(expect) + ", got " + std::to_string(i));
        if (c < 0 || c >= r)
            format_error(line_no, "color " + std::to_string(c) + " out of range [0, " + std::to_string(r) + ")");
        colors[static_cast<std::size_t>(i) - 1] = c;
    }
    if (next_line(in, line, line_no))
        format_error(line_no, "trailing content after " + std::to_string(n) + " entries");
    return Coloring::table(std::move(colors), r);
}

PigeonholePair pigeonhole_pair(const Coloring& coloring, const Int& a, int k, const Int& M) {
    if (a < 2)
        throw Error(ErrorKind::PreconditionViolated, "need a >= 2");
    if (k < coloring.colors())
        throw Error(ErrorKind::PreconditionViolated, "need k >= number of colors");
    Int ak = int_pow(a, static_cast<unsigned long>(k));
    if (!mpz_divisible_p(M.get_mpz_t(), ak.get_mpz_t()))
        throw Error(ErrorKind::PreconditionViolated, "a^k must divide M");

    std::vector<Int> chain;
    Int v = M;
    for (int i = 0; i <= k; ++i) {
        if (v < 1 || v > coloring.domain_size())
            throw Error(ErrorKind::PreconditionViolated,
                        "chain element " + int_str(v) + " outside the coloring domain");
        chain.push_back(v);
        v /= a;
    }
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            if (coloring.color(chain[static_cast<std::size_t>(i)]) ==
                coloring.color(chain[static_cast<std::size_t>(j)]))
                return PigeonholePair{chain[static_cast<std::size_t>(i)], j - i};
    // k >= r makes a repeat unavoidable
    throw Error(ErrorKind::PreconditionViolated, "no repeated color in the chain");
}

} // namespace ramsey

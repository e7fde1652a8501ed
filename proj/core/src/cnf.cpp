#include "ramsey/cnf.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace ramsey {

int CnfInstance::var_of(long value, int color) const {
    if (value < 1 || value > n || color < 0 || color >= colors)
        throw Error(ErrorKind::BadParameters, "no variable for (" + std::to_string(value) + ", " +
                                                  std::to_string(color) + ")");
    if (colors == 2)
        return static_cast<int>(value); // true = color 1
    return static_cast<int>((value - 1) * colors + color + 1);
}

std::pair<long, int> CnfInstance::value_color_of(int var) const {
    if (var < 1 || var > num_vars)
        throw Error(ErrorKind::BadParameters, "variable out of range");
    if (colors == 2)
        return {var, 1};
    return {(var - 1) / colors + 1, (var - 1) % colors};
}

CnfInstance export_cnf(const Target& target, int colors, long n, const EnumerationPolicy& policy) {
    if (colors < 2)
        throw Error(ErrorKind::BadParameters, "CNF export needs >= 2 colors");
    CnfInstance out;
    out.n = n;
    out.colors = colors;
    out.num_vars = colors == 2 ? static_cast<int>(n) : static_cast<int>(n * colors);

    if (colors > 2) {
        for (long i = 1; i <= n; ++i) {
            std::vector<int> alo;
            for (int c = 0; c < colors; ++c)
                alo.push_back(out.var_of(i, c));
            out.clauses.push_back(alo);
            for (int c = 0; c < colors; ++c)
                for (int d = c + 1; d < colors; ++d)
                    out.clauses.push_back({-out.var_of(i, c), -out.var_of(i, d)});
        }
    }

    for (const Instance& inst : enumerate_instances(target, n, policy)) {
        if (colors == 2) {
            std::vector<int> pos, neg;
            for (long v : inst.values) {
                pos.push_back(out.var_of(v, 0));
                neg.push_back(-out.var_of(v, 0));
            }
            out.clauses.push_back(pos); // not all color 0
            out.clauses.push_back(neg); // not all color 1
        } else {
            for (int c = 0; c < colors; ++c) {
                std::vector<int> blocking;
                for (long v : inst.values)
                    blocking.push_back(-out.var_of(v, c));
                out.clauses.push_back(blocking);
            }
        }
    }
    return out;
}

void write_dimacs(const CnfInstance& cnf, std::ostream& out, const std::string& comment) {
    if (!comment.empty()) {
        std::istringstream lines(comment);
        std::string line;
        while (std::getline(lines, line))
            out << "c " << line << "\n";
    }
    out << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
    for (const auto& clause : cnf.clauses) {
        for (int lit : clause)
            out << lit << " ";
        out << "0\n";
    }
}

Cnf parse_dimacs(std::istream& in) {
    Cnf out;
    std::string line;
    long clause_count = -1;
    long line_no = 0;
    std::vector<int> current;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c')
            continue;
        if (line[0] == 'p') {
            std::istringstream s(line);
            std::string p, fmt;
            if (!(s >> p >> fmt >> out.num_vars >> clause_count) || fmt != "cnf")
                throw Error(ErrorKind::FormatError,
                            "bad problem line (line " + std::to_string(line_no) + ")");
            continue;
        }
        if (clause_count < 0)
            throw Error(ErrorKind::FormatError,
                        "clause before problem line (line " + std::to_string(line_no) + ")");
        std::istringstream s(line);
        int lit;
        while (s >> lit) {
            if (lit == 0) {
                out.clauses.push_back(current);
                current.clear();
            } else {
                if (std::abs(lit) > out.num_vars)
                    throw Error(ErrorKind::FormatError,
                                "literal out of range (line " + std::to_string(line_no) + ")");
                current.push_back(lit);
            }
        }
    }
    if (!current.empty())
        throw Error(ErrorKind::FormatError, "unterminated clause at end of file");
    if (clause_count >= 0 && static_cast<long>(out.clauses.size()) != clause_count)
        throw Error(ErrorKind::FormatError,
                    "expected " + std::to_string(clause_count) + " clauses, found " +
                        std::to_string(out.clauses.size()));
    return out;
}

std::vector<std::int8_t> parse_model(std::istream& in, int num_vars) {
    std::vector<std::int8_t> model(static_cast<std::size_t>(num_vars) + 1, 0);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream s(line);
        if (line[0] == 'v') {
            char v;
            s >> v;
        } else if (!std::isdigit(static_cast<unsigned char>(line[0])) && line[0] != '-') {
            continue; // status or comment line
        }
        int lit;
        while (s >> lit) {
            if (lit == 0)
                continue;
            int var = std::abs(lit);
            if (var > num_vars)
                throw Error(ErrorKind::FormatError, "model literal " + std::to_string(lit) +
                                                        " out of range");
            model[static_cast<std::size_t>(var)] = lit > 0 ? 1 : 0;
        }
    }
    return model;
}

Coloring decode_coloring(const CnfInstance& cnf, const std::vector<std::int8_t>& model) {
    if (model.size() != static_cast<std::size_t>(cnf.num_vars) + 1)
        throw Error(ErrorKind::BadParameters, "model size does not match the instance");
    for (const auto& clause : cnf.clauses) {
        bool satisfied = false;
        for (int lit : clause) {
            std::int8_t v = model[static_cast<std::size_t>(std::abs(lit))];
            if ((lit > 0 && v == 1) || (lit < 0 && v == 0)) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied)
            throw Error(ErrorKind::NotSatisfying, "model does not satisfy the clause set");
    }
    std::vector<int> colors(static_cast<std::size_t>(cnf.n), 0);
    if (cnf.colors == 2) {
        for (long i = 1; i <= cnf.n; ++i)
            colors[static_cast<std::size_t>(i) - 1] = model[static_cast<std::size_t>(i)] == 1 ? 1 : 0;
    } else {
        for (long i = 1; i <= cnf.n; ++i) {
            int chosen = -1;
            for (int c = 0; c < cnf.colors; ++c) {
                if (model[static_cast<std::size_t>(cnf.var_of(i, c))] == 1) {
                    if (chosen != -1)
                        throw Error(ErrorKind::IncoherentOneHot,
                                    "two colors set for " + std::to_string(i));
                    chosen = c;
                }
            }
            if (chosen == -1)
                throw Error(ErrorKind::IncoherentOneHot, "no color set for " + std::to_string(i));
            colors[static_cast<std::size_t>(i) - 1] = chosen;
        }
    }
    return Coloring::table(std::move(colors), cnf.colors);
}

} // namespace ramsey

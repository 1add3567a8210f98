#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "code.hpp"
#include "enumerators.hpp"

// File formats: the code definition file, enumerator CSV tables, and small
// helpers shared by the command-line tool.
//
// Code definition file (line oriented, '#' comments):
//   n 7
//   k 1
//   r 0
//   H            <- m rows over {0,1,w,W} or {I,X,Z,Y}
//   ...
//   A            <- m rows of r bits (omitted when r = 0)
//   ...
// or, for a binary CSS half:
//   n 23
//   k 1
//   r 9
//   css
//   hprime       <- (n-k)/2 + r binary rows
//   ...

namespace qds {

struct CodeSpec {
    int n = 0;
    int k = 0;
    int r = 0;
    bool css = false;
    std::vector<std::string> h_rows;       // stabilizer rows (non-CSS)
    std::vector<std::string> a_rows;       // SM matrix rows, r bits each
    std::vector<std::string> hprime_rows;  // binary rows (CSS)

    /// Builds the DS code (non-CSS specs only).
    DSCode to_ds_code() const {
        if (css) throw std::invalid_argument("CodeSpec: CSS spec has no GF(4) check matrix");
        int m = n - k;
        if (static_cast<int>(h_rows.size()) != m)
            throw std::invalid_argument("CodeSpec: expected " + std::to_string(m) + " H rows");
        std::vector<PauliVector> rows;
        for (const auto& s : h_rows) {
            PauliVector v = parse_f4_vector(s);
            if (v.n != n) throw std::invalid_argument("CodeSpec: H row length != n");
            rows.push_back(v);
        }
        StabilizerCheckMatrix H(n, std::move(rows));
        if (r == 0) return DSCode(std::move(H), SMCode::empty(m));
        if (static_cast<int>(a_rows.size()) != m)
            throw std::invalid_argument("CodeSpec: expected " + std::to_string(m) + " A rows");
        std::vector<std::uint64_t> a;
        for (const auto& s : a_rows) {
            BitVec b = parse_bit_vector(s);
            if (b.len != r) throw std::invalid_argument("CodeSpec: A row length != r");
            a.push_back(b.bits);
        }
        return DSCode(std::move(H), SMCode(m, r, std::move(a)));
    }

    /// The binary block of a CSS spec.
    std::vector<std::uint64_t> to_hprime() const {
        if (!css) throw std::invalid_argument("CodeSpec: not a CSS spec");
        std::vector<std::uint64_t> rows;
        for (const auto& s : hprime_rows) {
            BitVec b = parse_bit_vector(s);
            if (b.len != n) throw std::invalid_argument("CodeSpec: hprime row length != n");
            rows.push_back(b.bits);
        }
        return rows;
    }
};

inline CodeSpec parse_code_spec(std::istream& in) {
    CodeSpec spec;
    std::string line;
    enum { none, in_h, in_a, in_hprime } section = none;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "n" || tok == "k" || tok == "r") {
            int v;
            if (!(ls >> v)) throw std::invalid_argument("code spec: missing value for '" + tok + "'");
            (tok == "n" ? spec.n : tok == "k" ? spec.k : spec.r) = v;
            section = none;
        } else if (tok == "css") {
            spec.css = true;
            section = none;
        } else if (tok == "H") {
            section = in_h;
        } else if (tok == "A") {
            section = in_a;
        } else if (tok == "hprime") {
            section = in_hprime;
        } else if (section == in_h) {
            spec.h_rows.push_back(tok);
        } else if (section == in_a) {
            spec.a_rows.push_back(tok);
        } else if (section == in_hprime) {
            spec.hprime_rows.push_back(tok);
        } else {
            throw std::invalid_argument("code spec: unexpected token '" + tok + "'");
        }
    }
    if (spec.n < 1) throw std::invalid_argument("code spec: missing or bad n");
    return spec;
}

inline CodeSpec load_code_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code spec: " + path);
    return parse_code_spec(in);
}

inline void write_code_spec(std::ostream& out, const CodeSpec& spec) {
    out << "n " << spec.n << "\n" << "k " << spec.k << "\n" << "r " << spec.r << "\n";
    if (spec.css) {
        out << "css\nhprime\n";
        for (const auto& s : spec.hprime_rows) out << s << "\n";
        return;
    }
    out << "H\n";
    for (const auto& s : spec.h_rows) out << s << "\n";
    if (spec.r > 0) {
        out << "A\n";
        for (const auto& s : spec.a_rows) out << s << "\n";
    }
}

inline CodeSpec spec_from_code(const DSCode& code) {
    CodeSpec spec;
    spec.n = code.n();
    spec.k = code.k();
    spec.r = code.r();
    for (int i = 0; i < code.m(); ++i) spec.h_rows.push_back(code.H().row(i).str());
    for (int i = 0; i < code.m(); ++i) {
        std::string row;
        for (int j = 0; j < code.r(); ++j) row += code.A().at(i, j) ? '1' : '0';
        spec.a_rows.push_back(row);
    }
    if (spec.r == 0) spec.a_rows.clear();
    return spec;
}

/// Enumerator CSV: a two-line header (field names, values) followed by one
/// line per nonzero cell.
inline void write_enumerator_csv(std::ostream& out, const SplitWeightEnumerator& B) {
    out << "n,m,r,side\n"
        << B.n << ',' << B.m << ',' << B.r << ',' << (B.side == Side::dual ? "dual" : "code") << "\n"
        << "i,j,count\n";
    for (int i = 0; i <= B.n; ++i)
        for (int j = 0; j <= B.m + B.r; ++j)
            if (B.at(i, j) != 0) out << i << ',' << j << ',' << B.at(i, j).get_str() << "\n";
}

inline SplitWeightEnumerator read_enumerator_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "n,m,r,side")
        throw std::invalid_argument("enumerator csv: bad header");
    if (!std::getline(in, line)) throw std::invalid_argument("enumerator csv: missing values");
    std::istringstream vs(line);
    std::string tok;
    int fields[3];
    for (int f = 0; f < 3; ++f) {
        if (!std::getline(vs, tok, ',')) throw std::invalid_argument("enumerator csv: bad values");
        fields[f] = std::stoi(tok);
    }
    if (!std::getline(vs, tok)) throw std::invalid_argument("enumerator csv: missing side");
    SplitWeightEnumerator B(fields[0], fields[1], fields[2], tok == "dual" ? Side::dual : Side::code);
    if (!std::getline(in, line) || line != "i,j,count")
        throw std::invalid_argument("enumerator csv: bad column header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string si, sj, sc;
        if (!std::getline(ls, si, ',') || !std::getline(ls, sj, ',') || !std::getline(ls, sc))
            throw std::invalid_argument("enumerator csv: bad row");
        B.at(std::stoi(si), std::stoi(sj)) = mpz_class(sc);
    }
    return B;
}

}  // namespace qds

#include "ses/io.hpp"

#include <cctype>
#include <fstream>

namespace ses {

using nlohmann::json;

json pencil_to_json(const AltPencil& P) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["p"] = P.F.p();
    j["k"] = P.F.k();
    if (P.F.k() > 1) j["modulus"] = P.F.modulus();
    j["dimV"] = P.dimV;
    j["dimW"] = P.dimW;
    json mats = json::array();
    for (const auto& m : P.mats) {
        json rows = json::array();
        for (std::size_t i = 0; i < m.rows; ++i) {
            json row = json::array();
            for (std::size_t j2 = 0; j2 < m.cols; ++j2) row.push_back(m.at(i, j2).v);
            rows.push_back(std::move(row));
        }
        mats.push_back(std::move(rows));
    }
    j["mats"] = std::move(mats);
    return j;
}

AltPencil pencil_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("mats"))
        throw InvalidInput("pencil: missing fields");
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    unsigned k = j.value("k", 1u);
    FieldSpec F = k == 1 ? FieldSpec::prime(p)
                  : j.contains("modulus")
                      ? FieldSpec::ext(p, j.at("modulus").get<std::vector<std::uint64_t>>())
                      : FieldSpec::make(p, k);
    std::size_t dimV = j.at("dimV").get<std::size_t>();
    std::size_t dimW = j.at("dimW").get<std::size_t>();
    const json& mats = j.at("mats");
    if (mats.size() != dimW) throw InvalidInput("pencil: dimW mismatch");
    std::vector<Mat> ms;
    for (const auto& grid : mats) {
        if (grid.size() != dimV) throw InvalidInput("pencil: dimV mismatch");
        Mat m(dimV, dimV);
        for (std::size_t i = 0; i < dimV; ++i) {
            if (grid[i].size() != dimV) throw InvalidInput("pencil: ragged matrix");
            for (std::size_t c = 0; c < dimV; ++c) {
                std::uint64_t v = grid[i][c].get<std::uint64_t>();
                if (v >= F.q()) throw InvalidInput("pencil: entry out of range");
                m.at(i, c) = Scalar{v};
            }
        }
        ms.push_back(std::move(m));
    }
    return make_pencil(std::move(F), std::move(ms));
}

AltPencil load_pencil(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open pencil file: " + path);
    json j;
    in >> j;
    return pencil_from_json(j);
}

void save_pencil(const AltPencil& P, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write pencil file: " + path);
    out << pencil_to_json(P).dump(2) << "\n";
}

UniPoly parse_poly(const std::string& text, const FieldSpec& F, bool strict) {
    std::vector<Scalar> coeffs;
    auto bump = [&](std::size_t deg, std::int64_t c) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Scalar{0});
        coeffs[deg] = F.add(coeffs[deg], F.from_int(c));
    };
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    skip();
    if (i == text.size()) throw InvalidInput("empty polynomial");
    bool first = true;
    while (true) {
        skip();
        if (i == text.size()) break;
        std::int64_t sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw InvalidInput("expected + or - in polynomial");
        }
        first = false;
        skip();
        std::int64_t coef = 1;
        bool have_coef = false;
        if (i < text.size() && std::isdigit((unsigned char)text[i])) {
            coef = 0;
            while (i < text.size() && std::isdigit((unsigned char)text[i])) {
                coef = coef * 10 + (text[i] - '0');
                if (coef > (1ll << 40)) throw InvalidInput("coefficient too large");
                ++i;
            }
            have_coef = true;
        }
        skip();
        std::size_t deg = 0;
        if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
            ++i;
            skip();
            deg = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                if (i == text.size() || !std::isdigit((unsigned char)text[i]))
                    throw InvalidInput("missing exponent");
                deg = 0;
                while (i < text.size() && std::isdigit((unsigned char)text[i])) {
                    deg = deg * 10 + (text[i] - '0');
                    if (deg > 64) throw InvalidInput("exponent too large");
                    ++i;
                }
            }
        } else if (!have_coef) {
            throw InvalidInput("expected term in polynomial");
        }
        if (strict && static_cast<std::uint64_t>(coef) >= F.p())
            throw InvalidInput("coefficient out of range in strict mode");
        bump(deg, sign * coef);
    }
    return UniPoly(std::move(coeffs));
}

std::string poly_to_string(const UniPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int d = f.degree(); d >= 0; --d) {
        Scalar c = f.coeff(static_cast<std::size_t>(d));
        if (c.v == 0) continue;
        if (!s.empty()) s += " + ";
        if (d == 0 || c.v != 1) s += std::to_string(c.v);
        if (d >= 1) {
            s += "x";
            if (d > 1) s += "^" + std::to_string(d);
        }
    }
    return s;
}

std::string form_to_string(const HomForm& f) {
    if (f.is_zero()) return "0";
    static const char* names[] = {"X", "Y", "Z"};
    std::string s;
    for (const auto& [e, c] : f.terms) {
        if (!s.empty()) s += " + ";
        bool any = false;
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            any = true;
            mono += v < 3 ? names[v] : "X" + std::to_string(v + 1);
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        if (c.v != 1 || !any) s += std::to_string(c.v);
        s += mono;
    }
    return s;
}

}  // namespace ses

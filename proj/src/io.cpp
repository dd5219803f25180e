#include "ormod/io.hpp"

#include <algorithm>
#include <sstream>

namespace ormod {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    if (!current.empty()) lines.push_back(current);
    return lines;
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

bool blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

QMatrix parse_matrix(std::string_view text) {
    std::vector<std::vector<Rat>> rows;
    for (const std::string& line : split_lines(text)) {
        if (blank(line)) continue;
        std::vector<Rat> row;
        for (const std::string& tok : split_tokens(line)) row.push_back(Rat::parse(tok));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(Errc::SyntaxError, "empty matrix");
    const std::size_t n = rows.size();
    QMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            fail(Errc::SyntaxError, "row " + std::to_string(i + 1) + " has " +
                                        std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::string format_matrix(const QMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.n(); ++i) {
        for (std::size_t j = 0; j < m.n(); ++j) {
            if (j) out += " ";
            out += m.at(i, j).str();
        }
        out += "\n";
    }
    return out;
}

std::vector<QMatrix> parse_group_file(std::string_view text) {
    std::vector<QMatrix> generators;
    std::string chunk;
    auto flush = [&]() {
        if (!blank(chunk)) generators.push_back(parse_matrix(chunk));
        chunk.clear();
    };
    for (const std::string& line : split_lines(text)) {
        if (blank(line)) {
            flush();
        } else {
            chunk += line + "\n";
        }
    }
    flush();
    if (generators.empty()) fail(Errc::SyntaxError, "no generator matrices in group file");
    return generators;
}

std::string format_group_file(const std::vector<QMatrix>& generators) {
    std::string out;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out += "\n";
        out += format_matrix(generators[i]);
    }
    return out;
}

std::string format_family(const RealizableFamily& family) {
    std::string out = "vars:";
    for (const std::string& name : family.forms.space()->names()) out += " " + name;
    out += "\n";
    for (const Poly& q : family.forms.forms()) out += format_poly(q) + "\n";
    out += "s: " + std::to_string(family.s) + "  d: " + std::to_string(family.d) + "\n";
    return out;
}

RealizableFamily parse_family(std::string_view text) {
    std::vector<std::string> lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && blank(lines[i])) ++i;
    if (i == lines.size() || lines[i].rfind("vars:", 0) != 0)
        fail(Errc::SyntaxError, "family file must start with a 'vars:' line");
    std::vector<std::string> names = split_tokens(lines[i].substr(5));
    if (names.empty()) fail(Errc::SyntaxError, "empty variable list");
    VarSpacePtr vs = VarSpace::weight_one(std::move(names));
    ++i;

    std::vector<Poly> forms;
    std::optional<std::int64_t> s_line;
    std::optional<std::int64_t> d_line;
    for (; i < lines.size(); ++i) {
        if (blank(lines[i])) continue;
        std::string line = strip(lines[i]);
        if (line.rfind("s:", 0) == 0) {
            std::vector<std::string> toks = split_tokens(line);
            // "s: <int>  d: <int>"
            if (toks.size() != 4 || toks[0] != "s:" || toks[2] != "d:")
                fail(Errc::SyntaxError, "malformed trailer line '" + line + "'");
            s_line = std::stoll(toks[1]);
            d_line = std::stoll(toks[3]);
            continue;
        }
        forms.push_back(parse_poly(line, vs));
    }
    if (forms.size() < 2) fail(Errc::SyntaxError, "family file needs at least two forms");

    RealizableFamily family{FormFamily(vs, std::move(forms)), 0, 0, std::nullopt};
    // The forms are authoritative; the trailer only fills in what cannot be
    // recomputed (a family that fails the checks keeps its declared values).
    family.d = d_line ? *d_line : weighted_degree(family.forms[0]);
    if (s_line) family.s = *s_line;
    FamilyCheck chk = check_realizable(family.forms);
    if (chk.ok) {
        family.s = chk.s;
        family.d = chk.d;
        family.lambdas = chk.lambdas;
    } else if (!s_line) {
        std::int64_t top = weighted_degree(family.forms[family.forms.size() - 1]);
        if (family.d > 0 && top % family.d == 0) family.s = top / family.d;
    }
    return family;
}

std::string format_gca(const GcaElement& e) {
    if (e.is_zero()) return "0";
    const GcaBasis& basis = *e.basis();
    std::string out;
    bool first = true;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        const GcaMonomial& m = it->first;
        bool has_factors = m.word_length() > 0;
        out += detail::format_coeff_prefix(it->second, has_factors, first);
        bool first_factor = true;
        // Odd letters first, then the even monomial, both in index order.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (m.exps[i] == 0) continue;
                if (basis.gen(i).odd() != (pass == 0)) continue;
                if (!first_factor) out += "*";
                out += basis.gen(i).name;
                if (m.exps[i] != 1) out += "^" + std::to_string(m.exps[i]);
                first_factor = false;
            }
        }
        first = false;
    }
    return out;
}

GcaElement parse_gca(std::string_view text, const GcaBasisPtr& basis) {
    GcaElement result(basis);
    for (const auto& term : detail::parse_sum(text)) {
        GcaElement factor = GcaElement::constant(basis, term.coeff);
        for (const auto& [name, exp] : term.powers) {
            auto idx = basis->find(name);
            if (!idx) fail(Errc::UnknownVariable, "unknown generator '" + name + "'");
            for (std::int64_t k = 0; k < exp && !factor.is_zero(); ++k)
                factor = factor * GcaElement::generator(basis, *idx);
        }
        result += factor;
    }
    return result;
}

std::string format_model(const Cdga& model, const ModelSpec& spec) {
    const GcaBasis& basis = *model.basis();
    std::string out = "generators:\n";
    for (const Generator& g : basis.gens())
        out += g.name + " " + std::to_string(g.degree) + "\n";
    for (std::size_t i = 0; i < basis.size(); ++i)
        out += "d(" + basis.gen(i).name + ") = " + format_gca(model.d(i)) + "\n";
    out += "family:\n";
    out += format_family(spec.family);
    out += "k: " + std::to_string(spec.k) + "\n";
    return out;
}

ParsedModel parse_model(std::string_view text) {
    std::vector<std::string> lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && blank(lines[i])) ++i;
    if (i == lines.size() || strip(lines[i]) != "generators:")
        fail(Errc::SyntaxError, "model file must start with 'generators:'");
    ++i;

    std::vector<Generator> gens;
    for (; i < lines.size(); ++i) {
        if (blank(lines[i])) continue;
        std::string line = strip(lines[i]);
        if (line.rfind("d(", 0) == 0) break;
        std::vector<std::string> toks = split_tokens(line);
        if (toks.size() != 2) fail(Errc::SyntaxError, "malformed generator line '" + line + "'");
        gens.push_back(Generator{toks[0], std::stoll(toks[1])});
    }
    auto basis = std::make_shared<const GcaBasis>(std::move(gens));

    std::vector<GcaElement> diff(basis->size(), GcaElement::zero(basis));
    std::vector<bool> seen(basis->size(), false);
    for (; i < lines.size(); ++i) {
        if (blank(lines[i])) continue;
        std::string line = strip(lines[i]);
        if (line == "family:") break;
        if (line.rfind("d(", 0) != 0) fail(Errc::SyntaxError, "expected a 'd(...)' line");
        std::size_t close = line.find(')');
        std::size_t eq = line.find('=', close);
        if (close == std::string::npos || eq == std::string::npos)
            fail(Errc::SyntaxError, "malformed differential line '" + line + "'");
        std::string name = strip(line.substr(2, close - 2));
        auto idx = basis->find(name);
        if (!idx) fail(Errc::UnknownVariable, "unknown generator '" + name + "'");
        std::string rhs = strip(line.substr(eq + 1));
        if (rhs != "0") diff[*idx] = parse_gca(rhs, basis);
        seen[*idx] = true;
    }
    for (std::size_t g = 0; g < basis->size(); ++g) {
        if (!seen[g])
            fail(Errc::SyntaxError, "missing differential for generator '" + basis->gen(g).name + "'");
    }

    if (i == lines.size() || strip(lines[i]) != "family:")
        fail(Errc::SyntaxError, "model file must carry a 'family:' section");
    ++i;
    std::string family_text;
    std::optional<std::int64_t> k;
    for (; i < lines.size(); ++i) {
        std::string line = strip(lines[i]);
        if (line.rfind("k:", 0) == 0) {
            k = std::stoll(strip(line.substr(2)));
            continue;
        }
        family_text += lines[i] + "\n";
    }
    if (!k) fail(Errc::SyntaxError, "model file must carry a 'k:' line");

    ParsedModel out{std::make_shared<const Cdga>(basis, std::move(diff)),
                    ModelSpec{parse_family(family_text), *k}};
    return out;
}

DgaMorphism parse_morphism(std::string_view text, const CdgaPtr& model) {
    const GcaBasisPtr& basis = model->basis();
    std::vector<GcaElement> images;
    images.reserve(basis->size());
    for (std::size_t i = 0; i < basis->size(); ++i)
        images.push_back(GcaElement::generator(basis, i));
    for (const std::string& raw : split_lines(text)) {
        if (blank(raw)) continue;
        std::string line = strip(raw);
        if (line.rfind("f(", 0) != 0) fail(Errc::SyntaxError, "expected a 'f(...)' line");
        std::size_t close = line.find(')');
        std::size_t eq = line.find('=', close);
        if (close == std::string::npos || eq == std::string::npos)
            fail(Errc::SyntaxError, "malformed assignment line '" + line + "'");
        std::string name = strip(line.substr(2, close - 2));
        auto idx = basis->find(name);
        if (!idx) fail(Errc::UnknownVariable, "unknown generator '" + name + "'");
        std::string rhs = strip(line.substr(eq + 1));
        images[*idx] = rhs == "0" ? GcaElement::zero(basis) : parse_gca(rhs, basis);
    }
    return DgaMorphism(model, model, std::move(images));
}

std::string format_morphism(const DgaMorphism& f) {
    const GcaBasis& basis = *f.source()->basis();
    std::string out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        out += "f(" + basis.gen(i).name + ") = " + format_gca(f.image(i)) + "\n";
    return out;
}

std::string classification_report(const ClassificationResult& result) {
    std::string out;
    for (const StepResult& s : result.steps) {
        out += "step " + s.name + ": " + (s.pass ? "pass" : "fail") +
               " residue=" + std::to_string(s.residue);
        if (!s.detail.empty()) out += " (" + s.detail + ")";
        out += "\n";
    }
    if (result.ok()) {
        out += "group element:\n" + format_matrix(*result.group_element);
        out += "witness: " + format_gca(*result.witness) + "\n";
    } else if (const StepResult* failed = result.failed_step()) {
        out += "rejected at step: " + failed->name + "\n";
    }
    return out;
}

}  // namespace ormod

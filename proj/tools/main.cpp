#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ormod/io.hpp"

namespace {

using namespace ormod;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_artifact(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fail(Errc::InvalidArgument, "cannot write '" + out_path + "'");
    out << text;
}

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::SyntaxError:
        case Errc::UnknownVariable:
        case Errc::InvalidArgument:
        case Errc::VarSpaceMismatch:
        case Errc::DimensionMismatch:
        case Errc::NotInvertible:
        case Errc::BadS:
        case Errc::DegreeTooSmall:
            return 2;
        case Errc::OrderBoundExceeded:
            return 3;
        case Errc::DegreeBoundViolated:
        case Errc::NotRealizable:
            return 4;
        default:
            return 1;
    }
}

std::string family_report(const OrthogonalPresentation& pres) {
    std::ostringstream out;
    out << "group order: " << pres.group_order << "\n";
    out << "invariants: " << pres.invariant_count << "\n";
    out << "degrees:";
    for (const Poly& q : pres.family.forms.forms()) out << " " << weighted_degree(q);
    out << "\n";
    out << "s: " << pres.family.s << "\n";
    out << "d: " << pres.family.d << "\n";
    if (pres.family.lambdas) {
        out << "lambda:";
        for (const Rat& l : *pres.family.lambdas) out << " " << l.str();
        out << "\n";
    }
    out << "basis change:\n" << format_matrix(pres.basis_change);
    return out.str();
}

int cmd_family(const std::string& group_path, std::size_t max_order,
               std::optional<std::int64_t> s, const std::string& out_path) {
    FiniteMatrixGroup group = group_closure(parse_group_file(read_file(group_path)), max_order);
    OrthogonalPresentation pres = orthogonal_presentation(group, s);
    std::cerr << family_report(pres);
    write_artifact(format_family(pres.family), out_path);
    return 0;
}

int cmd_model(const std::string& family_path, std::int64_t k, const std::string& out_path) {
    ModelSpec spec{parse_family(read_file(family_path)), k};
    CdgaPtr model = build_model(spec);
    DiffCheck dsq = check_d_squared(*model);
    if (!dsq.ok) {
        std::cerr << "d^2 != 0 on generator " << dsq.generator << "\n";
        return 5;
    }
    std::cerr << "generators: " << model->basis()->size() << "\n";
    std::cerr << "z degree: " << spec.z_degree() << "\n";
    write_artifact(format_model(*model, spec), out_path);
    return 0;
}

int cmd_verify(const std::string& model_path) {
    ParsedModel parsed = parse_model(read_file(model_path));
    bool ok = true;

    DiffCheck dsq = check_d_squared(*parsed.model);
    std::cout << "check d^2 = 0: " << (dsq.ok ? "pass" : "fail") << "\n";
    if (!dsq.ok) {
        std::cout << "  residue on " << dsq.generator << ": " << format_gca(*dsq.residue) << "\n";
        ok = false;
    }

    bool minimal = is_minimal(*parsed.model);
    std::cout << "check minimal: " << (minimal ? "pass" : "fail") << "\n";
    ok = ok && minimal;

    DiffCheck audit = check_degree_audit(*parsed.model);
    std::cout << "check degree audit: " << (audit.ok ? "pass" : "fail") << "\n";
    if (!audit.ok) {
        std::cout << "  differential of " << audit.generator << " misses degree +1\n";
        ok = false;
    }
    return ok ? 0 : 5;
}

int cmd_classify(const std::string& model_path, const std::string& morphism_path) {
    ParsedModel parsed = parse_model(read_file(model_path));
    DgaMorphism f = parse_morphism(read_file(morphism_path), parsed.model);
    ClassificationResult result = classify(f, parsed.spec);
    std::cout << classification_report(result);
    return result.ok() ? 0 : 5;
}

int cmd_examples(const std::string& name, int n, std::optional<std::int64_t> s,
                 const std::string& out_path) {
    if (name == "sigma_n") {
        RealizableFamily family = symmetric_family(n, s);
        std::cerr << "symmetric family on " << n << " variables, s = " << family.s << "\n";
        write_artifact(format_family(family), out_path);
        return 0;
    }
    if (name == "g2") {
        G2Family g2 = g2_family();
        std::cerr << "7-variable family, s = " << g2.family.s << ", d = " << g2.family.d << "\n";
        std::cerr << "note: the quadratic's leading term is the homogeneous -2*v1^2\n";
        write_artifact(format_family(g2.family), out_path);
        return 0;
    }
    fail(Errc::InvalidArgument, "unknown example '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"realizable form families, their minimal models, and automorphism classification"};
    app.require_subcommand(1);

    std::string group_path, family_path, model_path, morphism_path, example_name, out_path;
    std::size_t max_order = 10000;
    std::int64_t k = 0;
    std::int64_t s_value = 0;
    int n = 0;
    bool s_given = false;

    CLI::App* family = app.add_subcommand("family", "orthogonal presentation of a finite matrix group");
    family->add_option("group", group_path, "generator file")->required();
    family->add_option("--max-order", max_order, "closure bound");
    family->add_option("--s", s_value, "tail exponent override")->each([&](const std::string&) { s_given = true; });
    family->add_option("--out", out_path, "family file destination (default stdout)");

    CLI::App* model = app.add_subcommand("model", "minimal model of a realizable family");
    model->add_option("family", family_path, "family file")->required();
    model->add_option("--k", k, "degree parameter")->required();
    model->add_option("--out", out_path, "model file destination (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "check a model file");
    verify->add_option("model", model_path, "model file")->required();

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify a candidate automorphism");
    classify_cmd->add_option("model", model_path, "model file")->required();
    classify_cmd->add_option("morphism", morphism_path, "morphism file")->required();

    CLI::App* examples = app.add_subcommand("examples", "built-in families");
    examples->add_option("name", example_name, "sigma_n or g2")->required();
    examples->add_option("--n", n, "variable count for sigma_n");
    examples->add_option("--s", s_value, "tail exponent override")->each([&](const std::string&) { s_given = true; });
    examples->add_option("--out", out_path, "family file destination (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::optional<std::int64_t> s;
    if (s_given) s = s_value;

    try {
        if (family->parsed()) return cmd_family(group_path, max_order, s, out_path);
        if (model->parsed()) return cmd_model(family_path, k, out_path);
        if (verify->parsed()) return cmd_verify(model_path);
        if (classify_cmd->parsed()) return cmd_classify(model_path, morphism_path);
        if (examples->parsed()) return cmd_examples(example_name, n, s, out_path);
    } catch (const ormod::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

#include "ormod/model.hpp"

#include <algorithm>
#include <utility>

namespace ormod {

namespace {

GcaElement word(const GcaBasisPtr& basis,
                std::initializer_list<std::pair<std::size_t, std::int32_t>> powers,
                Rat coeff = Rat(1)) {
    GcaMonomial m(basis->size());
    for (const auto& [idx, exp] : powers) m.exps[idx] += exp;
    GcaElement e(basis);
    e.add_term(std::move(m), std::move(coeff));
    return e;
}

}  // namespace

void ModelSpec::validate() const {
    FamilyCheck chk = check_realizable(family.forms);
    if (!chk.ok)
        fail(Errc::NotRealizable, "family violates condition " + std::to_string(chk.violated) +
                                      " at index " + std::to_string(chk.index) + ": " + chk.detail);
    if (k < 1) fail(Errc::DegreeBoundViolated, "k must be a positive integer");

    const std::size_t last = family.forms.size() - 1;
    std::int64_t top_degree = weighted_degree(family.forms[last]);
    if (!(top_degree < 2 * k + d() - 1)) {
        std::string offenders;
        for (std::size_t i = 0; i <= last; ++i) {
            if (x1_exponent(weighted_degree(family.forms[i])) <= 0) {
                if (!offenders.empty()) offenders += ", ";
                offenders += "q_" + std::to_string(i);
            }
        }
        fail(Errc::DegreeBoundViolated,
             "deg(q_" + std::to_string(last) + ") = " + std::to_string(top_degree) +
                 " is not below 2k + d - 1 = " + std::to_string(2 * k + d() - 1) +
                 " (offending forms: " + offenders + ")");
    }
    if (10 * k + 5 * (d() - 4) < 0)
        fail(Errc::DegreeBoundViolated, "10k + 5(d-4) is negative");
    if (8 * k - 4 < 0) fail(Errc::DegreeBoundViolated, "8k - 4 is negative");
}

ModelLayout model_layout(const ModelSpec& spec) {
    ModelLayout layout;
    layout.n = static_cast<std::size_t>(spec.n());
    return layout;
}

VarSpacePtr model_subring_space(std::int64_t n) {
    std::vector<std::string> names = {"x1", "x2"};
    std::vector<std::int64_t> weights = {8, 10};
    for (std::int64_t j = 1; j <= n; ++j) {
        names.push_back("v" + std::to_string(j));
        weights.push_back(40);
    }
    return std::make_shared<const VarSpace>(std::move(names), std::move(weights));
}

GcaElement embed_subring(const CdgaPtr& model, const ModelLayout& layout, const Poly& p) {
    const std::size_t nvars = p.space()->size();
    if (nvars != layout.n + 2) fail(Errc::VarSpaceMismatch, "subring variable count mismatch");
    GcaElement e(model->basis());
    for (const auto& [m, c] : p.terms()) {
        GcaMonomial g(model->basis()->size());
        g.exps[layout.x1] = m.exps[0];
        g.exps[layout.x2] = m.exps[1];
        for (std::size_t j = 0; j < layout.n; ++j) g.exps[layout.v(j)] = m.exps[2 + j];
        e.add_term(std::move(g), c);
    }
    return e;
}

Poly extract_subring(const CdgaPtr& model, const ModelLayout& layout, const GcaElement& e) {
    if (!same_basis(e.basis(), model->basis()))
        fail(Errc::AlgebraMismatch, "element from a different algebra");
    Poly p(model_subring_space(static_cast<std::int64_t>(layout.n)));
    for (const auto& [m, c] : e.terms()) {
        Monomial mono(layout.n + 2);
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (i == layout.x1) {
                mono.exps[0] = m.exps[i];
            } else if (i == layout.x2) {
                mono.exps[1] = m.exps[i];
            } else if (i >= layout.v0 && i < layout.v0 + layout.n) {
                mono.exps[2 + (i - layout.v0)] = m.exps[i];
            } else {
                fail(Errc::WrongShape, "element has a factor outside the polynomial subring");
            }
        }
        p.add_term(std::move(mono), c);
    }
    return p;
}

namespace {

/// Family form (weight-one variables, positionally v_1..v_n) as an element.
GcaElement embed_form(const GcaBasisPtr& basis, const ModelLayout& layout, const Poly& form) {
    GcaElement e(basis);
    for (const auto& [m, c] : form.terms()) {
        GcaMonomial g(basis->size());
        for (std::size_t j = 0; j < layout.n; ++j) g.exps[layout.v(j)] = m.exps[j];
        e.add_term(std::move(g), c);
    }
    return e;
}

}  // namespace

CdgaPtr build_model(const ModelSpec& spec) {
    spec.validate();
    ModelLayout layout = model_layout(spec);
    const std::int64_t k = spec.k;
    const std::int64_t d = spec.d();

    std::vector<Generator> gens;
    gens.push_back({"x1", 8});
    gens.push_back({"x2", 10});
    gens.push_back({"y1", 33});
    gens.push_back({"y2", 35});
    gens.push_back({"y3", 37});
    for (std::size_t j = 1; j <= layout.n; ++j) gens.push_back({"v" + std::to_string(j), 40});
    gens.push_back({"z", spec.z_degree()});
    auto basis = std::make_shared<const GcaBasis>(std::move(gens));

    std::vector<GcaElement> diff(basis->size(), GcaElement::zero(basis));
    diff[layout.y1] = word(basis, {{layout.x1, 3}, {layout.x2, 1}});
    diff[layout.y2] = word(basis, {{layout.x1, 2}, {layout.x2, 2}});
    diff[layout.y3] = word(basis, {{layout.x1, 1}, {layout.x2, 3}});

    const auto& forms = spec.family.forms;
    GcaElement dz(basis);
    for (std::size_t i = 1; i < forms.size(); ++i) {
        std::int64_t e = spec.x1_exponent(weighted_degree(forms[i]));
        dz += embed_form(basis, layout, forms[i]) *
              word(basis, {{layout.x1, static_cast<std::int32_t>(e)}});
    }
    GcaElement q0 = embed_form(basis, layout, forms[0]);
    dz += q0 * word(basis, {{layout.x1, static_cast<std::int32_t>(10 * k - 5)}});
    dz += q0 * word(basis, {{layout.x2, static_cast<std::int32_t>(8 * k - 4)}});

    GcaElement pair_block =
        word(basis, {{layout.y1, 1}, {layout.y2, 1}, {layout.x1, 4}, {layout.x2, 2}}) -
        word(basis, {{layout.y1, 1}, {layout.y3, 1}, {layout.x1, 5}, {layout.x2, 1}}) +
        word(basis, {{layout.y2, 1}, {layout.y3, 1}, {layout.x1, 6}});
    dz += word(basis, {{layout.x1, static_cast<std::int32_t>(10 * k + 5 * (d - 4))}}) * pair_block;

    dz += word(basis, {{layout.x1, static_cast<std::int32_t>(10 * k + 5 * (d - 1))}});
    dz += word(basis, {{layout.x2, static_cast<std::int32_t>(8 * k + 4 * (d - 1))}});

    // Degree audit: every summand of d(z) must land in degree |z| + 1.
    for (const auto& [m, c] : dz.terms()) {
        (void)c;
        if (m.degree(*basis) != spec.z_degree() + 1)
            fail(Errc::WrongDegree, "internal: d(z) summand of degree " +
                                        std::to_string(m.degree(*basis)) + ", expected " +
                                        std::to_string(spec.z_degree() + 1));
    }
    diff[layout.z()] = std::move(dz);

    return std::make_shared<const Cdga>(std::move(basis), std::move(diff));
}

DgaMorphism lift_group_element(const QMatrix& g, const CdgaPtr& model, const ModelSpec& spec) {
    ModelLayout layout = model_layout(spec);
    if (g.n() != layout.n) fail(Errc::DimensionMismatch, "matrix size does not match the family");
    if (!is_orthogonal(g, spec.family.forms))
        fail(Errc::NotOrthogonal, "matrix does not fix the family");

    QMatrix a = g.transpose().inverse();
    std::vector<GcaElement> images;
    images.reserve(model->basis()->size());
    for (std::size_t i = 0; i < model->basis()->size(); ++i)
        images.push_back(GcaElement::generator(model->basis(), i));
    for (std::size_t j = 0; j < layout.n; ++j) {
        GcaElement img(model->basis());
        for (std::size_t i = 0; i < layout.n; ++i) {
            if (a.at(i, j).is_zero()) continue;
            GcaMonomial m(model->basis()->size());
            m.exps[layout.v(i)] = 1;
            img.add_term(std::move(m), a.at(i, j));
        }
        images[layout.v(j)] = std::move(img);
    }
    return DgaMorphism(model, model, std::move(images));
}

namespace {

struct SlotProfile {
    std::int64_t degree_drop;  // |y_slot|
    std::int32_t x1_power;
    std::int32_t x2_power;
};

SlotProfile slot_profile(int slot) {
    switch (slot) {
        case 1: return {33, 2, 3};
        case 2: return {35, 3, 2};
        case 3: return {37, 4, 1};
        default: fail(Errc::InvalidArgument, "slot must be 1, 2 or 3");
    }
}

}  // namespace

GcaElement slot_cofactor(int slot, const GcaElement& a, const ModelSpec& spec,
                         const CdgaPtr& model) {
    SlotProfile profile = slot_profile(slot);
    ModelLayout layout = model_layout(spec);
    if (a.is_zero()) return GcaElement::zero(model->basis());

    Poly p = extract_subring(model, layout, a);
    std::int64_t want = spec.z_degree() - profile.degree_drop;
    auto deg = try_weighted_degree(p);
    if (!deg || *deg != want)
        fail(Errc::WrongDegree, "slot " + std::to_string(slot) + " element must be homogeneous of degree " +
                                    std::to_string(want));

    Poly cofactor(p.space());
    for (const auto& [m, c] : p.terms()) {
        if (m.exps[0] < profile.x1_power || m.exps[1] < profile.x2_power)
            fail(Errc::DivisibilityFailure,
                 "monomial lacks the forced x1^" + std::to_string(profile.x1_power) + " x2^" +
                     std::to_string(profile.x2_power) + " factor");
        Monomial stripped = m;
        stripped.exps[0] -= profile.x1_power;
        stripped.exps[1] -= profile.x2_power;
        cofactor.add_term(std::move(stripped), c);
    }
    return embed_subring(model, layout, cofactor);
}

GcaElement homotopy_witness(const GcaElement& omega, const ModelSpec& spec, const CdgaPtr& model) {
    ModelLayout layout = model_layout(spec);
    if (!same_basis(omega.basis(), model->basis()))
        fail(Errc::AlgebraMismatch, "element from a different algebra");
    if (omega.is_zero()) return GcaElement::zero(model->basis());

    // Split omega = y1 A1 + y2 A2 + y3 A3.
    std::vector<GcaElement> slots(3, GcaElement::zero(model->basis()));
    for (const auto& [m, c] : omega.terms()) {
        if (m.exps[layout.z()] != 0)
            fail(Errc::WrongShape, "term contains the top generator");
        int hits = 0;
        std::size_t which = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            if (m.exps[layout.y(i)] != 0) {
                ++hits;
                which = i;
            }
        }
        if (hits != 1) fail(Errc::WrongShape, "term is not of the form y_i * (subring element)");
        GcaMonomial even = m;
        even.exps[layout.y(which)] = 0;
        slots[which].add_term(std::move(even), c);
    }

    auto zdeg = omega.homogeneous_degree();
    if (!zdeg || *zdeg != spec.z_degree())
        fail(Errc::WrongShape, "element is not homogeneous of the top degree");

    GcaElement domega = apply_differential(*model, omega);
    if (!domega.is_zero())
        fail(Errc::NotClosed, "differential of the element is nonzero (" +
                                  std::to_string(domega.num_terms()) + " residue terms)");

    GcaElement b2 = slot_cofactor(2, slots[1], spec, model);
    GcaElement b3 = slot_cofactor(3, slots[2], spec, model);

    GcaElement m = word(model->basis(), {{layout.y1, 1}, {layout.y2, 1}, {layout.x2, 1}}) * b2 +
                   word(model->basis(), {{layout.y1, 1}, {layout.y3, 1}, {layout.x1, 1}}) * b3;

    if (apply_differential(*model, m) != omega)
        fail(Errc::NotClosed, "internal: witness differential mismatch");
    return m;
}

std::vector<ScalarSolution> scalar_constraints(std::int64_t k, std::int64_t d) {
    if (k < 1 || d < 2) fail(Errc::InvalidArgument, "need k >= 1 and d >= 2");
    // After substituting the y scales, the five z-coefficient equations
    // collapse to c = a1^alpha a2^5 = a1^beta = a2^gamma.
    const std::int64_t alpha = 10 * k + 5 * d - 11;
    const std::int64_t beta = 10 * k + 5 * d - 5;
    const std::int64_t gamma = 8 * k + 4 * d - 4;
    const std::int64_t unit_exponent = 5 * beta - 6 * gamma;  // = 2k + d - 1

    std::vector<Rat> candidates = {Rat(1)};
    if (unit_exponent % 2 == 0) candidates.push_back(Rat(-1));

    std::vector<ScalarSolution> solutions;
    for (const Rat& a1 : candidates) {
        // a2^5 = a1^6 = 1 has the single rational root a2 = 1.
        Rat a2(1);
        Rat c = a1.pow(beta);
        if (c != a2.pow(gamma)) continue;
        if (c != a1.pow(alpha) * a2.pow(5)) continue;
        ScalarSolution sol;
        sol.x1_scale = a1;
        sol.x2_scale = a2;
        sol.y1_scale = a1.pow(3) * a2;
        sol.y2_scale = a1.pow(2) * a2.pow(2);
        sol.y3_scale = a1 * a2.pow(3);
        sol.z_scale = c;
        solutions.push_back(std::move(sol));
    }
    return solutions;
}

namespace {

struct Shape {
    ScalarSolution scalars;
    QMatrix linear_part;
    std::vector<Rat> x1_corrections;
    std::vector<Rat> x2_corrections;
    std::vector<GcaElement> slots;  // coefficients of y1, y2, y3 in f(z)
    GcaElement triple;              // coefficient of y1 y2 y3 in f(z)
    std::size_t residue = 0;
    std::string detail;

    Shape(std::size_t n, const GcaBasisPtr& basis)
        : linear_part(n),
          x1_corrections(n, Rat(0)),
          x2_corrections(n, Rat(0)),
          slots(3, GcaElement::zero(basis)),
          triple(basis) {}

    void flag(const std::string& what) {
        ++residue;
        if (detail.empty()) detail = what;
    }
};

bool is_single_power(const GcaMonomial& m, std::size_t idx, std::int32_t exp) {
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (i == idx ? m.exps[i] != exp : m.exps[i] != 0) return false;
    }
    return true;
}

Shape extract_shape(const DgaMorphism& f, const ModelSpec& spec, const ModelLayout& layout) {
    const GcaBasisPtr& basis = f.target()->basis();
    Shape shape(layout.n, basis);

    // Degree preservation on every generator.
    for (std::size_t i = 0; i < basis->size(); ++i) {
        const GcaElement& img = f.image(i);
        if (img.is_zero()) continue;
        auto deg = img.homogeneous_degree();
        if (!deg || *deg != basis->gen(i).degree)
            shape.flag("image of " + basis->gen(i).name + " is not homogeneous of its degree");
    }

    auto single_scale = [&](std::size_t gen, Rat& out) {
        for (const auto& [m, c] : f.image(gen).terms()) {
            if (is_single_power(m, gen, 1))
                out = c;
            else
                shape.flag("unexpected term in the image of " + basis->gen(gen).name);
        }
        if (out.is_zero()) shape.flag("image of " + basis->gen(gen).name + " has no invertible scale");
    };

    single_scale(layout.x1, shape.scalars.x1_scale);
    single_scale(layout.x2, shape.scalars.x2_scale);
    single_scale(layout.y1, shape.scalars.y1_scale);
    single_scale(layout.y2, shape.scalars.y2_scale);
    single_scale(layout.y3, shape.scalars.y3_scale);

    for (std::size_t j = 0; j < layout.n; ++j) {
        for (const auto& [m, c] : f.image(layout.v(j)).terms()) {
            bool matched = false;
            for (std::size_t i = 0; i < layout.n && !matched; ++i) {
                if (is_single_power(m, layout.v(i), 1)) {
                    shape.linear_part.at(i, j) = c;
                    matched = true;
                }
            }
            if (!matched && is_single_power(m, layout.x1, 5)) {
                shape.x1_corrections[j] = c;
                matched = true;
            }
            if (!matched && is_single_power(m, layout.x2, 4)) {
                shape.x2_corrections[j] = c;
                matched = true;
            }
            if (!matched) shape.flag("unexpected term in the image of v" + std::to_string(j + 1));
        }
    }
    if (shape.linear_part.det().is_zero()) shape.flag("degree-40 linear part is singular");

    for (const auto& [m, c] : f.image(layout.z()).terms()) {
        if (m.exps[layout.z()] != 0) {
            if (is_single_power(m, layout.z(), 1))
                shape.scalars.z_scale = c;
            else
                shape.flag("top generator appears with extra factors");
            continue;
        }
        int ys = 0;
        for (std::size_t i = 0; i < 3; ++i) ys += m.exps[layout.y(i)] != 0 ? 1 : 0;
        GcaMonomial even = m;
        even.exps[layout.y1] = 0;
        even.exps[layout.y2] = 0;
        even.exps[layout.y3] = 0;
        if (ys == 1) {
            for (std::size_t i = 0; i < 3; ++i)
                if (m.exps[layout.y(i)] != 0) shape.slots[i].add_term(even, c);
        } else if (ys == 3) {
            shape.triple.add_term(even, c);
        } else {
            shape.flag("unexpected term in the image of z");
        }
    }
    if (shape.scalars.z_scale.is_zero()) shape.flag("image of z has no invertible scale");

    (void)spec;
    return shape;
}

}  // namespace

ClassificationResult classify(const DgaMorphism& f, const ModelSpec& spec) {
    if (!same_basis(f.source()->basis(), f.target()->basis()))
        fail(Errc::AlgebraMismatch, "classification expects an endomorphism");
    ModelLayout layout = model_layout(spec);
    const GcaBasisPtr& basis = f.source()->basis();
    if (basis->size() != layout.z() + 1 ||
        basis->gen(layout.z()).degree != spec.z_degree())
        fail(Errc::InvalidArgument, "morphism does not live on a model of this family");

    ClassificationResult result;
    auto step = [&](const std::string& name, bool pass, std::size_t residue,
                    const std::string& detail) {
        result.steps.push_back(StepResult{name, pass, residue, detail});
        return pass;
    };

    // Shape of every image is forced by degrees.
    Shape shape = extract_shape(f, spec, layout);
    result.scalars = shape.scalars;
    result.linear_part = shape.linear_part;
    result.x1_corrections = shape.x1_corrections;
    result.x2_corrections = shape.x2_corrections;
    if (!step("shape", shape.residue == 0, shape.residue, shape.detail)) return result;

    // The y scales are monomials in the x scales.
    {
        const ScalarSolution& s = shape.scalars;
        std::size_t bad = 0;
        if (s.y1_scale != s.x1_scale.pow(3) * s.x2_scale) ++bad;
        if (s.y2_scale != s.x1_scale.pow(2) * s.x2_scale.pow(2)) ++bad;
        if (s.y3_scale != s.x1_scale * s.x2_scale.pow(3)) ++bad;
        if (!step("y-scalars", bad == 0, bad, bad ? "y scale incompatible with the x scales" : ""))
            return result;
    }

    // No chain map carries a y1 y2 y3 component.
    if (!step("y1y2y3-term", shape.triple.is_zero(), shape.triple.num_terms(),
              shape.triple.is_zero() ? "" : "triple-odd component of f(z) is nonzero"))
        return result;

    // Degree-40 corrections must vanish.
    {
        std::size_t bad = 0;
        for (const Rat& c : shape.x2_corrections)
            if (!c.is_zero()) ++bad;
        if (!step("x2-correction", bad == 0, bad, bad ? "x2^4 correction in a degree-40 image" : ""))
            return result;
    }
    {
        std::size_t bad = 0;
        for (const Rat& c : shape.x1_corrections)
            if (!c.is_zero()) ++bad;
        if (!step("x1-correction", bad == 0, bad, bad ? "x1^5 correction in a degree-40 image" : ""))
            return result;
    }

    // The scale tuple must solve the z-coefficient system; over the
    // rationals that forces the identity scales.
    {
        std::vector<ScalarSolution> sols = scalar_constraints(spec.k, spec.d());
        bool member = false;
        for (const ScalarSolution& sol : sols) member = member || sol == shape.scalars;
        bool pass = member && shape.scalars.all_ones();
        std::size_t bad = 0;
        if (!pass) {
            const ScalarSolution& s = shape.scalars;
            const std::int64_t k = spec.k, d = spec.d();
            Rat c = s.z_scale;
            if (c != s.x1_scale.pow(10 * k + 5 * (d - 4) + 4) * s.x2_scale.pow(2) * s.y1_scale *
                         s.y2_scale)
                ++bad;
            if (c != s.x1_scale.pow(10 * k + 5 * (d - 4) + 5) * s.x2_scale * s.y1_scale * s.y3_scale)
                ++bad;
            if (c != s.x1_scale.pow(10 * k + 5 * (d - 4) + 6) * s.y2_scale * s.y3_scale) ++bad;
            if (c != s.x1_scale.pow(10 * k + 5 * (d - 1))) ++bad;
            if (c != s.x2_scale.pow(8 * k + 4 * (d - 1))) ++bad;
        }
        if (!step("scalar-system", pass, bad, pass ? "" : "scales do not normalize to the identity"))
            return result;
    }

    // The transposed linear part must fix every form.
    QMatrix at = shape.linear_part.transpose();
    {
        std::size_t bad = 0;
        for (const Poly& q : spec.family.forms.forms()) {
            if (substitute_linear(q, at) != q) ++bad;
        }
        if (!step("orthogonality", bad == 0, bad,
                  bad ? "transposed linear part moves a family form" : ""))
            return result;
    }

    // The z discrepancy must be exact, with an explicit witness.
    GcaElement omega = f.image(layout.z()) - GcaElement::generator(basis, layout.z());
    GcaElement witness(basis);
    {
        bool pass = true;
        std::size_t residue = 0;
        std::string detail;
        try {
            witness = homotopy_witness(omega, spec, f.source());
        } catch (const Error& e) {
            pass = false;
            detail = e.what();
            GcaElement domega = apply_differential(*f.source(), omega);
            residue = domega.is_zero() ? omega.num_terms() : domega.num_terms();
        }
        if (!step("witness", pass, residue, detail)) return result;
    }

    // Full verification across all generators.
    {
        DiffCheck cc = is_chain_map(f);
        std::size_t residue = cc.residue ? cc.residue->num_terms() : 0;
        if (!step("chain-map", cc.ok, residue,
                  cc.ok ? "" : "residue on generator " + cc.generator))
            return result;
    }

    result.group_element = at.inverse();
    result.witness = std::move(witness);
    return result;
}

std::vector<CdgaPtr> build_models(const RealizableFamily& family,
                                  const std::vector<std::int64_t>& ks) {
    std::vector<CdgaPtr> models;
    models.reserve(ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i) {
        try {
            models.push_back(build_model(ModelSpec{family, ks[i]}));
        } catch (const Error& e) {
            throw Error(e.code(), "k list entry " + std::to_string(i) + " (k = " +
                                      std::to_string(ks[i]) + "): " + e.what());
        }
    }
    return models;
}

}  // namespace ormod

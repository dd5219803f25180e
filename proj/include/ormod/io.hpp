#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ormod/model.hpp"

namespace ormod {

/// One row per line, exact rationals separated by spaces.
QMatrix parse_matrix(std::string_view text);
std::string format_matrix(const QMatrix& m);

/// Blank-line-separated matrices (the generators of a group).
std::vector<QMatrix> parse_group_file(std::string_view text);
std::string format_group_file(const std::vector<QMatrix>& generators);

/// Header `vars: ...`, one polynomial per line, trailer `s: <int>  d: <int>`.
std::string format_family(const RealizableFamily& family);
RealizableFamily parse_family(std::string_view text);

/// Extended polynomial grammar over generator names (odd generators appear
/// as '*'-separated factors).
std::string format_gca(const GcaElement& e);
GcaElement parse_gca(std::string_view text, const GcaBasisPtr& basis);

/// Header `generators:` with `name degree` lines, then `d(name) = ...`
/// lines, then the family inline (`family:` section) and `k: <int>` so the
/// artifact is self-contained.
std::string format_model(const Cdga& model, const ModelSpec& spec);

struct ParsedModel {
    CdgaPtr model;
    ModelSpec spec;
};

ParsedModel parse_model(std::string_view text);

/// Lines `f(name) = <element>`; generators not mentioned map to themselves.
DgaMorphism parse_morphism(std::string_view text, const CdgaPtr& model);
std::string format_morphism(const DgaMorphism& f);

/// One line per proof step (pass/fail + residue count), then the group
/// element or the violated step.
std::string classification_report(const ClassificationResult& result);

}  // namespace ormod

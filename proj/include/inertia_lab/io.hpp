#pragma once

#include "inertia_lab/chain.hpp"
#include "inertia_lab/fin_group.hpp"
#include "inertia_lab/group_cohomology.hpp"
#include "inertia_lab/simplicial.hpp"
#include "inertia_lab/transgression.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace inertia_lab {

// Malformed input files and specs.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ade:A<n>, ade:D<n> (n >= 4), ade:E6|E7|E8, cyc:<n>, sym:<n>, dih:<n>, table:<file.json>.
FinGroup parse_group_spec(const std::string& spec);
AdeFamily parse_ade_family(const std::string& name, std::size_t& parameter);

// {"order", "identity", "mul": [[...]], "labels", "name"}
std::string group_to_json(const FinGroup& G);
FinGroup group_from_json(const std::string& text);

// {"dim_bound", "cells": [[ids of dim 0], ...], "faces": {"id": [{"base", "word"}, ...]}, "labels"}
std::string sset_to_json(const SSet& X);
SSet sset_from_json(const std::string& text);

// {"group", "degree", "coefficients": {"kind", "modulus"?}, "values": [[[tuple...], value], ...]}
// Values are integers, or "p/q" strings for QmodZ; only non-zero normalized tuples are listed.
std::string cocycle_to_json(const FinGroup& G, const std::string& group_spec, const Cochain& c);
Cochain cocycle_from_json(const FinGroup& G, const std::string& text);

// {"group", "degree", "coefficients", "values": [[loop, [edges...]], value], ...]}
std::string transgressed_to_json(const FinGroup& G, const std::string& group_spec, const TransgressedCochain& t);

std::string coefficients_to_json(const Coefficients& A);

// One "boundary_<n>.txt" per differential plus "manifest.json" with the ranks and file names.
void export_chain_complex(const ChainComplex& C, const std::filesystem::path& dir);
ChainComplex import_chain_complex(const std::filesystem::path& dir);

std::string read_file(const std::filesystem::path& path);

}  // namespace inertia_lab

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "reidemeister/core.hpp"
#include "reidemeister/decomposition.hpp"
#include "reidemeister/spectra.hpp"

namespace reidemeister::cli {

/// Process exit statuses. Stable; scripts depend on them.
enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kParseError = 2,
  kInvalidType = 3,
  kOutOfSpectrum = 4,
  kInvalidMatrix = 5,
  kUnwritable = 6,
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Rendering shared by the commands and the atlas writer.

/// `4 = 2^2`; just the decimal when it already is the factorization.
std::string render_value(const core::Factored& value);
nlohmann::json value_json(const core::Factored& value);
nlohmann::json group_json(const spectra::AbelianGroupType& group);
spectra::AbelianGroupType group_from_json(const nlohmann::json& j);
nlohmann::json blocks_json(const decomposition::BlockDecomposition& dec);
nlohmann::json spectrum_json(const spectra::AbelianGroupType& group, const spectra::Spectrum& spectrum);
/// prime → matrix text for each Sylow witness.
nlohmann::json witness_json(const std::map<std::uint64_t, endo::EndoMatrix>& parts);

// Atlas of spectra for every abelian group up to a given order.

/// Every abelian group of order 2..max_order, by order and then by type.
std::vector<spectra::AbelianGroupType> groups_up_to(std::uint64_t max_order);
nlohmann::json atlas_entry(const spectra::AbelianGroupType& group, bool with_witnesses);
/// Serialized atlas document (deterministic, newline-terminated).
std::string render_atlas(std::uint64_t max_order, bool with_witnesses);
/// Recomputes every entry of a parsed atlas and serializes the result the
/// same way render_atlas does.
std::string recompute_atlas(const nlohmann::json& atlas);

}  // namespace reidemeister::cli

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperpi/translate.hpp"
#include "hyperpi/transform.hpp"

namespace hyperpi {

struct Catalog {
    std::vector<RamanujanIdentity> identities;
    std::vector<AlgebraicTransformation> transformations;

    const RamanujanIdentity* find_identity(std::string_view name) const;
    const AlgebraicTransformation*
    find_transformation(std::string_view name) const;
};

/*
 * Catalog text format: '#' starts a comment, sections are
 *
 *   [identity NAME]
 *     upper, lower: comma-separated rationals
 *     a, b: rationals;  x0: rational or radical expression
 *     mu_q (rational), mu_d (integer), field (integer)
 *
 *   [transformation NAME]
 *     source_upper/source_lower, target_upper/target_lower, field
 *     curve_y, curve_r: monomial sums  c*x^i*w^j + ...
 *     seed_y, seed_r: branch coefficients from order 0
 *     param_x/param_y/param_r: ( c*p^i + ... ) / ( c*p^i + ... )
 *     p0: radical expression
 *
 * Malformed input raises ParseError carrying line and column. Duplicate
 * names, unknown keys, missing keys and parameter-count mismatches are all
 * parse errors.
 */
Catalog catalog_parse(std::string_view text);

// Canonical text form; catalog_parse returns an equal catalog on it.
std::string catalog_serialize(const Catalog& c);

/*
 * Consistency gate run on every catalog before use: each identity must
 * verify numerically at 20 digits and each transformation's series identity
 * must hold exactly through order 12. Throws VerificationError naming the
 * failing entry.
 */
void catalog_verify(const Catalog& c);

// Parse + verify a catalog file.
Catalog catalog_load_file(const std::string& path);

// The compiled-in entries (verified on first access).
const Catalog& builtin_catalog();
std::string_view builtin_catalog_text();

} // namespace hyperpi

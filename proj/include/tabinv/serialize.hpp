#pragma once

#include <nlohmann/json_fwd.hpp>

#include "tabinv/dyck.hpp"
#include "tabinv/enumerate.hpp"
#include "tabinv/filling.hpp"
#include "tabinv/qpoly.hpp"
#include "tabinv/tableau.hpp"

// JSON and text forms of the library's value types.  Arbitrary-precision
// counts are emitted as JSON numbers when they fit in 64 bits and as decimal
// strings otherwise.

namespace tabinv {

nlohmann::json to_json(const mpz_class& z);

nlohmann::json filling_to_json(const Filling& f);
Filling filling_from_json(const nlohmann::json& j);

nlohmann::json inversion_pair_to_json(const InversionPair& p, const Filling& f);
nlohmann::json qpoly_to_json(const QPolynomial& p);
nlohmann::json histogram_to_json(const InversionHistogram& h, const Shape& shape,
                                 const Content& content);
std::string histogram_to_csv(const InversionHistogram& h);

std::string path_to_text(const DyckPath& p);  // "1,1,2,2,1,2,1"
nlohmann::json return_table_to_json(const std::map<ReturnProfile, mpz_class>& table,
                                    const Shape& shape);

}  // namespace tabinv

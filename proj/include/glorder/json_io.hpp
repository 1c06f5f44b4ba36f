#ifndef GLORDER_JSON_IO_HPP
#define GLORDER_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "glorder/gltype.hpp"
#include "glorder/ordermodel.hpp"
#include "glorder/regrade.hpp"
#include "glorder/tilting.hpp"

namespace glorder {

// Type spec file: {"d": int, "weights": [int...], "hyperplanes": [[...]]}
// with matrix entries given as integers or "p/q" strings.
GLType type_from_json(const nlohmann::json& j);
GLType load_type(const std::string& path);

nlohmann::json to_json(const ValidationReport& r);
nlohmann::json interval_json(const std::vector<LElement>& elems);
nlohmann::json to_json(const CartanMatrix& m);
nlohmann::json to_json(const RigidityReport& r);
nlohmann::json to_json(const QuiverPresentation& q);
nlohmann::json to_json(const EndoAlgebra& e, bool with_products);
nlohmann::json to_json(const ColumnBundle& b);
nlohmann::json hilbert_table_json(const GLType& t, long long max_degree);
nlohmann::json regrade_sweep_json(const GLType& t, long long max_degree);
nlohmann::json local_types_json(const GLType& t);
nlohmann::json transport_json(const std::vector<long long>& word, const GLType& t);

// DOT rendering of the quiver, arrows labeled x<i>.
std::string to_dot(const QuiverPresentation& q);

} // namespace glorder

#endif

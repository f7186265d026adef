#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lambdakit/classifier.hpp"
#include "lambdakit/count.hpp"

namespace lambdakit {

// Canonical text renderings shared by the CLI and the Python module. JSON
// objects have sorted keys and no whitespace; counts are bare decimal
// numbers of any length; CSV uses LF line endings and no quoting. Every
// function returns whole lines, each terminated by LF.

std::string census_json(std::size_t n, const ClassCounts& counts);
std::string census_csv_header();
std::string census_csv_row(std::size_t n, const ClassCounts& counts);

std::string theorem4_json(const Theorem4Report& report);

using LambdaTable = std::vector<std::pair<std::size_t, Count>>;

std::string table_csv(std::size_t k, const LambdaTable& rows);
std::string table_json(std::size_t k, const LambdaTable& rows);
std::string table_plain(std::size_t k, const LambdaTable& rows);

}  // namespace lambdakit

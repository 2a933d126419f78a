#ifndef ANAFORO_TEXT_HPP_
#define ANAFORO_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace anaforo::text {

// Lowercases ASCII letters and the accented capitals used in Spanish
// (Á É Í Ó Ú Ü Ñ). Other bytes pass through untouched.
std::string fold_case(std::string_view s);

// Uppercases the first letter, with the same coverage as fold_case.
std::string capitalize(std::string_view s);

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
// Splits on runs of spaces and tabs.
std::vector<std::string_view> split_ws(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);

// Parses a non-negative decimal integer; returns -1 on failure.
int parse_index(std::string_view s);

// Formats 100 * num / den with one decimal ("81.4"); "NONE" when den == 0.
std::string percent(long num, long den);

}  // namespace anaforo::text

#endif  // ANAFORO_TEXT_HPP_

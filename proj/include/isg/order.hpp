#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace isg {

/// Group orders outgrow 64 bits from degree 21 on (|A_23| ~ 1.3e22).
using Order = boost::multiprecision::cpp_int;

inline std::string to_string(const Order& order) { return order.str(); }

/// Throws BudgetExceeded if the order does not fit the given cap.
std::uint64_t to_bounded(const Order& order, std::uint64_t cap,
                         const char* what);

Order factorial(std::size_t n);

}  // namespace isg

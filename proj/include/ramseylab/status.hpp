#pragma once

#include <string_view>

namespace ramseylab {

enum class SearchStatus { Found, NotFound, BudgetExceeded };

inline std::string_view to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "FOUND";
        case SearchStatus::NotFound: return "NOT FOUND";
        case SearchStatus::BudgetExceeded: return "BUDGET EXCEEDED";
    }
    return "?";
}

}  // namespace ramseylab

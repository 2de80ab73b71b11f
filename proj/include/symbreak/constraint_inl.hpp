#pragma once

// Template definitions for constraint.hpp.

namespace symbreak {

namespace detail {

template <typename F>
std::vector<View> map_all(const std::vector<View>& views, F& f)
{
    std::vector<View> out;
    out.reserve(views.size());
    for (const auto& v : views)
        out.push_back(f(v));
    return out;
}

} // namespace detail

template <typename F>
Constraint map_views(const Constraint& c, F&& f)
{
    return std::visit(
        [&](const auto& n) -> Constraint {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Linear>) {
                return Linear{detail::map_all(n.terms, f), n.coeffs, n.rhs, n.rel};
            } else if constexpr (std::is_same_v<T, Compare>) {
                return Compare{f(n.lhs), f(n.rhs), n.strict};
            } else if constexpr (std::is_same_v<T, MinBound>) {
                return MinBound{f(n.lhs), detail::map_all(n.others, f), n.strict};
            } else if constexpr (std::is_same_v<T, MaxBound>) {
                return MaxBound{f(n.lhs), detail::map_all(n.others, f), n.strict};
            } else if constexpr (std::is_same_v<T, AllDifferent>) {
                return AllDifferent{detail::map_all(n.views, f)};
            } else if constexpr (std::is_same_v<T, Lex>) {
                return Lex{detail::map_all(n.a, f), detail::map_all(n.b, f), n.strict};
            } else if constexpr (std::is_same_v<T, Occurrence>) {
                return Occurrence{detail::map_all(n.views, f), n.value, n.count};
            } else if constexpr (std::is_same_v<T, Hamming>) {
                return Hamming{detail::map_all(n.a, f), detail::map_all(n.b, f), n.distance};
            } else if constexpr (std::is_same_v<T, Precedence>) {
                return Precedence{detail::map_all(n.views, f), n.chain};
            } else if constexpr (std::is_same_v<T, AtMostNValues>) {
                return AtMostNValues{detail::map_all(n.views, f), n.bound};
            } else {
                return Implies{std::make_shared<const Constraint>(map_views(*n.guard, f)),
                               std::make_shared<const Constraint>(map_views(*n.body, f))};
            }
        },
        c.node());
}

template <typename F>
void for_each_view(const Constraint& c, F&& f)
{
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Linear>) {
                for (const auto& v : n.terms)
                    f(v);
            } else if constexpr (std::is_same_v<T, Compare>) {
                f(n.lhs);
                f(n.rhs);
            } else if constexpr (std::is_same_v<T, MinBound> || std::is_same_v<T, MaxBound>) {
                f(n.lhs);
                for (const auto& v : n.others)
                    f(v);
            } else if constexpr (std::is_same_v<T, Lex> || std::is_same_v<T, Hamming>) {
                for (const auto& v : n.a)
                    f(v);
                for (const auto& v : n.b)
                    f(v);
            } else if constexpr (std::is_same_v<T, Implies>) {
                for_each_view(*n.guard, f);
                for_each_view(*n.body, f);
            } else {
                for (const auto& v : n.views)
                    f(v);
            }
        },
        c.node());
}

} // namespace symbreak

#include "homcat/builtins.hpp"

#include <functional>

namespace homcat {

namespace {

std::vector<std::uint32_t> sc_table(int dim, const std::function<std::uint32_t(int, int, int)>& f) {
    std::vector<std::uint32_t> sc(static_cast<std::size_t>(dim) * dim * dim, 0);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) sc[(static_cast<std::size_t>(i) * dim + j) * dim + k] = f(i, j, k);
    return sc;
}

}  // namespace

AlgebraPtr dual_numbers(std::uint32_t p) {
    // basis (1, x), x^2 = 0
    auto f = [](int i, int j, int k) -> std::uint32_t {
        if (i == 0 && j == 0) return k == 0;
        if (i + j == 1) return k == 1;
        return 0;  // x*x = 0
    };
    return Algebra::create("dual_numbers", 2, {"1", "x"}, sc_table(2, f), {1, 0}, {{0, 1}}, {{1, 0}}, p);
}

AlgebraPtr semisimple_algebra(int n, std::uint32_t p) {
    auto f = [](int i, int j, int k) -> std::uint32_t { return i == j && j == k; };
    std::vector<std::string> labels;
    std::vector<std::uint32_t> unit(n, 1);
    std::vector<std::vector<std::uint32_t>> idem;
    for (int i = 0; i < n; ++i) {
        labels.push_back("e" + std::to_string(i));
        std::vector<std::uint32_t> e(n, 0);
        e[i] = 1;
        idem.push_back(e);
    }
    return Algebra::create("semisimple" + std::to_string(n), n, std::move(labels), sc_table(n, f),
                           std::move(unit), {}, std::move(idem), p);
}

AlgebraPtr string_algebra(std::uint32_t p) {
    // basis (1, x, y), x^2 = y^2 = xy = yx = 0
    auto f = [](int i, int j, int k) -> std::uint32_t {
        if (i == 0) return j == k;
        if (j == 0) return i == k;
        return 0;
    };
    return Algebra::create("string_algebra", 3, {"1", "x", "y"}, sc_table(3, f), {1, 0, 0},
                           {{0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}}, p);
}

AlgebraPtr builtin_algebra(const std::string& name, std::uint32_t p) {
    if (name == "dual_numbers") return dual_numbers(p);
    if (name == "string_algebra") return string_algebra(p);
    if (name == "field" || name == "semisimple1") return semisimple_algebra(1, p);
    if (name.rfind("semisimple", 0) == 0) {
        int n = std::stoi(name.substr(10));
        return semisimple_algebra(n, p);
    }
    throw ParseError("unknown builtin algebra '" + name + "'");
}

Module builtin_module(const AlgebraPtr& alg, const std::string& name) {
    if (name == "A") return regular_module(alg);
    if (name == "K") return trivial_module(alg);
    if (name == "0") return Module::zero(alg);
    if (name.rfind("S", 0) == 0 && name.size() > 1) {
        int i = std::stoi(name.substr(1));
        return simple_module(alg, i);
    }
    throw ParseError("unknown builtin module '" + name + "'");
}

namespace {

Matrix x_action(const AlgebraPtr& dual) {
    Matrix x(2, 1, dual->prime());
    x.set(1, 0, 1);
    return regular_module(dual).act(x);
}

}  // namespace

Complex complex_P(const AlgebraPtr& dual) {
    Module a = regular_module(dual);
    Matrix mx = x_action(dual);
    Tail left{1, {a}, {mx}, mx};
    return Complex(dual, 0, {a}, {}, left, std::nullopt);
}

Complex complex_I(const AlgebraPtr& dual) {
    Module a = regular_module(dual);
    Matrix mx = x_action(dual);
    Tail right{1, {a}, {mx}, mx};
    return Complex(dual, 0, {a}, {}, std::nullopt, right);
}

Complex complex_PI(const AlgebraPtr& dual) {
    Module a = regular_module(dual);
    Matrix mx = x_action(dual);
    Tail left{1, {a}, {mx}, mx};
    Tail right{1, {a}, {mx}, mx};
    return Complex(dual, 0, {a}, {}, left, right);
}

Complex builtin_complex(const AlgebraPtr& alg, const std::string& name) {
    if (name == "P") return complex_P(alg);
    if (name == "I") return complex_I(alg);
    if (name == "PI") return complex_PI(alg);
    if (name == "0") return Complex::zero(alg);
    throw ParseError("unknown builtin complex '" + name + "'");
}

}  // namespace homcat

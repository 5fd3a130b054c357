#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qcy/rational.hpp"

namespace qcy {

// Variable layout shared by a family of polynomials.  The first n_x slots are
// the skew block X_1..X_{n_x}, the next n_z slots are the symmetric block
// z_1..z_{n_z}, and any named auxiliaries (a current parameter, a clearing
// variable, ...) come after.
struct VarContext {
    int n_x = 0;
    int n_z = 0;
    std::vector<std::string> aux;

    int arity() const { return n_x + n_z + static_cast<int>(aux.size()); }
    int x_index(int p) const;  // p in 1..n_x
    int z_index(int j) const;  // j in 1..n_z
    int aux_index(const std::string& name) const;
    std::string var_name(int idx) const;
};

using Ctx = std::shared_ptr<const VarContext>;
Ctx make_ctx(int n_x, int n_z, std::vector<std::string> aux = {});

inline constexpr int kMaxVars = 16;

struct Mono {
    std::array<int16_t, kMaxVars> e{};
    int32_t total = 0;

    void bump(int var, int by) {
        e[static_cast<size_t>(var)] = static_cast<int16_t>(e[static_cast<size_t>(var)] + by);
        total += by;
    }
    bool divides(const Mono& m) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[static_cast<size_t>(i)] > m.e[static_cast<size_t>(i)]) return false;
        return true;
    }
};

// graded lexicographic order
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.total != b.total) return a.total < b.total;
        for (int i = 0; i < kMaxVars; ++i) {
            if (a.e[static_cast<size_t>(i)] != b.e[static_cast<size_t>(i)])
                return a.e[static_cast<size_t>(i)] < b.e[static_cast<size_t>(i)];
        }
        return false;
    }
};

class MPoly {
public:
    using Terms = std::map<Mono, GRat, MonoLess>;

    MPoly() = default;
    explicit MPoly(Ctx c) : ctx_(std::move(c)) {}

    static MPoly constant(Ctx c, GRat v);
    static MPoly var(Ctx c, int index, int power = 1);

    const Ctx& ctx() const { return ctx_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    void add_term(const Mono& m, const GRat& c);
    GRat coeff(const Mono& m) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const GRat& s);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
    friend MPoly operator*(MPoly a, const GRat& s) { return a *= s; }
    friend MPoly operator*(const GRat& s, MPoly a) { return a *= s; }
    friend MPoly operator-(MPoly a) { return a *= GRat(-1); }
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return (a - b).is_zero();
    }

    MPoly pow(int k) const;

    int deg(int var) const;    // -1 for the zero polynomial
    int total_deg() const;     // -1 for the zero polynomial

    // physics grading: deg z_j = +1, deg X_p = -1, auxiliaries count as 0
    bool qhomogeneous(int* deg_out = nullptr) const;

    MPoly coeff_of(int var, int k) const;
    MPoly subst_value(int var, const GRat& value) const;
    MPoly subst_poly(int var, const MPoly& repl) const;
    MPoly negate_var(int var) const;
    GRat eval(const std::vector<GRat>& point) const;

    // skew-symmetrization over the X block, sum over all permutations with sign
    MPoly skew_x() const;

    // relabel X_p -> X_{p+offset} (target context must be wide enough)
    MPoly shift_x(int offset, Ctx target) const;

    // reinterpret in a wider/narrower compatible context: variables are
    // matched by name/slot
    MPoly with_ctx(Ctx target) const;

    std::string str() const;

private:
    Ctx ctx_;
    Terms t_;
};

struct DivisionError : std::runtime_error {
    explicit DivisionError(const std::string& what) : std::runtime_error(what) {}
};

// quotient of an exact division; throws DivisionError if den does not divide
// num
MPoly exact_divide(const MPoly& num, const MPoly& den);

}  // namespace qcy

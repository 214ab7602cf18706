#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusion/matrix.hpp"

namespace fusion {

enum class DynkinFamily { A, D, E, T };

// Admissible ranks: A_n (n >= 1), D_n (n >= 4; D_2, D_3 are canonicalized to
// the A side), E_6, E_7, E_8, T_n (n >= 1, the tadpole).
struct DynkinType {
    DynkinFamily family = DynkinFamily::A;
    int rank = 0;

    bool operator==(const DynkinType&) const = default;
};

bool type_admissible(const DynkinType& t);
std::string type_name(const DynkinType& t); // "A11", "D7", "E6", "T5"
std::optional<DynkinType> parse_type(const std::string& name);
bool type_less(const DynkinType& x, const DynkinType& y); // family A<D<E<T, then rank

// Symmetric non-negative adjacency; diagonal entries count loops.
struct LoopyGraph {
    int size = 0;
    IntMat adjacency;

    void check_shape() const;
    bool operator==(const LoopyGraph&) const = default;
};

bool graph_connected(const LoopyGraph& g);

LoopyGraph build_graph(const DynkinType& t);
int coxeter_number(const DynkinType& t);
std::vector<int> coxeter_exponents(const DynkinType& t); // sorted multiset

// The multiset of m in 1..h-1 such that 2cos(pi m / h) is an eigenvalue of A,
// with multiplicity; exact, via division of the characteristic polynomial by
// the minimal polynomials of the 2cos values.  Throws structural_error if some
// eigenvalue is not of that form.
std::vector<int> spectrum_exponents(const IntMat& A, long h);

// The unique admissible type whose built graph is isomorphic to g, if any.
// g must be connected (structural_error otherwise).
std::optional<DynkinType> recognize(const LoopyGraph& g);

// 2I - A positive definite over the rationals (Sylvester pivots, exact).
bool spectral_radius_lt_2(const IntMat& adjacency);

// All connected loopy graphs with spectral radius < 2 and at most max_size
// vertices, one per isomorphism class, sorted by size then canonical encoding.
std::vector<LoopyGraph> enumerate_norm_lt_2(int max_size);

} // namespace fusion

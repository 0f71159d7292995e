#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "schubop/polynomial.hpp"
#include "schubop/weyl.hpp"

namespace schubop {

/// f d_g for a single letter; closed form on each monomial.
Polynomial apply_simple(const Polynomial& f, Letter g);
/// The same operator computed as (f - f^s) / denominator by exact division.
Polynomial apply_simple_by_division(const Polynomial& f, Letter g);

/// Left-to-right composition of simple operators.
Polynomial apply_word(const Polynomial& f, const GeneratorWord& w);
/// d_w through the canonical reduced word of w.
Polynomial apply_element(const Polynomial& f, const SignedPermutation& w, GroupType t);

GeneratorWord nabla_B_word(int k, int n);
GeneratorWord nabla_D_word(int k, int n);
GeneratorWord partial_v_word(int n);

Polynomial nabla_B(const Polynomial& f, int k, int n);
Polynomial nabla_D(const Polynomial& f, int k, int n);
Polynomial partial_v(const Polynomial& f, int n);

/// sum over the group of (-1)^l(w) f^w.
Polynomial antisymmetrize(const Polynomial& f, GroupType t, int n);
/// Vandermonde-type products: prod_{i<j}(x_i - x_j), x_1..x_n prod_{i>j}(x_i^2 - x_j^2),
/// prod_{i>j}(x_i^2 - x_j^2).
Polynomial delta(GroupType t, int n);

/// Sign e with f Omega^W / Delta = e f d_{w0} on every module generator, or 0 if none.
int lemma1_sign(GroupType t, int n);
bool lemma1_check(GroupType t, int n);

struct DisplayRow {
  int offset = 0;
  std::vector<Letter> letters;
};

/// Planar arrangement of letters: rows top to bottom, each with a leading offset.
struct PlanarDisplay {
  std::vector<DisplayRow> rows;
  int n = 1;

  std::string to_string() const;
};

/// Rows separated by '/', offsets by leading dots: "0 1 2 3/. 0 1 2/. . 0 1".
PlanarDisplay parse_display(std::string_view text, int n);
GeneratorWord row_reading(const PlanarDisplay& d);
/// Successive columns read downwards, left to right.
GeneratorWord column_reading(const PlanarDisplay& d);

/// Both words are reduced in the group of type t and evaluate to the same element.
bool congruent(const GeneratorWord& a, const GeneratorWord& b, GroupType t);
/// Weaker notion: the words evaluate to the same element.
bool same_element(const GeneratorWord& a, const GeneratorWord& b);

}  // namespace schubop

#pragma once

#include "twocat/functor.hpp"

namespace twocat {

// Discrete 2-category on the given objects.
TwoCategory discrete(const std::vector<std::string>& objects);

// One object, one 1-cell, 2-cells a finite monoid under vcomp.
// mul[b][a] is the index of b·a; element 0 is the unit.
TwoCategory one_object_monoid(const std::vector<std::string>& elements,
                              const std::vector<std::vector<int>>& mul);

// Locally discrete 2-category of the linear order [n] = {0 < ... < n}.
TwoCategory linear_order(int n);

TwoCatPtr fix_T();
TwoCatPtr fix_I();
TwoCatPtr fix_G2();
TwoCatPtr fix_G2sat();
TwoCatPtr fix_C2();
TwoCatPtr fix_M2();

struct Product {
  TwoCatPtr cat;
  TwoFunctor pr1, pr2;
};

Product fix_prod(TwoCatPtr a, TwoCatPtr b);

// Point functor x̂ : FIX_T → D picking an object.
TwoFunctor point(TwoCatPtr d, int x);
// The unique functor to the terminal 2-category.
TwoFunctor to_terminal(TwoCatPtr c, TwoCatPtr t);

}  // namespace twocat

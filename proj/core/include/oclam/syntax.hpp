#pragma once

#include <map>
#include <set>
#include <string>

#include "oclam/ast.hpp"

namespace oclam {

std::set<std::string> free_vars(const TermPtr& t);

// Fresh name based on `base` avoiding everything in `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

// Capture-avoiding parallel substitution; binders of t are freshened as
// needed against the free variables of the images.
TermPtr substitute(const TermPtr& t,
                   const std::map<std::string, TermPtr>& subst);
TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& u);

// Equality modulo consistent renaming of binders; annotations and scalars
// compare structurally.
bool alpha_eq(const TermPtr& a, const TermPtr& b);

// The measure mu: 0 on variables, 1 + max over the branches of sums and
// pairs, 1 + sum of the subterms everywhere else.
long measure(const TermPtr& t);

std::string print_term(const TermPtr& t);

} // namespace oclam

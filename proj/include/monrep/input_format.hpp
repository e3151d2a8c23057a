#pragma once

#include "monrep/lambda.hpp"

namespace monrep {

/// A named coefficient-algebra module from an `amodule` section.
struct NamedModule {
    std::string name;
    AModule mod;
};

/// A named representation from a `rep` section.
struct NamedRep {
    std::string name;
    LambdaRep rep;
};

/// Parsed input file: one coefficient algebra, one outer quiver with a
/// monomial ideal, and any number of named modules and representations.
struct InputData {
    std::string algebra_name;
    std::string quiver_name;
    LambdaContext context;
    std::vector<NamedModule> modules;
    std::vector<NamedRep> reps;

    const AModule& module_by_name(const std::string& name) const;
    const LambdaRep& rep_by_name(const std::string& name) const;
};

/// Parses the textual format.  Grammar sketch:
///
///   field 101                          (or: field rational)
///   algebra A { vertex a; arrow x: a -> a; rel x.x; }
///   quiver Q { vertices 4; arrow g: 4 -> 3; ... rel b1.g; }
///   amodule M { dims = [2]; maps = { x = [[0, 0], [1, 0]] }; }
///   rep X { at 3: module dims=[2] maps={ x = [[0, 0], [1, 0]] };
///           map g = [[0], [1]]; }
///
/// `#` starts a line comment; the format is whitespace-insensitive.  Dotted
/// relation words are written right-to-left ("a.b2.g" applies g first).
/// Matrix entries are integers (or p/q fractions) reduced into the field.
/// Branches and maps omitted from a rep are zero.  The general form of a rep
/// map keys matrices by inner vertex: map g = { a = [[...]], b = [[...]] }.
/// Errors carry 1-based line/column positions.
InputData parse_input(const std::string& text);
InputData parse_input_file(const std::string& path);

/// Canonical printer; parse(print_input(s)) reconstructs s exactly
/// (input_equal).  Named sections print in their original order.
std::string print_input(const InputData& s);

/// Structural equality of everything a file round-trip preserves.
bool input_equal(const InputData& a, const InputData& b);

/// Serializes one representation as a rep section body (used by the
/// construct command to append new reps).
std::string print_rep_section(const LambdaContext& c, const std::string& name,
                              const LambdaRep& rep);

} // namespace monrep

#pragma once

#include "chowkit/chow.hpp"

#include <map>
#include <string>
#include <vector>

namespace chowkit {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                             ": " + msg),
          line(line_), col(col_) {}
};

// One summand group of a bundle expression, e.g. O(2,0), O{xi}(1)^3, dual(F), F.
struct BundleTerm {
    enum class Kind { Degrees, Generator, Dual, Ref };
    Kind kind = Kind::Degrees;
    Expo degrees;           // Degrees
    std::string name;       // Generator / Dual / Ref
    int gen_degree = 0;     // Generator
    int repeat = 1;         // ^n
};

using BundleExpr = std::vector<BundleTerm>;

struct QueryItem {
    enum class Kind { Euler, Dim, ChiY, Fano, Canonical, Chi, Degree, H0 };
    Kind kind = Kind::Euler;
    bool minus_k = false;      // degree(-K), h0(-K)
    bool structure = false;    // chi(O)
    Expo degrees;              // explicit multidegree argument
};

struct FFCheckParams {
    std::map<std::string, long long> kv;   // p, seed, trials, budget
    std::string instance_file;             // instance=path
    std::vector<std::string> checks;       // blowup_identity, stratified_identity, ...
};

struct Statement {
    enum class Kind { Base, Bundle, Proj, Zero, Preset, Query, FFCheck };
    Kind kind = Kind::Base;
    int line = 0;
    std::string name;            // declared name; may be empty for base
    std::vector<int> base_dims;  // Base
    BundleExpr bundle;           // Bundle / Proj / Zero
    std::string space_arg;       // Zero ambient, Query space
    std::string preset_name;     // Preset
    std::vector<QueryItem> items;
    FFCheckParams ff;
};

struct Script {
    std::vector<Statement> statements;
};

// Line-oriented grammar, one statement per line, '#' comments:
//   [NAME =] base P2 * P2
//   bundle NAME = O(2,0) + O(0,2) | dual(F) | O{xi}(1)^3 | F
//   [space] NAME = proj(BEXPR)
//   [space] NAME = zero(SPACE, BEXPR)
//   preset NAME            (X, Y, S, T, PE, PFdual)
//   query SPACE ITEM...    (euler dim chiy fano canonical chi(O) chi(d,..)
//                           degree(-K) degree(d,..) h0(-K) h0(d,..))
//   ffcheck [p=..] [seed=..] [trials=..] [budget=..] [instance=FILE] CHECK...
// Errors carry line and column. Name resolution (declared-before-use, degree
// arity) happens at run time against the accumulated tower.
Script parse(const std::string& text);

std::string print(const Script& s);
std::string print(const Statement& s);

} // namespace chowkit

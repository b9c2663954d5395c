#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extremal::cli {

// Command-line front end. Exit codes: 0 success / claim holds,
// 1 counterexample found (or non-isomorphic pair), 2 usage or input error.
// `in` backs the `-` placeholder of graph-consuming commands, one graph6
// string per line.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace extremal::cli

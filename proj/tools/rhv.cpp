// Command-line front end: space descriptors in, invariants out.
//
//   rhv info F4/P4
//   rhv lines G2/P1 --json
//   rhv planes D7/P7 --k 3
//   rhv rep dim E7 w7
//   rhv prolong "G(3,6)" --kmax 4
//   rhv reconstruct E6/P1
//
// Exit codes: 0 ok, 1 failed check, 2 parse error, 3 catalog-uncovered,
// 4 guard exceeded.

#include <iostream>
#include <string>
#include <vector>

#include "rhv/cli.hpp"

namespace {

const char* kUsage = R"(usage: rhv <command> <args> [options]

commands:
  info <G>/P<S>                  dimension, exposed-short flags, tangent dims
  grading <G>/P<S>               Levi-irreducible tangent pieces
  classify <G>/P<S>              cominuscule / minuscule / exposed short, Y1
  lines <G>/P<S>                 families of lines (closed & open orbit dims)
  planes <G>/P<S> --k N          families of P^k's (exposed-short: catalog)
  shadow <G>/P<S> --other {S'}   Tits shadow of a G/P_{S'} point on G/P_S
  reconstruct <G>/P<i>           rebuild the diagram from line-space data
  rep dim <G> <weight>           Weyl dimension (weight: w1, 2w1+w4, ...)
  rep weights <G> <weight>       weight multiplicities
  rep restrict <G> <w> --remove {S}   restriction to the Levi of P_S
  rep normal <G>/P<k>            normal-space table for the family
  rep verify-normal <G>/P<k> --j N    common-constituent verification
  prolong <family> [--kmax N]    strict prolongation check; family G(k,n),
                                 GLag(n,2n), S<n>, Q<m>
  prolong secant <seg33|v2p2> --k N --trials N
  prolong probe <f4p4|f4p3|c3p2|sigma2seg>
  octonion-verify [--samples N]  octonion identity and kernel-dimension suite

options: --json --seed N --k N --j N --class N --kmax N --trials N --samples N
         --other {n1,n2,...} --remove {n1,n2,...}
         --guard-orbit N --guard-dim N --guard-poly N
)";

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    std::cout << kUsage;
    return args.empty() ? 2 : 0;
  }
  try {
    rhv::cli::Query q = rhv::cli::parse(args);
    rhv::cli::Report r = rhv::cli::run(q);
    if (q.json_out)
      std::cout << r.json_text << "\n";
    else
      std::cout << r.text;
    return r.status;
  } catch (const rhv::ParseError& e) {
    std::cerr << "parse error (position " << e.pos << "): " << e.what() << "\n";
    return 2;
  } catch (const rhv::GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 4;
  } catch (const rhv::UncoveredCase& e) {
    std::cerr << "uncovered case: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

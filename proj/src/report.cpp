/*
   Copyright 2026 The wildaut authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "wildaut/report.hpp"

#include <sstream>

namespace wildaut {

ojson report_json(const CoverAnalysis& A, const std::string& input_text) {
    ojson j;
    j["version"] = kReportSchema;
    j["p"] = A.base->p;
    j["field"] = ojson{{"e", A.base->e}, {"modulus", A.base->modulus}};
    j["input"] = input_text;
    j["reduced"] = up_print(A.red, "X");
    j["conductor"] = A.m;
    j["genus"] = A.genus;
    j["ad"] = up_print(A.ad, "Y");
    j["splitting_extension"] = A.M;
    j["splitting_field_modulus"] = A.big->modulus;
    ojson basis = ojson::array();
    for (auto& b : A.rs.basis) basis.push_back(b.c);
    j["root_basis"] = std::move(basis);
    ojson stats;
    for (auto& [o, c] : A.prof.order_stats) stats[std::to_string(o)] = c;
    j["group"] = ojson{{"order", A.prof.order},
                       {"exponent", A.prof.exponent},
                       {"center_order", A.prof.center_order},
                       {"derived_order", A.prof.derived_order},
                       {"order_stats", std::move(stats)},
                       {"label", A.prof.label.text}};
    ojson eps = ojson::array();
    for (auto& row : A.prof.eps_basis) eps.push_back(row);
    j["epsilon_matrix"] = std::move(eps);
    ojson sv = ojson::array();
    for (auto& s : A.group.svec) sv.push_back(static_cast<unsigned>(s));
    j["s_vector"] = std::move(sv);
    j["checks"] = A.checks;
    return j;
}

std::string report_text(const CoverAnalysis& A, const std::string& input_text) {
    std::ostringstream os;
    os << "cover W^" << A.base->p << " - W = f over " << A.base->describe() << "\n";
    os << "f        = " << input_text << "\n";
    os << "red(f)   = " << up_print(A.red, "X") << "\n";
    os << "conductor m = " << A.m << ", genus = " << A.genus << "\n";
    os << "F(X,Y)   = " << bp_print(A.dec.big_f, "X", "Y") << "\n";
    // P reduced mod Ad, the printable core of the trace
    BP<FDom> pmod = bp_zero(A.red.dom);
    for (auto& [kx, u] : A.dec.p_f.t) {
        UP<FDom> r = up_divrem(u, A.ad).second;
        for (auto& [ky, c] : r.t) bp_add_term(pmod, kx, ky, c);
    }
    os << "P mod Ad = " << bp_print(pmod, "X", "Y") << "\n";
    os << "Ad_f(Y)  = " << up_print(A.ad, "Y") << "\n";
    UP<FDom> sp = s_polynomial(A);
    os << "s-poly   = " << up_print(sp, "Y") << "\n";
    os << "gcd(Ad, s-poly) = " << up_print(up_gcd(A.ad, sp), "Y") << "\n";
    auto eps = epsilon_polynomial(A);
    os << "epsilon(Y,Z) mod (Ad,Ad) = ";
    if (eps.empty()) {
        os << "0";
    } else {
        bool first = true;
        for (auto it = eps.rbegin(); it != eps.rend(); ++it) {
            if (!first) os << "+";
            first = false;
            bool parens = false;
            std::string lit = A.red.dom.print(it->second, &parens);
            if (lit != "1") os << (parens ? "(" + lit + ")" : lit) << "*";
            auto [ey, ez] = it->first;
            if (ey) {
                os << "Y";
                if (ey > 1) os << "^" << ey;
            }
            if (ey && ez) os << "*";
            if (ez) {
                os << "Z";
                if (ez > 1) os << "^" << ez;
            }
        }
    }
    os << "\n";
    os << "splitting extension M = " << A.M << " (roots in " << A.big->describe() << ")\n";
    os << "group: order " << A.prof.order << ", exponent " << A.prof.exponent << ", center "
       << A.prof.center_order << ", derived " << A.prof.derived_order << "\n";
    os << "order stats:";
    for (auto& [o, c] : A.prof.order_stats) os << " " << o << ":" << c;
    os << "\n";
    os << "label: " << A.prof.label.text << "\n";
    os << "checks passed: " << A.checks.size() << "\n";
    return os.str();
}

}  // namespace wildaut

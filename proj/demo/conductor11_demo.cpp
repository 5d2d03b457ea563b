// Curve 11a2, y^2 + y = x^3 - x^2 - 7820x - 263580, at p = 5 over Q and over
// Q(mu_5), followed by the other two curves of the isogeny class.

#include "fsel/report.hpp"

#include <iostream>

int main() {
    using namespace fsel;
    const auto E = WeierstrassModel::from_ints({0, -1, 1, -7820, -263580});
    const std::set<std::string> assume = {hyp::image_condition};

    std::cout << "### 11a2 over Q, image condition asserted\n\n"
              << report_to_text(assemble_specialized(E, 5, BaseField::Q, assume)) << "\n";
    std::cout << "### 11a2 over Q(mu_5), image condition asserted\n\n"
              << report_to_text(assemble_specialized(E, 5, BaseField::QMuP, assume)) << "\n";

    const auto g11 = g_v(places_above(BaseField::Q, 11, 5)[0], 5);
    std::cout << "g_11 = " << g11.g << " since v_5(11^" << g11.witness_power << " - 1) = " << g11.witness_valuation
              << "; 5 regular: " << (is_regular(5) ? "yes" : "no") << "\n\n";

    for (const auto& [label, a] : {std::pair{"11a1", std::array<long, 5>{0, -1, 1, -10, -20}},
                                   std::pair{"11a3", std::array<long, 5>{0, -1, 1, 0, 0}}}) {
        const auto R = assemble_specialized(WeierstrassModel::from_ints(a), 5, BaseField::Q);
        std::cout << label << ": residual image " << to_string(R.global.image.classification) << ", ";
        if (const auto* b = R.bound())
            std::cout << "lambda <= " << b->value << " (" << to_string(R.strength) << ")\n";
        else
            std::cout << "blocked without assumptions\n";
    }
}

// Generates the frozen data files: the 25-monomial Aronhold form and the
// generic Scorza covariant, plus their checksums.
#include <fstream>
#include <iostream>

#include "scorza/data.hpp"

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "data";

    auto form = scorza::generate_aronhold_form();
    std::string form_text = scorza::serialize_rational_poly(form, "aronhold-form");

    std::cerr << "aronhold form: " << form.nterms() << " terms\n";
    std::cerr << "generating the generic Scorza covariant (takes a while)...\n";
    auto cov = scorza::generate_scorza_covariant();
    std::string cov_text = scorza::serialize_rational_poly(cov, "scorza-covariant");
    std::cerr << "covariant: " << cov.nterms() << " terms\n";

    {
        std::ofstream out(dir + "/aronhold_form.txt", std::ios::binary);
        out << form_text;
    }
    {
        std::ofstream out(dir + "/scorza_covariant.txt", std::ios::binary);
        out << cov_text;
    }
    {
        std::ofstream out(dir + "/CHECKSUMS");
        out << "aronhold_form.txt " << std::hex << scorza::fnv1a(form_text) << "\n";
        out << "scorza_covariant.txt " << std::hex << scorza::fnv1a(cov_text) << "\n";
    }
    std::cout << "wrote " << dir << "/aronhold_form.txt, " << dir << "/scorza_covariant.txt\n";
    return 0;
}

// Walks through the worked examples: gamma on 571492638 and the three
// bijections on 83475612 / 314527698.

#include <iostream>

#include <boundperm/boundperm.hpp>

int main() {
    using namespace boundperm;

    const Permutation sigma{5, 7, 1, 4, 9, 2, 6, 3, 8};
    const auto image = gamma(sigma);
    std::cout << "sigma            " << sigma.to_string() << '\n'
              << "A-code(sigma)    " << a_code(sigma).to_string() << '\n'
              << "gamma(sigma)     " << image.to_string() << '\n'
              << "inv / sor        " << inv_count(sigma) << " / " << sorting_index(image) << '\n';

    const Permutation pi{8, 3, 4, 7, 5, 6, 1, 2};
    const auto a = alpha(pi, 7);
    std::cout << "\npi               " << pi.to_string() << '\n'
              << "alpha(pi)        " << a.to_string() << '\n'
              << "beta^-1(alpha)   " << beta_inverse(a).to_string() << '\n'
              << "delta(pi)        " << delta(pi, 7).to_string() << '\n'
              << "des / vpk / vnw  " << des_count(pi) << " / " << vpk(a) << " / " << vnw(delta(pi, 7)) << '\n';

    std::cout << "\nG through z^4:\n" << g_series(4).to_string() << '\n';
    return 0;
}

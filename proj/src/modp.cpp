#include "crjet/modp.hpp"

namespace crjet {

const std::vector<PrimeRoot>& prime_table() {
    static const std::vector<PrimeRoot> t = {
        {4611686018427387817ULL, 120863620846201794ULL},
        {4611686018427387761ULL, 1130501565556633554ULL},
        {4611686018427387737ULL, 445087375101645770ULL},
        {4611686018427387733ULL, 678134394580861710ULL},
        {4611686018427387709ULL, 332795564299355040ULL},
        {4611686018427387701ULL, 1516271632427511319ULL},
        {4611686018427387617ULL, 1741778642412996051ULL},
        {4611686018427387461ULL, 28265398815898435ULL},
        {4611686018427387421ULL, 514749418491258170ULL},
        {4611686018427387409ULL, 991982837001326714ULL},
        {4611686018427387329ULL, 2031432188910929020ULL},
        {4611686018427387301ULL, 1241939876926444310ULL},
        {4611686018427387241ULL, 808263873925576861ULL},
        {4611686018427387113ULL, 690495592644948772ULL},
        {4611686018427387073ULL, 180802848473195561ULL},
        {4611686018427386981ULL, 2084562456366214808ULL},
        {4611686018427386897ULL, 111460882215017084ULL},
        {4611686018427386389ULL, 1104889923000138749ULL},
        {4611686018427386329ULL, 1281130723377209022ULL},
        {4611686018427386309ULL, 1811147786651960905ULL},
        {4611686018427386201ULL, 591221990606863500ULL},
        {4611686018427386081ULL, 879469301523366183ULL},
        {4611686018427385993ULL, 2042732430872809800ULL},
        {4611686018427385981ULL, 1540742349975604709ULL},
    };
    return t;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // Extended Euclid; faster than Fermat for one-off inverses.
    __int128 t = 0, nt = 1;
    __int128 r = p, nr = a % p;
    while (nr) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw std::domain_error("inv_mod: not invertible");
    if (t < 0) t += p;
    return (std::uint64_t)t;
}

} // namespace crjet

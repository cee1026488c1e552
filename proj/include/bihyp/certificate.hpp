#ifndef BIHYP_CERTIFICATE_HPP
#define BIHYP_CERTIFICATE_HPP

#include <stdexcept>
#include <string>

#include "bihyp/store.hpp"

namespace bihyp {

// Raised when the store lacks a sweep the certificate depends on.
struct IncompleteCertificate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CertificateResult {
    bool valid = false;
    std::string json;  // full certificate document
};

// Sweep ids the m(3) = 10 certificate expects in the store.
std::vector<std::string> m3_required_sweeps();

// Runs the missing sweeps (n = 3..6 complete, n = 7 restricted to instances
// with every vertex pair adjacent; the rest reduce to order 6 by
// identification) into the store. A nonzero budget applies to the order-7
// sweep only and surfaces as SweepTimeout.
void run_m3_sweeps(VerdictStore& store, int jobs = 1, long long n7_budget_ms = 0);

// Assembles and checks the smallest-size certificate at r = 3:
//  (a) stored sweeps show no uncolorable class with <= 9 edges for n = 3..7,
//      every stored record re-verified against its canonical representative;
//  (b) the order-reduction step holds for r = 3, m <= 9, n = 7..100, closing
//      all orders above 7;
//  (c) two order-5 and order-6 witnesses of size 10 are minimal uncolorable.
// Together these pin the least size of a minimal uncolorable 3-uniform
// bi-hypergraph to exactly 10. Missing sweeps raise IncompleteCertificate.
CertificateResult verify_m3(const VerdictStore& store, int jobs = 1);

}  // namespace bihyp

#endif

//! Sound Galois-theoretic certificates from reductions modulo primes.
//!
//! By Dedekind's theorem, for a prime `q` not dividing the discriminant the
//! factor degrees of `p mod q` are the cycle type of a Frobenius element in
//! the Galois group. Every certificate produced here re-checks from cycle
//! types alone; a failed search is reported as inconclusive, never as a
//! negative result.

mod cert;
mod modp;

pub use cert::{
    certify_irreducible, certify_symmetric_group, cycle_type_mod_p, Certification, CycleType,
    IrreducibilityCertificate, IrreducibilityKind, Reduction, SnCertificate,
};
pub use modp::{is_prime, primes};

//! Seeded randomized checks over the algebra operations and the reduction
//! pipeline. Every suite reports its trial and failure counts so callers can
//! print one line per property; the seed comes from the `HAMRED_SEED`
//! environment variable (default 0) so runs are reproducible.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Subspace;
use crate::reduction::{build_quotient, ActionSpec, ReductionResult};
use crate::superblade::{Blade, Element, Parity, Signature};
use crate::{ratio, Error, Rat};

pub const SEED_ENV: &str = "HAMRED_SEED";

pub struct Fuzzer {
    rng: ChaCha8Rng,
    seed: u64,
}

impl Fuzzer {
    pub fn with_seed(seed: u64) -> Self {
        Fuzzer {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
        }
    }

    /// Seed from `HAMRED_SEED` when set and parseable, 0 otherwise.
    pub fn from_env() -> Self {
        let seed = std::env::var(SEED_ENV)
            .ok()
            .and_then(|s| s.parse::<u64>().ok())
            .unwrap_or(0);
        Fuzzer::with_seed(seed)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn random_rat(&mut self) -> Rat {
        let n = self.rng.gen_range(-6_i64..=6);
        let d = self.rng.gen_range(1_i64..=4);
        ratio(n, d)
    }

    /// A sparse random element with up to `max_terms` blade terms.
    pub fn random_element(&mut self, sig: &Signature, max_terms: usize) -> Element {
        let dim = sig.dim() as u64;
        let terms = self.rng.gen_range(1..=max_terms.max(1));
        let mut e = Element::zero(sig.clone());
        for _ in 0..terms {
            let mask = self.rng.gen_range(0..dim);
            let coeff = self.random_rat();
            e = e.add(&Element::from_blade(sig.clone(), Blade(mask), coeff));
        }
        e
    }

    /// A random parity-homogeneous element (possibly zero).
    pub fn random_homogeneous(&mut self, sig: &Signature, max_terms: usize) -> Element {
        let parity = if self.rng.gen_bool(0.5) {
            Parity::Even
        } else {
            Parity::Odd
        };
        let (even, odd) = self.random_element(sig, max_terms).parity_decompose();
        match parity {
            Parity::Even => even,
            Parity::Odd => odd,
        }
    }

    /// A random vector in the given subspace: a sparse combination of a few
    /// basis rows, which keeps high-dimensional suites fast.
    pub fn random_in_subspace(&mut self, sub: &Subspace) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); sub.ambient_dim()];
        if sub.dim() == 0 {
            return v;
        }
        let picks = self.rng.gen_range(1..=sub.dim().min(4));
        for _ in 0..picks {
            let row = &sub.basis_rows()[self.rng.gen_range(0..sub.dim())];
            let c = self.random_rat();
            for (slot, x) in v.iter_mut().zip(row) {
                *slot += &c * x;
            }
        }
        v
    }
}

/// Outcome of one randomized suite.
#[derive(Debug, Clone)]
pub struct FuzzOutcome {
    pub name: String,
    pub trials: usize,
    pub failures: usize,
}

impl FuzzOutcome {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }
}

/// (fg)h = f(gh) for random triples.
pub fn associativity_suite(
    fz: &mut Fuzzer,
    sig: &Signature,
    trials: usize,
) -> Result<FuzzOutcome, Error> {
    let mut failures = 0;
    for _ in 0..trials {
        let f = fz.random_element(sig, 4);
        let g = fz.random_element(sig, 4);
        let h = fz.random_element(sig, 4);
        let left = f.checked_mul(&g)?.checked_mul(&h)?;
        let right = f.checked_mul(&g.checked_mul(&h)?)?;
        if left != right {
            failures += 1;
        }
    }
    Ok(FuzzOutcome {
        name: "associativity".into(),
        trials,
        failures,
    })
}

/// [f,g] = -(-1)^{|f||g|} [g,f] for random homogeneous pairs.
pub fn antisymmetry_suite(
    fz: &mut Fuzzer,
    sig: &Signature,
    trials: usize,
) -> Result<FuzzOutcome, Error> {
    let mut failures = 0;
    for _ in 0..trials {
        let f = fz.random_homogeneous(sig, 4);
        let g = fz.random_homogeneous(sig, 4);
        let sign = match (f.parity(), g.parity()) {
            (Some(pf), Some(pg)) => pf.sign_factor(pg),
            _ => 1, // a zero side: both brackets vanish either way
        };
        let lhs = f.checked_supercommutator(&g)?;
        let rhs = g.checked_supercommutator(&f)?.scale(&ratio(-sign as i64, 1));
        if lhs != rhs {
            failures += 1;
        }
    }
    Ok(FuzzOutcome {
        name: "super-antisymmetry".into(),
        trials,
        failures,
    })
}

/// The graded Jacobi identity
/// [f,[g,h]] = [[f,g],h] + (-1)^{|f||g|} [g,[f,h]]
/// for random homogeneous triples.
pub fn jacobi_suite(
    fz: &mut Fuzzer,
    sig: &Signature,
    trials: usize,
) -> Result<FuzzOutcome, Error> {
    let mut failures = 0;
    for _ in 0..trials {
        let f = fz.random_homogeneous(sig, 3);
        let g = fz.random_homogeneous(sig, 3);
        let h = fz.random_homogeneous(sig, 3);
        let sign = match (f.parity(), g.parity()) {
            (Some(pf), Some(pg)) => pf.sign_factor(pg),
            _ => 1,
        };
        let lhs = f.checked_supercommutator(&g.checked_supercommutator(&h)?)?;
        let rhs = f
            .checked_supercommutator(&g)?
            .checked_supercommutator(&h)?
            .add(
                &g.checked_supercommutator(&f.checked_supercommutator(&h)?)?
                    .scale(&ratio(sign as i64, 1)),
            );
        if lhs != rhs {
            failures += 1;
        }
    }
    Ok(FuzzOutcome {
        name: "super-Jacobi".into(),
        trials,
        failures,
    })
}

/// Random algebra elements times random ideal vectors stay in the ideal.
pub fn absorption_suite(
    fz: &mut Fuzzer,
    spec: &ActionSpec,
    ideal: &Subspace,
    trials: usize,
) -> Result<FuzzOutcome, Error> {
    let mut failures = 0;
    for _ in 0..trials {
        let f = fz.random_element(&spec.signature, 3);
        let v = Element::from_coords(spec.signature.clone(), &fz.random_in_subspace(ideal))?;
        let product = f.checked_mul(&v)?;
        if !ideal.contains(&product.coords())? {
            failures += 1;
        }
    }
    Ok(FuzzOutcome {
        name: "ideal absorption".into(),
        trials,
        failures,
    })
}

/// Products of random invariant vectors stay invariant.
pub fn closure_suite(
    fz: &mut Fuzzer,
    spec: &ActionSpec,
    invariants: &Subspace,
    trials: usize,
) -> Result<FuzzOutcome, Error> {
    let mut failures = 0;
    for _ in 0..trials {
        let f = Element::from_coords(spec.signature.clone(), &fz.random_in_subspace(invariants))?;
        let g = Element::from_coords(spec.signature.clone(), &fz.random_in_subspace(invariants))?;
        let product = f.checked_mul(&g)?;
        if !invariants.contains(&product.coords())? {
            failures += 1;
        }
    }
    Ok(FuzzOutcome {
        name: "invariant closure".into(),
        trials,
        failures,
    })
}

/// Shifting each coset representative by a random intersection vector must
/// reproduce the same structure constants, unit coordinates, and parities.
pub fn perturbation_suite(
    fz: &mut Fuzzer,
    spec: &ActionSpec,
    reduction: &ReductionResult,
    trials: usize,
) -> Result<FuzzOutcome, Error> {
    let mut failures = 0;
    for _ in 0..trials {
        let mut shifted = reduction.reps.clone();
        for rep in &mut shifted {
            // keep representatives parity-homogeneous: only add intersection
            // vectors of the representative's own parity
            let rep_parity = Element::from_coords(spec.signature.clone(), rep)?.parity();
            let noise = fz.random_in_subspace(&reduction.intersection);
            let (even, odd) =
                Element::from_coords(spec.signature.clone(), &noise)?.parity_decompose();
            let part = match rep_parity {
                Some(Parity::Odd) => odd,
                _ => even,
            };
            for (slot, x) in rep.iter_mut().zip(part.coords()) {
                *slot += x;
            }
        }
        let rebuilt = build_quotient(&spec.signature, &shifted, &reduction.intersection)?;
        if rebuilt != reduction.quotient {
            failures += 1;
        }
    }
    Ok(FuzzOutcome {
        name: "representative perturbation".into(),
        trials,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::reduce;

    #[test]
    fn suites_pass_on_small_clifford() {
        let sig = Signature::cliff_pq(1, 2);
        let mut fz = Fuzzer::with_seed(7);
        assert!(associativity_suite(&mut fz, &sig, 200).unwrap().pass());
        assert!(antisymmetry_suite(&mut fz, &sig, 200).unwrap().pass());
        assert!(jacobi_suite(&mut fz, &sig, 200).unwrap().pass());
    }

    #[test]
    fn same_seed_same_elements() {
        let sig = Signature::cliff(3);
        let mut a = Fuzzer::with_seed(42);
        let mut b = Fuzzer::with_seed(42);
        for _ in 0..20 {
            assert_eq!(a.random_element(&sig, 4), b.random_element(&sig, 4));
        }
    }

    #[test]
    fn absorption_closure_and_perturbation_on_spin3() {
        let entry = crate::catalog::spin3_action(false);
        let reduction = reduce(&entry.spec).unwrap();
        let mut fz = Fuzzer::with_seed(11);
        assert!(
            absorption_suite(&mut fz, &entry.spec, &reduction.ideal, 50)
                .unwrap()
                .pass()
        );
        assert!(
            closure_suite(&mut fz, &entry.spec, &reduction.invariants, 50)
                .unwrap()
                .pass()
        );
        assert!(
            perturbation_suite(&mut fz, &entry.spec, &reduction, 20)
                .unwrap()
                .pass()
        );
    }
}

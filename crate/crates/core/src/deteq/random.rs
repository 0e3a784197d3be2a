//! Seeded random ansatz and potential draws for the cross-check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactfield::{FieldElem, Var};
use crate::operator::{Algebra, IntegralAnsatz};

#[derive(Clone, Debug)]
pub struct Draw {
    pub seed: u64,
    pub symbolic_hbar: bool,
    pub ansatz: IntegralAnsatz,
    pub v0: FieldElem,
    pub v1: FieldElem,
}

impl Draw {
    pub fn algebra(&self) -> Algebra {
        if self.symbolic_hbar {
            Algebra::symbolic()
        } else {
            Algebra::unit()
        }
    }
}

fn small(rng: &mut ChaCha8Rng) -> i64 {
    let k = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        -k
    } else {
        k
    }
}

/// Up to three terms of degree ≤ 2 in x, y, z.
fn poly(rng: &mut ChaCha8Rng) -> FieldElem {
    let mut acc = FieldElem::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut t = FieldElem::int(small(rng));
        for _ in 0..rng.gen_range(0..=2) {
            t = t * FieldElem::coord(rng.gen_range(0..3));
        }
        acc = acc + t;
    }
    acc
}

fn maybe(rng: &mut ChaCha8Rng, p: f64, f: impl FnOnce(&mut ChaCha8Rng) -> FieldElem) -> FieldElem {
    if rng.gen_bool(p) {
        f(rng)
    } else {
        FieldElem::zero()
    }
}

fn spin_coefficient(rng: &mut ChaCha8Rng) -> FieldElem {
    match rng.gen_range(0..4) {
        0 => poly(rng),
        1 => poly(rng) / FieldElem::r(),
        2 => poly(rng) / (FieldElem::one() + FieldElem::rho()),
        _ => FieldElem::int(small(rng)),
    }
}

fn potential(rng: &mut ChaCha8Rng) -> FieldElem {
    let k = FieldElem::int(small(rng));
    match rng.gen_range(0..6) {
        0 => k / FieldElem::r(),
        1 => k / FieldElem::rho(),
        2 => k / (FieldElem::int(2) * FieldElem::rho()),
        3 => k / (FieldElem::one() + FieldElem::rho()),
        4 => k * FieldElem::var(Var::Mu) / FieldElem::r(),
        _ => poly(rng),
    }
}

pub fn random_draw(seed: u64) -> Draw {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ints = |rng: &mut ChaCha8Rng| -> [FieldElem; 3] {
        std::array::from_fn(|_| maybe(rng, 0.6, |r| FieldElem::int(small(r))))
    };
    let a = ints(&mut rng);
    let b = ints(&mut rng);
    let spin = |rng: &mut ChaCha8Rng| -> [FieldElem; 3] {
        std::array::from_fn(|_| maybe(rng, 0.3, poly))
    };
    let big_a = spin(&mut rng);
    let big_b = spin(&mut rng);
    let big_c = spin(&mut rng);
    let phi0 = maybe(&mut rng, 0.5, spin_coefficient);
    let phi = std::array::from_fn(|_| maybe(&mut rng, 0.6, spin_coefficient));
    let ansatz = IntegralAnsatz { a, b, big_a, big_b, big_c, phi0, phi };
    let v0 = potential(&mut rng);
    let v1 = potential(&mut rng);
    let symbolic_hbar = rng.gen_bool(0.5);
    Draw { seed, symbolic_hbar, ansatz, v0, v1 }
}

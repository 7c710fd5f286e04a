//! Atomic decompositions and the two kernel-class estimates that rest on
//! them: the projective tensor bound and the regularizing bound.

use coorbit::prelude::*;

pub fn run_example() -> coorbit::Result<()> {
    let n = 8;
    let frame = FrameSpec::parseval_gabor(periodized_gaussian(n)?)?;
    let w = Weight::PolynomialTf(1.0);

    let f = coorbit::random::signal(n, 4);
    let d = atomic_decompose(&f, &frame, &w)?;
    let co = coorbit_norm(&f, &frame, Exponent::ONE, &w)?;
    println!(
        "{} atoms, weighted mass {:.6}, Co l^1 norm {:.6}, constant {:.4}",
        d.atoms.len(),
        d.l1_weighted_mass,
        co,
        d.equivalence_constant
    );

    let k = coorbit::random::operator(n, n, 5);
    let b = projective_tensor_bound(&k, &frame, &frame, &w, &w)?;
    println!(
        "projective bound: lower {:.4}, lattice cost {:.4}, SVD cost {:.4}, constant {:.4}",
        b.lower, b.lattice_cost, b.svd_cost, b.upper_constant
    );

    let r = regularizer_check(&k, &frame, &frame, &w, &w, 50, 6)?;
    let s = r.sampling.expect("sampled");
    println!(
        "regularizer: bound {:.4}, largest sampled ratio {:.4}, violations {} of {}",
        r.criterion_value, s.max_ratio, s.violations, s.samples
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> coorbit::Result<()> {
    run_example()
}

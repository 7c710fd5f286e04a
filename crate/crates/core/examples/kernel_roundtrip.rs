//! Operator, Galerkin kernel and abstract kernel: the three descriptions of
//! a random operator between a Gabor frame and a Haar basis.

use coorbit::prelude::*;

pub fn run_example() -> coorbit::Result<()> {
    let gabor = FrameSpec::parseval_gabor(periodized_gaussian(16)?)?;
    let haar = FrameSpec::haar(16)?;
    let a = coorbit::random::operator(16, 16, 1);

    let k_a = galerkin_kernel(&a, &gabor, &haar)?;
    let vk = tensor_analysis(&a, &gabor, &haar)?;
    println!("Galerkin kernel vs tensor transform: {:.2e}", k_a.max_abs_diff(&vk)?);

    let x = coorbit::random::signal(16, 2);
    let via = apply_via_factorization(&k_a, &x, &gabor, &haar)?;
    println!("V2^* A_lift V1 x vs A x: {:.2e}", via.sub(&a.apply(&x)?)?.norm());

    let (w1, w2) = (Weight::PolynomialTf(1.0), Weight::Dyadic(0.5));
    let rec = kernel_from_operator(&a, &gabor, &haar, &w1, &w2)?;
    println!("K -> A -> K: {:.2e}", rec.kernel.max_abs_diff(&a)?);
    println!(
        "kernel norm {:.6}, lifted norm {:.6}, atom lower bound {:.6}, window constant {:.4}",
        rec.kernel_norm, rec.lifted_norm, rec.atom_lower_bound, rec.window_constant
    );

    let form = operator_from_kernel(&a, &gabor, &haar, &w1, &w2)?;
    let value = form.eval(&x, &coorbit::random::signal(16, 3))?;
    println!("<A u, v> = {:.6}, bound {:.6}", value.value, value.bound);
    Ok(())
}

#[allow(dead_code)]
fn main() -> coorbit::Result<()> {
    run_example()
}

//! Periodized Haar and Daubechies-4 wavelet bases on Z_32 and Besov-type
//! sequence norms of a step signal.

use coorbit::prelude::*;
use coorbit::presets::SpaceSpec;

pub fn run_example() -> coorbit::Result<()> {
    let n = 32;
    let haar = FrameSpec::haar(n)?;
    let lattice = AffineLattice::standard(n)?;
    println!("levels: {}, atoms: {}", lattice.levels(), haar.len());

    let finest = haar.atom_at(&LatticePoint::Affine(AffinePoint::detail(0, 0)))?;
    println!("finest Haar atom starts with {:?}", &finest.values()[..3]);

    let db4 = normalize_frame(&FrameSpec::wavelet(FilterPair::daubechies4(), lattice)?)?;
    println!("Daubechies-4 Parseval deviation: {:.2e}", db4.parseval_deviation());

    let step: Vec<f64> = (0..n).map(|t| if t < n / 3 { 1.0 } else { -0.5 }).collect();
    let f = Signal::from_real(&step)?;
    for frame in [&haar, &db4] {
        let coeffs = analyze(&f, frame)?;
        let nonzero = coeffs.values().iter().filter(|z| z.norm() > 1e-12).count();
        println!("{} nonzero coefficients of {}", nonzero, coeffs.len());
    }

    for (p, r) in [(Exponent::ONE, 0.0), (Exponent::TWO, 0.5), (Exponent::Infinite, 1.0)] {
        let space = SpaceSpec::Besov { p, r };
        let norm = coorbit_norm(&f, &haar, p, &space.weight())?;
        println!("B^{r}_{{{p},{p}}} norm: {norm:.6}  (weight {:?})", space.weight());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> coorbit::Result<()> {
    run_example()
}

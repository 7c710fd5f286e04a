//! A Gabor system on a subsampled lattice is a frame but not a tight one;
//! the canonical dual window restores perfect reconstruction.

use coorbit::prelude::*;

pub fn run_example() -> coorbit::Result<()> {
    let n = 16;
    let window = Signal::from_real(&[1.0, 0.8, 0.5, 0.2, 0.05, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.05, 0.2, 0.5, 0.8])?;
    let frame = FrameSpec::gabor(window, TfLattice::new(n, 2, 1)?)?;
    let dual = dual_frame(&frame)?;
    println!(
        "{} atoms, frame bounds [{:.4}, {:.4}]",
        frame.len(),
        dual.lower_frame_bound,
        dual.upper_frame_bound
    );
    match normalize_frame(&frame) {
        Err(e) => println!("normalization refused: {e}"),
        Ok(_) => println!("unexpectedly tight"),
    }

    let gamma = dual_window(&frame)?;
    println!("dual window: {:?}", gamma.values().iter().map(|z| (z.re * 1e4).round() / 1e4).collect::<Vec<_>>());

    let f = coorbit::random::signal(n, 7);
    let d = atomic_decompose(&f, &frame, &Weight::Constant)?;
    println!("reconstruction from dual coefficients: {:.2e}", d.reconstruct()?.sub(&f)?.norm());
    Ok(())
}

#[allow(dead_code)]
fn main() -> coorbit::Result<()> {
    run_example()
}

use coorbit::prelude::*;
use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;

fn gabor(n: usize) -> FrameSpec {
    FrameSpec::parseval_gabor(periodized_gaussian(n).unwrap()).unwrap()
}

fn frame(kind: u8, n: usize) -> FrameSpec {
    if kind == 0 {
        gabor(n)
    } else {
        FrameSpec::haar(n).unwrap()
    }
}

fn weight_for(frame: &FrameSpec, s: f64) -> Weight {
    match frame.lattice() {
        Lattice::Tf(_) => Weight::PolynomialTf(s),
        Lattice::Affine(_) => Weight::Dyadic(s),
    }
}

fn exponent(i: u8) -> Exponent {
    [Exponent::ONE, Exponent::TWO, Exponent::Finite(3.0), Exponent::Infinite][i as usize % 4]
}

fn dims() -> impl Strategy<Value = usize> {
    prop_oneof![Just(4usize), Just(8usize)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn parseval_energy_and_inversion(kind in 0u8..2, n in dims(), seed in any::<u64>()) {
        let fr = frame(kind, n);
        let f = coorbit::random::signal(n, seed);
        let v = analyze(&f, &fr).unwrap();
        prop_assert!((v.l2_norm() - f.norm()).abs() <= 1e-10 * f.norm());
        let back = synthesize(&v, &fr).unwrap();
        prop_assert!(back.sub(&f).unwrap().norm() <= 1e-10 * f.norm());
        let fast = analyze_fast(&f, &fr).unwrap();
        prop_assert!(fast.max_abs_diff(&v).unwrap() <= 1e-12 * f.norm());
    }

    #[test]
    fn tensor_transform_is_linear_and_invertible(k1 in 0u8..2, k2 in 0u8..2, seed in any::<u64>(), c in -3.0f64..3.0) {
        let (f1, f2) = (frame(k1, 4), frame(k2, 8));
        let a = coorbit::random::operator(8, 4, seed);
        let b = coorbit::random::operator(8, 4, seed ^ 0x55);
        let combo = OperatorMatrix::new(a.entries() + b.entries() * Complex64::new(c, 0.0)).unwrap();
        let va = tensor_analysis(&a, &f1, &f2).unwrap();
        let vb = tensor_analysis(&b, &f1, &f2).unwrap();
        let vc = tensor_analysis(&combo, &f1, &f2).unwrap();
        let expected = CoeffField2D::new(va.values() + vb.values() * Complex64::new(c, 0.0), f1.lattice(), f2.lattice()).unwrap();
        prop_assert!(vc.max_abs_diff(&expected).unwrap() <= 1e-12 * (1.0 + c.abs()) * 8.0);
        let back = tensor_synthesis(&va, &f1, &f2).unwrap();
        prop_assert!(back.max_abs_diff(&a).unwrap() <= 1e-10);
    }

    #[test]
    fn factorization_reproduces_operator(k1 in 0u8..2, k2 in 0u8..2, seed in any::<u64>()) {
        let (f1, f2) = (frame(k1, 8), frame(k2, 4));
        let a = coorbit::random::operator(4, 8, seed);
        let x = coorbit::random::signal(8, seed.wrapping_add(1));
        let k = galerkin_kernel(&a, &f1, &f2).unwrap();
        let via = apply_via_factorization(&k, &x, &f1, &f2).unwrap();
        let direct = a.apply(&x).unwrap();
        prop_assert!(via.sub(&direct).unwrap().norm() <= 1e-9 * direct.norm().max(1e-300));
    }

    #[test]
    fn schur_norms_match_oracles(rows in 1usize..12, cols in 1usize..12, p in 0u8..4, s1 in -2i8..=2, s2 in -2i8..=2, seed in any::<u64>()) {
        let l1 = Lattice::Affine(AffineLattice::standard(16).unwrap());
        let l2 = Lattice::Tf(TfLattice::full(3).unwrap());
        // random sub-blocks are embedded into full lattices, the rest stays zero
        let mut rng = coorbit::random::rng(seed);
        let mut values = DMatrix::zeros(l1.len(), l2.len());
        for i in 0..rows.min(l1.len()) {
            for j in 0..cols.min(l2.len()) {
                values[(i, j)] = coorbit::random::complex(&mut rng);
            }
        }
        let k = CoeffField2D::new(values, l1, l2).unwrap();
        let (m1, m2) = (Weight::Dyadic(s1 as f64), Weight::PolynomialTf(s2 as f64));
        let p = exponent(p);
        let a = schur_norm_1_to_p(&k, p, &m1, &m2).unwrap();
        let b = opnorm_oracle_1_to_p(&k, p, &m1, &m2).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * b);
        let a = schur_norm_p_to_inf(&k, p, &m1, &m2).unwrap();
        let b = opnorm_oracle_p_to_inf(&k, p, &m1, &m2).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * b);
    }

    #[test]
    fn schur_norm_is_monotone_in_target_weight(p in 0u8..4, s in 0.0f64..2.0, ds in 0.0f64..1.0, seed in any::<u64>()) {
        let lat = Lattice::Tf(TfLattice::full(4).unwrap());
        let mut rng = coorbit::random::rng(seed);
        let k = CoeffField2D::new(DMatrix::from_fn(16, 16, |_, _| coorbit::random::complex(&mut rng)), lat, lat).unwrap();
        let m1 = Weight::Constant;
        let p = exponent(p);
        let low = schur_norm_1_to_p(&k, p, &m1, &Weight::PolynomialTf(s)).unwrap();
        let high = schur_norm_1_to_p(&k, p, &m1, &Weight::PolynomialTf(s + ds)).unwrap();
        prop_assert!(low <= high * (1.0 + 1e-12));
    }

    #[test]
    fn projective_bound_is_sandwiched(k1 in 0u8..2, k2 in 0u8..2, s in 0.0f64..1.5, seed in any::<u64>()) {
        let (f1, f2) = (frame(k1, 4), frame(k2, 4));
        let (w1, w2) = (weight_for(&f1, s), weight_for(&f2, s / 2.0));
        let k = coorbit::random::operator(4, 4, seed);
        let b = projective_tensor_bound(&k, &f1, &f2, &w1, &w2).unwrap();
        prop_assert!(b.lower <= b.upper * (1.0 + 1e-10));
        prop_assert!(b.upper <= b.upper_constant * b.lower * (1.0 + 1e-10));
        prop_assert!(b.holds(1e-10));
    }

    #[test]
    fn atomic_decomposition_reconstructs(kind in 0u8..2, s in -1.0f64..2.0, seed in any::<u64>()) {
        let fr = frame(kind, 8);
        let w = weight_for(&fr, s);
        let f = coorbit::random::signal(8, seed);
        let d = atomic_decompose(&f, &fr, &w).unwrap();
        prop_assert!(d.reconstruct().unwrap().sub(&f).unwrap().norm() <= 1e-9 * f.norm());
        let co = coorbit_norm(&f, &fr, Exponent::ONE, &w).unwrap();
        let c = d.equivalence_constant * (1.0 + 1e-12);
        prop_assert!(d.l1_weighted_mass <= c * co && co <= c * d.l1_weighted_mass);
    }

    #[test]
    fn certified_reports_are_consistent(p in 0u8..4, s1 in -1.0f64..1.0, s2 in -1.0f64..1.0, seed in any::<u64>()) {
        let (f1, f2) = (gabor(4), FrameSpec::haar(4).unwrap());
        let a = coorbit::random::operator(4, 4, seed);
        for direction in [CertDirection::OneToP, CertDirection::PToInf, CertDirection::AllP] {
            let spec = CertificationSpec::new(direction, exponent(p), Weight::PolynomialTf(s1), Weight::Dyadic(s2), f1.clone(), f2.clone());
            let r = certify(&a, &spec).unwrap();
            prop_assert!(r.consistent());
            if let Some(s) = r.sandwich {
                prop_assert!(s.holds());
            }
        }
    }

    #[test]
    fn matrix_file_round_trip_is_exact(rows in 1usize..6, cols in 1usize..6, seed in any::<u64>()) {
        let mut rng = coorbit::random::rng(seed);
        let m = DMatrix::from_fn(rows, cols, |_, _| coorbit::random::complex(&mut rng) * 1e-3f64.powi((seed % 7) as i32));
        let back = coorbit::io::parse_matrix(&coorbit::io::format_matrix(&m)).unwrap();
        prop_assert_eq!(back, m);
    }
}

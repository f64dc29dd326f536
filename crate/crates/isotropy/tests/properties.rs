use proptest::prelude::*;

use isotropy::engine::dimension::{centralizer_dimension, parameter_count};
use isotropy::engine::model::SampleParams;
use isotropy::engine::{build_centralizer, cayley_automorphism, sampling, solve_structured_congruence};
use isotropy::exact::inverse;
use isotropy::oracle::{automorphism_residual, commutator_residual};
use isotropy::{ExactMatrix, GaussianRational as S, ShapeSpec};

fn scalar() -> impl Strategy<Value = S> {
    (-6i64..7, 1i64..5, -6i64..7, 1i64..5).prop_map(|(a, b, c, d)| S::complex(a, b, c, d))
}

fn shape() -> impl Strategy<Value = ShapeSpec> {
    (1u8..=2, 1u32..16, prop::collection::vec(1usize..=2, 3), any::<bool>()).prop_filter_map(
        "n ≤ 10",
        |(c, mask, ms, plus)| {
            let alpha: Vec<usize> = (1..=4).rev().filter(|k| mask & (1 << (k - 1)) != 0).take(3).collect();
            let m = ms[..alpha.len()].to_vec();
            let s = ShapeSpec::nilpotent(c, &alpha, &m, if plus { 1 } else { -1 });
            (s.n() <= 10).then_some(s)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalars_form_a_field(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv()).is_one());
        }
    }

    #[test]
    fn inverse_is_two_sided(seed in any::<u64>(), n in 1usize..6) {
        let mut g = sampling::rng(seed);
        let m = sampling::nonsingular(&mut g, n);
        let mi = inverse(&m).unwrap();
        prop_assert_eq!(&m * &mi, ExactMatrix::identity(n));
        prop_assert_eq!(&mi * &m, ExactMatrix::identity(n));
    }

    #[test]
    fn cayley_preserves_the_form(seed in any::<u64>(), n in 1usize..4, skew in any::<bool>()) {
        let mut g = sampling::rng(seed);
        let size = if skew { 2 * n } else { n };
        let b = sampling::nonsingular_parity(&mut g, size, skew as i64);
        // W with W^T B + B W = 0 is B^{-1} times a matrix of the opposite parity.
        let w = &inverse(&b).unwrap() * &sampling::parity_matrix(&mut g, size, 1 - skew as i64);
        if let Ok(q) = cayley_automorphism(&b, &w) {
            prop_assert_eq!(&(&q.transpose() * &b) * &q, b);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn samples_lie_in_the_centralizer(s in shape(), seed in any::<u64>()) {
        let model = build_centralizer(&s).unwrap();
        let b = &model.bundle;
        for smp in model.samples(seed, 2).unwrap() {
            prop_assert!(automorphism_residual(&smp.q, &b.h).unwrap().zero);
            prop_assert!(commutator_residual(&smp.q, &b.a).unwrap().zero);
            prop_assert!(commutator_residual(&smp.q, b.r.as_ref().unwrap()).unwrap().zero);
        }
    }

    #[test]
    fn solver_output_solves_the_congruence(s in shape(), seed in any::<u64>()) {
        let model = build_centralizer(&s).unwrap();
        let forms = model.forms.as_ref().unwrap();
        let mut g = sampling::rng(seed);
        let SampleParams::Nilpotent { params } = model.sample_params(&mut g).unwrap() else {
            unreachable!()
        };
        let x = solve_structured_congruence(forms, &params).unwrap();
        prop_assert!(forms.residual(&x).is_zero());
    }

    #[test]
    fn free_parameters_count_the_dimension(s in shape()) {
        prop_assert_eq!(parameter_count(s.c, &s.alpha, &s.mu()), centralizer_dimension(&s).unwrap());
    }
}

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vertexkit::algebra::{rat, Monomial, Point, PointSampler, Polynomial, VarId};
use vertexkit::lattice::{GridDims, Model, Signature};
use vertexkit::partition::{partition_at, Engine};
use vertexkit::schur::{factorial_schur_alternant, PartitionShape, SignConvention};
use vertexkit::switchop::{base_case, identity_residual_at, word_for_signatures, OperatorSymbol, OperatorWord, SwitchContext, WordForm};
use vertexkit::verify::random_boundary_model;
use vertexkit::weights::{ff_scheme, generic_guards, Orientation};

fn var() -> impl Strategy<Value = VarId> {
    (0..4usize, 1..3u32).prop_map(|(f, i)| match f {
        0 => VarId::x(i),
        1 => VarId::y(i),
        2 => VarId::a(i),
        _ => VarId::b(i),
    })
}

fn poly() -> impl Strategy<Value = Polynomial> {
    let term = (-5i64..=5, 1i64..=3, prop::collection::vec((var(), 1..3u32), 0..3));
    prop::collection::vec(term, 0..5).prop_map(|ts| {
        Polynomial::from_terms(ts.into_iter().map(|(n, d, vs)| (Monomial::from_pairs(vs), rat(n, d))))
    })
}

fn point(seed: u64) -> Point {
    PointSampler::new(seed).sample(2, 2, &[])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division_undoes_multiplication(p in poly(), q in poly()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).divide_exact(&q).unwrap(), p);
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), seed in any::<u64>()) {
        let pt = point(seed);
        let (vp, vq) = (p.evaluate(&pt).unwrap(), q.evaluate(&pt).unwrap());
        prop_assert_eq!((&p * &q).evaluate(&pt).unwrap(), &vp * &vq);
        prop_assert_eq!((&p + &q).evaluate(&pt).unwrap(), vp + vq);
    }

    #[test]
    fn text_round_trip(p in poly()) {
        let back: Polynomial = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn row_swap_commutes_with_evaluation(p in poly(), seed in any::<u64>()) {
        let pt = point(seed);
        prop_assert_eq!(p.swap_row_vars(1).evaluate(&pt).unwrap(), p.evaluate(&pt.swap_rows(1)).unwrap());
        prop_assert_eq!(p.swap_col_vars(1).evaluate(&pt).unwrap(), p.evaluate(&pt.swap_cols(1)).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn engines_agree_on_random_models(seed in any::<u64>(), n in 1..=3usize, m in 1..=4usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Some(model) = random_boundary_model(&mut rng, GridDims::new(n, m).unwrap(), &[], 50) else {
            return Ok(());
        };
        let ff = ff_scheme();
        let pt = PointSampler::new(seed).sample(n as u32, m as u32, &[]);
        let dp = partition_at(&model, &ff, &pt, Engine::Dp).unwrap();
        let brute = partition_at(&model, &ff, &pt, Engine::Brute).unwrap();
        prop_assert_eq!(dp.value, brute.value);
        prop_assert_eq!(dp.state_count, brute.state_count);
    }

    #[test]
    fn model_json_round_trip(seed in any::<u64>(), n in 1..=4usize, m in 1..=4usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(model) = random_boundary_model(&mut rng, GridDims::new(n, m).unwrap(), &[], 50) {
            prop_assert_eq!(Model::from_json(&model.to_json()).unwrap(), model);
        }
    }

    #[test]
    fn switch_operators_invert(seed in any::<u64>(), k in 1..=2u32, vertical in any::<bool>()) {
        let ff = ff_scheme();
        let dims = GridDims::new(3, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Some(model) = random_boundary_model(&mut rng, dims, &[], 50) else { return Ok(()) };
        let pt = PointSampler::new(seed).sample(3, 3, &generic_guards(&ff, 3, 3));
        let orientation = if vertical { Orientation::Vertical } else { Orientation::Horizontal };
        let d = OperatorSymbol::forward(orientation, k);
        let f = |p: &Point| Ok(partition_at(&model, &ff, p, Engine::Dp)?.value);
        let mut ctx = SwitchContext::new(&ff);
        for word in [OperatorWord(vec![d, d.inverted()]), OperatorWord(vec![d.inverted(), d])] {
            let res = identity_residual_at(&mut ctx, &word, &f, &pt).unwrap();
            prop_assert!(num_traits::Zero::is_zero(&res), "{} leaves residual {}", word, res);
        }
    }

    #[test]
    fn words_transport_the_base_case(n in 1..=5usize, m in 1..=5usize, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = rand::Rng::gen_range(&mut rng, 0..=n.min(m));
        let pick = |rng: &mut ChaCha8Rng, max: usize| {
            let set = rand::seq::index::sample(rng, max, d).into_iter().map(|i| i as u32 + 1).collect();
            Signature::from_set(&set).unwrap()
        };
        let (alpha, beta) = (pick(&mut rng, n), pick(&mut rng, m));
        let dims = GridDims::new(n, m).unwrap();
        let (a0, b0) = base_case(dims, d);
        let word = word_for_signatures(&alpha, &beta, dims, WordForm::Transport).unwrap();
        prop_assert_eq!(word.transport(&a0, &b0), (alpha, beta));
    }

    #[test]
    fn alternant_is_symmetric_in_x(parts in prop::collection::vec(0..3u32, 1..3), minus in any::<bool>()) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = 3;
        let shape = PartitionShape::new(parts).unwrap();
        let sign = if minus { SignConvention::Minus } else { SignConvention::Plus };
        let s = factorial_schur_alternant(&shape, n, sign).unwrap();
        prop_assert_eq!(s.swap_row_vars(1), s.clone());
        prop_assert_eq!(s.swap_row_vars(2), s);
    }
}

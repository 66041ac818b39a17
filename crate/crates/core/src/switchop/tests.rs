use super::*;
use crate::algebra::{PointSampler, Polynomial};
use crate::lattice::{BoundarySpec, GridDims, Model, Signature};
use crate::partition::{partition_at, partition_symbolic, Engine};
use crate::weights::{ff_scheme, generic_guards, Orientation};

fn sig(p: &[u32]) -> Signature {
    Signature::new(p.to_vec()).unwrap()
}

#[test]
fn symbolic_reduction_matches_direct_sum_3x3() {
    let s = ff_scheme();
    let dims = GridDims::new(3, 3).unwrap();
    for d in 1..=3 {
        for alpha in Signature::all(d, 3) {
            for beta in Signature::all(d, 3) {
                let direct = partition_symbolic(&Model::from_signatures(dims, &alpha, &beta).unwrap(), &s, Engine::Dp)
                    .unwrap()
                    .value;
                let reduced = reduce_to_base_symbolic(&alpha, &beta, dims, &s, Engine::Dp).unwrap();
                assert_eq!(direct, reduced, "alpha {alpha} beta {beta}");
            }
        }
    }
}

#[test]
fn point_reduction_matches_direct_sum_4x5() {
    let s = ff_scheme();
    let dims = GridDims::new(4, 5).unwrap();
    let guards = generic_guards(&s, 4, 5);
    let mut sampler = PointSampler::new(11);
    for (alpha, beta) in [
        (sig(&[4, 2]), sig(&[3, 1])),
        (sig(&[3, 2, 1]), sig(&[5, 4, 2])),
        (sig(&[4]), sig(&[1])),
        (sig(&[4, 3, 2, 1]), sig(&[4, 3, 2, 1])),
    ] {
        let pt = sampler.sample(4, 5, &guards);
        let model = Model::from_signatures(dims, &alpha, &beta).unwrap();
        let direct = partition_at(&model, &s, &pt, Engine::Dp).unwrap().value;
        let reduced = reduce_to_base_at(&alpha, &beta, dims, &s, &pt, Engine::Dp).unwrap();
        assert_eq!(direct, reduced, "alpha {alpha} beta {beta}");
    }
}

#[test]
fn exchange_relations_hold_in_every_case() {
    let s = ff_scheme();
    let dims = GridDims::new(3, 3).unwrap();
    let guards = generic_guards(&s, 3, 3);
    let mut sampler = PointSampler::new(3);
    let mut ctx = SwitchContext::new(&s);
    let mut seen = Vec::new();
    for d in 0..=3 {
        for alpha in Signature::all(d, 3) {
            for beta in Signature::all(d, 3) {
                let model = Model::from_signatures(dims, &alpha, &beta).unwrap();
                for o in [Orientation::Horizontal, Orientation::Vertical] {
                    for k in 1..=2 {
                        let pt = sampler.sample(3, 3, &guards);
                        let r = exchange_check_at(&mut ctx, &model, o, k, &pt, Engine::Dp).unwrap();
                        assert!(r.holds(), "{o} {k} alpha {alpha} beta {beta}: {:?}", r.case);
                        seen.push((o, r.case));
                    }
                }
            }
        }
    }
    for o in [Orientation::Horizontal, Orientation::Vertical] {
        for c in [ExchangeCase::BothIn, ExchangeCase::BothOut, ExchangeCase::LowerOnly, ExchangeCase::UpperOnly] {
            assert!(seen.contains(&(o, c)), "{o} {c:?} never exercised");
        }
    }
}

#[test]
fn exchange_needs_empty_opposite_boundary() {
    let s = ff_scheme();
    let mut ctx = SwitchContext::new(&s);
    let m = Model::new(
        GridDims::new(2, 2).unwrap(),
        BoundarySpec {
            left: [2].into(),
            top: [1].into(),
            right: [1].into(),
            bottom: [2].into(),
        },
    )
    .unwrap();
    let pt = PointSampler::new(1).sample(2, 2, &generic_guards(&s, 2, 2));
    assert!(exchange_check_at(&mut ctx, &m, Orientation::Horizontal, 1, &pt, Engine::Dp).is_err());
    assert!(exchange_check_at(&mut ctx, &m, Orientation::Vertical, 1, &pt, Engine::Dp).is_err());
    assert!(exchange_check_at(&mut ctx, &Model::dwbc(2).unwrap(), Orientation::Vertical, 2, &pt, Engine::Dp).is_err());
}

#[test]
fn inverse_operators_undo_forward_ones() {
    let s = ff_scheme();
    let model = Model::new(
        GridDims::new(3, 3).unwrap(),
        BoundarySpec {
            left: [2].into(),
            top: [1, 3].into(),
            right: [1, 3].into(),
            bottom: [2].into(),
        },
    )
    .unwrap();
    let f = |p: &crate::algebra::Point| Ok(partition_at(&model, &s, p, Engine::Dp)?.value);
    let guards = generic_guards(&s, 3, 3);
    let mut sampler = PointSampler::new(21);
    let mut ctx = SwitchContext::new(&s);
    for o in [Orientation::Horizontal, Orientation::Vertical] {
        for k in 1..=2 {
            let fwd = OperatorSymbol::forward(o, k);
            for word in [OperatorWord(vec![fwd.inverted(), fwd]), OperatorWord(vec![fwd, fwd.inverted()])] {
                let pt = sampler.sample(3, 3, &guards);
                let r = identity_residual_at(&mut ctx, &word, &f, &pt).unwrap();
                assert!(num_traits::Zero::is_zero(&r), "{word}");
            }
        }
    }
}

#[test]
fn distant_operators_commute() {
    let s = ff_scheme();
    let model = Model::from_signatures(GridDims::new(4, 4).unwrap(), &sig(&[3, 1]), &sig(&[4, 2])).unwrap();
    let f = |p: &crate::algebra::Point| Ok(partition_at(&model, &s, p, Engine::Dp)?.value);
    let pt = PointSampler::new(8).sample(4, 4, &generic_guards(&s, 4, 4));
    let mut ctx = SwitchContext::new(&s);
    for o in [Orientation::Horizontal, Orientation::Vertical] {
        let (p, q) = (OperatorSymbol::forward(o, 1), OperatorSymbol::forward(o, 3));
        let pq = ctx.apply_word_at(&OperatorWord(vec![p, q]), &f, &pt).unwrap();
        let qp = ctx.apply_word_at(&OperatorWord(vec![q, p]), &f, &pt).unwrap();
        assert_eq!(pq, qp);
    }
}

#[test]
fn symbolic_operator_is_a_divided_difference() {
    let s = ff_scheme();
    let mut ctx = SwitchContext::new(&s);
    // on a constant the operator reduces to (a1 - c1) / b2
    let sym = OperatorSymbol::forward(Orientation::Horizontal, 1);
    let one = ctx.apply_symbolic(sym, &Polynomial::one()).unwrap();
    let cross = ctx.cross_symbolic(Orientation::Horizontal, (2, 1)).unwrap();
    use crate::lattice::VertexKind::*;
    let expect = cross.get(A1).sub(cross.get(C1)).div(cross.get(B2)).unwrap();
    assert_eq!(crate::algebra::RationalFunction::from_poly(one), expect);
}

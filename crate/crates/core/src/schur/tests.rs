use super::*;
use crate::algebra::{PointSampler, Polynomial, VarId};
use crate::lattice::{BoundarySpec, GridDims, Model, Signature};
use crate::partition::Engine;
use crate::weights::{ff_scheme, generic_guards};

fn p(s: &str) -> Polynomial {
    s.parse().unwrap()
}

fn shape(parts: &[u32]) -> PartitionShape {
    PartitionShape::new(parts.to_vec()).unwrap()
}

fn sig(parts: &[u32]) -> Signature {
    Signature::new(parts.to_vec()).unwrap()
}

#[test]
fn shape_trims_zeros_and_rejects_increase() {
    assert_eq!(shape(&[2, 1, 0, 0]).parts(), &[2, 1]);
    assert!(PartitionShape::new(vec![1, 2]).is_err());
    assert_eq!(shape(&[3, 1]).to_string(), "(3,1)");
}

#[test]
fn small_alternants() {
    assert_eq!(factorial_schur_alternant(&PartitionShape::empty(), 3, SignConvention::Plus).unwrap(), Polynomial::one());
    assert_eq!(factorial_schur_alternant(&shape(&[1]), 1, SignConvention::Plus).unwrap(), p("x1 + a1"));
    assert_eq!(factorial_schur_alternant(&shape(&[1]), 1, SignConvention::Minus).unwrap(), p("x1 - a1"));
    // (x1+a1)(x1+a2) - ... worked by hand for lambda = (1), n = 2
    assert_eq!(factorial_schur_alternant(&shape(&[1]), 2, SignConvention::Plus).unwrap(), p("x1 + x2 + a1 + a2"));
    assert!(factorial_schur_alternant(&shape(&[1, 1]), 1, SignConvention::Plus).is_err());
}

#[test]
fn alternant_is_symmetric_and_classical_at_zero() {
    let mut zero = crate::algebra::Point::new();
    for t in 1..=6 {
        zero.set(VarId::a(t), crate::algebra::rat(0, 1));
    }
    for (lambda, n) in [(vec![1], 2), (vec![2, 1], 3), (vec![3, 1], 3), (vec![2, 2], 2)] {
        for sign in [SignConvention::Plus, SignConvention::Minus] {
            let s = factorial_schur_alternant(&shape(&lambda), n, sign).unwrap();
            for i in 1..n as u32 {
                assert_eq!(s.swap_row_vars(i), s, "{lambda:?} swap {i}");
            }
            assert_eq!(s.specialize(&zero), classical_schur(&shape(&lambda), n).unwrap());
        }
    }
}

#[test]
fn classical_schur_against_monomial_expansion() {
    let s21 = p("x1^2*x2 + x1^2*x3 + x2^2*x1 + x2^2*x3 + x3^2*x1 + x3^2*x2 + 2*x1*x2*x3");
    assert_eq!(classical_schur(&shape(&[2, 1]), 3).unwrap(), s21);
    assert_eq!(classical_schur(&shape(&[2]), 2).unwrap(), p("x1^2 + x1*x2 + x2^2"));
}

#[test]
fn printed_dwbc_product() {
    assert_eq!(dwbc_product_candidate(1), Polynomial::one());
    assert_eq!(dwbc_product_candidate(2), p("x1 - y2").mul(&p("1 - a1*b2")));
}

#[test]
fn dwbc_factorizations_are_complete() {
    let s = ff_scheme();
    let (z1, r1) = factor_dwbc(1, &s, Engine::Dp).unwrap();
    assert_eq!(z1, p("1 - a1*b1"));
    assert!(r1.is_complete());
    let (_, r2) = factor_dwbc(2, &s, Engine::Dp).unwrap();
    assert!(r2.is_complete());
    let found: Vec<(String, u32)> = r2.factors.iter().map(|(f, k)| (f.to_string(), *k)).collect();
    let mut expect: Vec<(String, u32)> = ["x2 + y1", "1 - a1*b1", "1 - a2*b1", "1 - a2*b2"]
        .iter()
        .map(|f| (p(f).to_string(), 1))
        .collect();
    expect.sort();
    let mut sorted = found.clone();
    sorted.sort();
    assert_eq!(sorted, expect);
    let (z3, r3) = factor_dwbc(3, &s, Engine::Dp).unwrap();
    assert!(r3.is_complete(), "cofactor {}", r3.cofactor);
    let degree: u32 = r3.factors.iter().map(|(f, k)| f.degree() * k).sum();
    assert_eq!(degree, z3.degree());
}

#[test]
fn proposition_small_cases() {
    let s = ff_scheme();
    for (n, m, alpha) in [(2, 3, sig(&[3, 1])), (2, 4, sig(&[4, 2])), (2, 3, sig(&[3, 2]))] {
        let guards = generic_guards(&s, n as u32, m as u32);
        let mut sampler = PointSampler::new(4);
        for _ in 0..3 {
            let pt = sampler.sample(n as u32, m as u32, &guards);
            let c = check_proposition_at(&alpha, n, m, &s, BracketSource::Enumerated, &pt, Engine::Dp).unwrap();
            assert!(c.holds(), "{n}x{m} {alpha}");
        }
    }
}

#[test]
fn printed_bracket_differs_from_enumeration() {
    let s = ff_scheme();
    let pt = PointSampler::new(2).sample(2, 3, &generic_guards(&s, 2, 3));
    let c = check_proposition_at(&sig(&[3, 1]), 2, 3, &s, BracketSource::Printed, &pt, Engine::Dp).unwrap();
    assert!(!c.holds());
}

#[test]
fn symmetry_in_unused_columns() {
    let s = ff_scheme();
    let model = Model::new(
        GridDims::new(2, 5).unwrap(),
        BoundarySpec {
            right: [1, 2].into(),
            top: [1, 2].into(),
            ..Default::default()
        },
    )
    .unwrap();
    let mut sampler = PointSampler::new(6);
    let guards = generic_guards(&s, 2, 5);
    for j in [3, 4] {
        let r = asymptotic_symmetry_check(&model, j, &s, &sampler.sample(2, 5, &guards), Engine::Dp).unwrap();
        assert!(r.hypothesis && r.beyond_top && r.equal);
    }
    let r = asymptotic_symmetry_check(&model, 2, &s, &sampler.sample(2, 5, &guards), Engine::Dp).unwrap();
    assert!(!r.hypothesis);
    assert!(asymptotic_symmetry_check(&model, 5, &s, &sampler.sample(2, 5, &guards), Engine::Dp).is_err());
}

#[test]
fn calibration_finds_the_pinned_convention() {
    let report = calibrate_schur_specialization().unwrap();
    assert_eq!(report.found(), Some(PINNED_CONVENTION), "consistent: {:?}", report.consistent);
    assert!(pinned_assertions().unwrap().is_empty());
}

#[test]
fn base_instance_matches_with_unit_prefactor() {
    let inst = CalibrationInstance {
        rows: 2,
        cols: 3,
        alpha: vec![3, 2],
    };
    let z = specialized_z(&inst).unwrap();
    assert_eq!(convention_shape(PINNED_CONVENTION, &inst.signature(), 3), Some(PartitionShape::empty()));
    // the DWBC block keeps its c2 weights x_i at y = 0, so the prefactor is not 1
    assert_eq!(match_convention(PINNED_CONVENTION, &inst, &z).unwrap(), Some(p("x2")));
}

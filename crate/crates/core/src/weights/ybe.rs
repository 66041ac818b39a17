use num_rational::BigRational;

use super::cross::{CrossKind, CrossWeights, Orientation};
use super::scheme::WeightScheme;
use crate::algebra::linalg::{bareiss_det, nullspace, rank};
use crate::algebra::{a, b, x, y, Point, PointSampler, Polynomial, RationalFunction, Ring};
use crate::error::{Error, Result};
use crate::lattice::{classify_vertex, VertexKind};

/// How line labels are attached to the two bulk vertices in the
/// Yang-Baxter equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Wiring {
    /// Labels travel with strands through the cross, so after a horizontal
    /// cross the upper bulk vertex carries the label that entered at SW.
    #[default]
    Transport,
    /// Labels stay attached to positions on both sides of the equation.
    Positional,
}

fn bit(t: u32, k: u32) -> bool {
    t >> k & 1 == 1
}

fn vertex<R: Ring>(w: &[R; 6], l: bool, t: bool, r: bool, b: bool) -> R {
    match classify_vertex(l, t, r, b) {
        Some(k) => w[k.index()].clone(),
        None => R::zero(),
    }
}

/// Left-minus-right residuals of the Yang-Baxter equation for all 64
/// external edge assignments, by direct summation over the three internal
/// edges.
///
/// `site_p` / `site_q` are the bulk weights of the vertex carrying label `p`
/// / `q` (on the bulk line with label `k`). Horizontal externals are, in bit
/// order, the two cross inputs, the bulk line's top and bottom edges and the
/// two right-hand outputs; vertical externals are the two cross inputs, the
/// bulk line's left and right edges and the two bottom outputs.
pub fn ybe_residuals_with<R: Ring>(
    orientation: Orientation,
    wiring: Wiring,
    site_p: &[R; 6],
    site_q: &[R; 6],
    cross: &dyn Fn([bool; 4]) -> R,
) -> Vec<R> {
    // (first, second) bulk vertex weights on the left and right side
    let (left, right) = match wiring {
        Wiring::Transport => ((site_p, site_q), (site_q, site_p)),
        Wiring::Positional => ((site_q, site_p), (site_q, site_p)),
    };
    let mut out = Vec::with_capacity(64);
    for t in 0..64u32 {
        let (u1, u2, e1, e2, v1, v2) = (bit(t, 0), bit(t, 1), bit(t, 2), bit(t, 3), bit(t, 4), bit(t, 5));
        let mut lhs = R::zero();
        let mut rhs = R::zero();
        for s in 0..8u32 {
            let (i3, j3, k3) = (bit(s, 0), bit(s, 1), bit(s, 2));
            match orientation {
                Orientation::Horizontal => {
                    // cross first, then the upper and lower bulk vertices
                    let c = cross([u1, u2, i3, j3]);
                    if !c.is_zero() {
                        let up = vertex(left.0, i3, e1, v1, k3);
                        let lo = vertex(left.1, j3, k3, v2, e2);
                        lhs = lhs.plus(&c.times(&up).times(&lo));
                    }
                    let c = cross([i3, j3, v1, v2]);
                    if !c.is_zero() {
                        let up = vertex(right.0, u1, e1, i3, k3);
                        let lo = vertex(right.1, u2, k3, j3, e2);
                        rhs = rhs.plus(&up.times(&lo).times(&c));
                    }
                }
                Orientation::Vertical => {
                    // cross on top, then the left and right bulk vertices;
                    // on the left side the left vertex carries the NE label
                    let c = cross([u1, u2, i3, j3]);
                    if !c.is_zero() {
                        let lv = vertex(left.1, e1, i3, k3, v1);
                        let rv = vertex(left.0, k3, j3, e2, v2);
                        lhs = lhs.plus(&c.times(&lv).times(&rv));
                    }
                    let c = cross([i3, j3, v1, v2]);
                    if !c.is_zero() {
                        let lv = vertex(right.1, e1, u1, k3, i3);
                        let rv = vertex(right.0, k3, u2, e2, j3);
                        rhs = rhs.plus(&lv.times(&rv).times(&c));
                    }
                }
            }
        }
        out.push(lhs.minus(&rhs));
    }
    out
}

/// Bulk weights of the two vertices adjacent to the cross: for a horizontal
/// cross on rows `p, q` these sit in column `k`, for a vertical cross on
/// columns `p, q` in row `k`.
pub fn ybe_sites(
    scheme: &dyn WeightScheme,
    orientation: Orientation,
    pair: (u32, u32),
    k: u32,
) -> ([Polynomial; 6], [Polynomial; 6]) {
    let (p, q) = pair;
    match orientation {
        Orientation::Horizontal => (scheme.bulk_all(p, k), scheme.bulk_all(q, k)),
        Orientation::Vertical => (scheme.bulk_all(k, p), scheme.bulk_all(k, q)),
    }
}

/// The 64 residuals for a given cross-weight set.
pub fn ybe_residuals<R: Ring>(
    site_p: &[R; 6],
    site_q: &[R; 6],
    cross: &CrossWeights<R>,
    wiring: Wiring,
) -> Vec<R> {
    ybe_residuals_with(cross.orientation, wiring, site_p, site_q, &|ports| cross.at(ports))
}

/// The homogeneous linear system in the six unknown cross weights: row `t`
/// holds the coefficients of `w[A1..C2]` in the residual for external
/// assignment `t`.
pub fn ybe_matrix<R: Ring>(
    orientation: Orientation,
    wiring: Wiring,
    site_p: &[R; 6],
    site_q: &[R; 6],
) -> Vec<[R; 6]> {
    let columns: Vec<Vec<R>> = VertexKind::ALL
        .iter()
        .map(|&kind| {
            ybe_residuals_with(orientation, wiring, site_p, site_q, &|ports| {
                if CrossKind::classify(orientation, ports) == Some(kind) {
                    R::one()
                } else {
                    R::zero()
                }
            })
        })
        .collect();
    (0..64)
        .map(|t| [0, 1, 2, 3, 4, 5].map(|k| columns[k][t].clone()))
        .collect()
}

fn check_pair(pair: (u32, u32)) -> Result<()> {
    if pair.0 == pair.1 || pair.0 == 0 || pair.1 == 0 {
        return Err(Error::InvalidPair(pair.0, pair.1));
    }
    Ok(())
}

fn evaluate_site(site: &[Polynomial; 6], point: &Point) -> Result<[BigRational; 6]> {
    let v: Vec<BigRational> = site.iter().map(|w| w.evaluate(point)).collect::<Result<_>>()?;
    Ok(v.try_into().expect("six weights"))
}

/// Solves for the cross weights at a rational point. The nullspace of the
/// 64x6 system must be one-dimensional; the result is normalized so that
/// b2 = 1 (horizontal) or b1 = 1 (vertical).
pub fn solve_cross_point(
    scheme: &dyn WeightScheme,
    pair: (u32, u32),
    orientation: Orientation,
    k: u32,
    point: &Point,
    wiring: Wiring,
) -> Result<CrossWeights<BigRational>> {
    check_pair(pair)?;
    let (sp, sq) = ybe_sites(scheme, orientation, pair, k);
    let (sp, sq) = (evaluate_site(&sp, point)?, evaluate_site(&sq, point)?);
    let rows: Vec<Vec<BigRational>> = ybe_matrix(orientation, wiring, &sp, &sq)
        .into_iter()
        .map(|r| r.to_vec())
        .collect();
    let (rk, basis) = nullspace(&rows, 6);
    if basis.len() != 1 {
        return Err(Error::Nullspace {
            dimension: basis.len(),
            rank: rk,
            equations: 64,
        });
    }
    let w: [BigRational; 6] = basis.into_iter().next().expect("one vector").try_into().expect("six");
    CrossWeights { orientation, pair, w }.normalized()
}

/// Nullspace dimension of the Yang-Baxter system at a point.
pub fn ybe_nullity(
    scheme: &dyn WeightScheme,
    pair: (u32, u32),
    orientation: Orientation,
    k: u32,
    point: &Point,
    wiring: Wiring,
) -> Result<usize> {
    let (sp, sq) = ybe_sites(scheme, orientation, pair, k);
    let (sp, sq) = (evaluate_site(&sp, point)?, evaluate_site(&sq, point)?);
    let rows: Vec<Vec<BigRational>> = ybe_matrix(orientation, wiring, &sp, &sq)
        .into_iter()
        .map(|r| r.to_vec())
        .collect();
    Ok(6 - rank(&rows, 6))
}

/// Binomials that commonly divide cross weights for the labels `(p, q)`.
pub fn cross_factor_candidates(orientation: Orientation, (p, q): (u32, u32)) -> Vec<Polynomial> {
    let one = Polynomial::one();
    match orientation {
        Orientation::Horizontal => vec![
            &x(p) - &x(q),
            &y(p) - &y(q),
            &x(p) + &y(q),
            &x(q) + &y(p),
            &x(p) + &y(p),
            &x(q) + &y(q),
        ],
        Orientation::Vertical => vec![
            &a(p) - &a(q),
            &b(p) - &b(q),
            &one - &(&a(p) * &b(q)),
            &one - &(&a(q) * &b(p)),
            &one - &(&a(p) * &b(p)),
            &one - &(&a(q) * &b(q)),
        ],
    }
}

/// Polynomials that must not vanish at a sampled point for every bulk
/// weight and every cross on a `rows x cols` grid to be usable.
pub fn generic_guards(scheme: &dyn WeightScheme, rows: u32, cols: u32) -> Vec<Polynomial> {
    let mut guards = Vec::new();
    for i in 1..=rows {
        for j in 1..=cols {
            guards.extend(scheme.bulk_all(i, j).into_iter().filter(|w| !w.is_constant()));
        }
    }
    for p in 1..=rows {
        for q in p + 1..=rows {
            guards.extend(cross_factor_candidates(Orientation::Horizontal, (p, q)));
        }
    }
    for p in 1..=cols {
        for q in p + 1..=cols {
            guards.extend(cross_factor_candidates(Orientation::Vertical, (p, q)));
        }
    }
    guards.sort_by_cached_key(|g| g.to_string());
    guards.dedup();
    guards
}

/// Divides out every candidate factor common to all nonzero entries.
fn strip_common_factors(v: &mut [Polynomial; 6], candidates: &[Polynomial]) {
    for f in candidates {
        if f.is_constant() {
            continue;
        }
        loop {
            let quotients: Option<Vec<Polynomial>> = v
                .iter()
                .map(|e| if e.is_zero() { Some(Polynomial::zero()) } else { e.divide_exact(f).ok() })
                .collect();
            match quotients {
                Some(q) if v.iter().any(|e| !e.is_zero()) => {
                    *v = q.try_into().expect("six");
                }
                _ => break,
            }
        }
    }
}

/// Symbolic solve over the polynomial ring.
///
/// The rank is read off at a seeded random point; five independent rows
/// (sparsest first) then give the nullspace generator as signed maximal
/// minors, computed fraction-free. The generator is checked against all 64
/// equations symbolically, stripped of common binomial factors and
/// normalized like the point solver.
pub fn solve_cross_symbolic(
    scheme: &dyn WeightScheme,
    pair: (u32, u32),
    orientation: Orientation,
    k: u32,
    wiring: Wiring,
) -> Result<CrossWeights<RationalFunction>> {
    check_pair(pair)?;
    let (sp, sq) = ybe_sites(scheme, orientation, pair, k);
    let mut rows: Vec<[Polynomial; 6]> = ybe_matrix(orientation, wiring, &sp, &sq)
        .into_iter()
        .filter(|r| r.iter().any(|e| !e.is_zero()))
        .collect();
    rows.sort_by_key(|r| r.iter().map(Polynomial::num_terms).sum::<usize>());

    let mut guards: Vec<Polynomial> = sp.iter().chain(sq.iter()).filter(|w| !w.is_constant()).cloned().collect();
    guards.extend(cross_factor_candidates(orientation, pair));
    let labels = pair.0.max(pair.1).max(k);
    let point = PointSampler::new(0x5eed).sample(labels, labels, &guards);
    let numeric: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|e| e.evaluate(&point)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let full_rank = rank(&numeric, 6);
    if full_rank != 5 {
        return Err(Error::Nullspace {
            dimension: 6 - full_rank,
            rank: full_rank,
            equations: 64,
        });
    }
    let mut chosen: Vec<usize> = Vec::new();
    for idx in 0..rows.len() {
        let mut trial: Vec<Vec<BigRational>> = chosen.iter().map(|&c| numeric[c].clone()).collect();
        trial.push(numeric[idx].clone());
        if rank(&trial, 6) == chosen.len() + 1 {
            chosen.push(idx);
            if chosen.len() == 5 {
                break;
            }
        }
    }

    let mut v: Vec<Polynomial> = Vec::with_capacity(6);
    for col in 0..6 {
        let minor: Vec<Vec<Polynomial>> = chosen
            .iter()
            .map(|&r| (0..6).filter(|&c| c != col).map(|c| rows[r][c].clone()).collect())
            .collect();
        let d = bareiss_det(minor)?;
        v.push(if col % 2 == 0 { d } else { d.neg() });
    }
    let mut v: [Polynomial; 6] = v.try_into().expect("six");
    for r in &rows {
        let dot = r.iter().zip(v.iter()).fold(Polynomial::zero(), |acc, (c, w)| acc.add(&c.mul(w)));
        if !dot.is_zero() {
            return Err(Error::Invalid("symbolic cross-weight generator fails an equation".into()));
        }
    }
    let mut candidates: Vec<Polynomial> = sp.iter().chain(sq.iter()).cloned().collect();
    candidates.extend(cross_factor_candidates(orientation, pair));
    strip_common_factors(&mut v, &candidates);
    let w = v.map(RationalFunction::from_poly);
    CrossWeights { orientation, pair, w }.normalized()
}


#[cfg(test)]
mod solved {
    use super::*;
    use crate::algebra::Field;
    use crate::weights::ff_scheme;

    fn rf(s: &str) -> RationalFunction {
        RationalFunction::from_poly(s.parse().unwrap())
    }

    #[test]
    fn symbolic_horizontal() {
        let c = solve_cross_symbolic(&ff_scheme(), (1, 2), Orientation::Horizontal, 1, Wiring::Transport).unwrap();
        let b2 = rf("x1 - x2");
        let expect = ["x1 + y2", "x2 + y1", "y2 - y1", "x1 - x2", "x2 + y2", "x1 + y1"].map(|s| rf(s).over(&b2).unwrap());
        assert_eq!(c.w, expect);
    }

    #[test]
    fn symbolic_vertical() {
        let c = solve_cross_symbolic(&ff_scheme(), (1, 2), Orientation::Vertical, 1, Wiring::Transport).unwrap();
        let b1 = rf("b2 - b1");
        let expect = ["1 - a1*b2", "1 - a2*b1", "b2 - b1", "a1 - a2", "1 - a1*b1", "1 - a2*b2"].map(|s| rf(s).over(&b1).unwrap());
        assert_eq!(c.w, expect);
    }

    #[test]
    fn point_matches_symbolic() {
        let s = ff_scheme();
        let mut sampler = PointSampler::new(11);
        for o in [Orientation::Horizontal, Orientation::Vertical] {
            let sym = solve_cross_symbolic(&s, (2, 1), o, 3, Wiring::Transport).unwrap();
            let mut g = cross_factor_candidates(o, (2, 1));
            g.extend(s.bulk_all(2, 3).into_iter().chain(s.bulk_all(1, 3)).chain(s.bulk_all(3, 2)).chain(s.bulk_all(3, 1)));
            let pt = sampler.sample(3, 3, &g);
            let num = solve_cross_point(&s, (2, 1), o, 3, &pt, Wiring::Transport).unwrap();
            let ev: Vec<BigRational> = sym.w.iter().map(|w| w.evaluate(&pt).unwrap()).collect();
            assert_eq!(ev, num.w.to_vec());
        }
    }
}

use num_rational::BigRational;
use num_traits::One;

use super::dwbc::dwbc_product_candidate;
use crate::algebra::{b, x, Point, Polynomial};
use crate::error::{Error, Result};
use crate::lattice::{BoundarySpec, GridDims, Model, Signature, VertexKind};
use crate::partition::{partition_at, partition_with, Engine, Labels, SiteTable};
use crate::switchop::{vertical_transport_word, SwitchContext};
use crate::weights::WeightScheme;

/// Where the DWBC factor inside the bracket comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BracketSource {
    /// The enumerated partition function of the `n x n` block.
    #[default]
    Enumerated,
    /// The printed product formula, with the printed empty-site factor.
    Printed,
}

/// The model the bracket and operators should reproduce: all rows exit
/// on the right, entries on top at `alpha`.
pub fn z_alpha_delta_model(alpha: &Signature, n: usize, m: usize) -> Result<Model> {
    if alpha.len() != n {
        return Err(Error::Invalid(format!("{alpha} must have exactly {n} parts")));
    }
    if m < n {
        return Err(Error::Invalid(format!("need at least as many columns as rows, got {n}x{m}")));
    }
    let boundary = BoundarySpec {
        right: (1..=n as u32).collect(),
        top: alpha.to_set(),
        ..Default::default()
    };
    Model::new(GridDims::new(n, m)?, boundary)
}

/// The bracketed product at a point.
///
/// Enumerated: a1 over the empty columns `1..m-n` times the DWBC block
/// placed on columns `m-n+1..m`. Printed: `prod_i prod_(j=n+1..alpha_1) (1 - b_j x_i)`
/// times the printed product formula.
pub fn z_alpha_delta_bracket_at(
    alpha: &Signature,
    n: usize,
    m: usize,
    scheme: &dyn WeightScheme,
    source: BracketSource,
    point: &Point,
    engine: Engine,
) -> Result<BigRational> {
    match source {
        BracketSource::Enumerated => {
            let mut empty = BigRational::one();
            for i in 1..=n as u32 {
                for j in 1..=(m - n) as u32 {
                    empty *= scheme.bulk(VertexKind::A1, i, j).evaluate(point)?;
                }
            }
            let block = Model::dwbc(n)?;
            let labels = Labels {
                rows: (1..=n as u32).collect(),
                cols: ((m - n + 1) as u32..=m as u32).collect(),
            };
            let table = SiteTable::at_point(scheme, block.dims, &labels, point)?;
            Ok(empty * partition_with(&block, &table, engine).value)
        }
        BracketSource::Printed => {
            let one = Polynomial::one();
            let top = alpha.largest().unwrap_or(0);
            let mut factors = vec![dwbc_product_candidate(n)];
            for i in 1..=n as u32 {
                for j in n as u32 + 1..=top {
                    factors.push(&one - &(&b(j) * &x(i)));
                }
            }
            Polynomial::product(&factors).evaluate(point)
        }
    }
}

/// Vertical switch operators applied to the bracket, at a point.
pub fn z_alpha_delta_candidate_at(
    alpha: &Signature,
    n: usize,
    m: usize,
    scheme: &dyn WeightScheme,
    source: BracketSource,
    point: &Point,
    engine: Engine,
) -> Result<BigRational> {
    z_alpha_delta_model(alpha, n, m)?;
    let word = vertical_transport_word(alpha, m as u32);
    let mut ctx = SwitchContext::new(scheme);
    ctx.apply_word_at(
        &word,
        &|p| z_alpha_delta_bracket_at(alpha, n, m, scheme, source, p, engine),
        point,
    )
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropositionCheck {
    pub candidate: BigRational,
    pub enumerated: BigRational,
}

impl PropositionCheck {
    pub fn holds(&self) -> bool {
        self.candidate == self.enumerated
    }
}

/// Candidate against direct enumeration of the model, at one point.
pub fn check_proposition_at(
    alpha: &Signature,
    n: usize,
    m: usize,
    scheme: &dyn WeightScheme,
    source: BracketSource,
    point: &Point,
    engine: Engine,
) -> Result<PropositionCheck> {
    let model = z_alpha_delta_model(alpha, n, m)?;
    Ok(PropositionCheck {
        candidate: z_alpha_delta_candidate_at(alpha, n, m, scheme, source, point, engine)?,
        enumerated: partition_at(&model, scheme, point, engine)?.value,
    })
}

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::word::{base_signatures, word_for_signatures, Direction, OperatorSymbol, OperatorWord, WordForm};
use crate::algebra::{Point, Polynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::lattice::{GridDims, Model, Signature, VertexKind};
use crate::partition::{check_symbolic_size, partition_at, partition_symbolic, Engine};
use crate::weights::{solve_cross_point, solve_cross_symbolic, CrossWeights, Orientation, WeightScheme, Wiring};

/// Label pair of the cross an operator on lines `(i, i+1)` uses.
pub fn operator_pair(sym: OperatorSymbol) -> (u32, u32) {
    (sym.index + 1, sym.index)
}

/// The kinds `(a, c, b)` in `(a s - c) / b` for an operator.
///
/// Horizontally the forward operator divides by b2 and subtracts c1;
/// vertically these are exchanged, as the exchange relations of each
/// orientation dictate.
pub fn operator_kinds(sym: OperatorSymbol) -> (VertexKind, VertexKind, VertexKind) {
    use VertexKind::*;
    match (sym.orientation, sym.direction) {
        (Orientation::Horizontal, Direction::Forward) | (Orientation::Vertical, Direction::Inverse) => (A1, C1, B2),
        (Orientation::Horizontal, Direction::Inverse) | (Orientation::Vertical, Direction::Forward) => (A1, C2, B1),
    }
}

fn swap_point(sym: OperatorSymbol, p: &Point) -> Point {
    match sym.orientation {
        Orientation::Horizontal => p.swap_rows(sym.index),
        Orientation::Vertical => p.swap_cols(sym.index),
    }
}

/// Applies switch operators, caching solved cross weights. One context
/// per task; nothing is shared between threads.
pub struct SwitchContext<'a> {
    scheme: &'a dyn WeightScheme,
    wiring: Wiring,
    point_cross: HashMap<(Orientation, (u32, u32), Point), CrossWeights<BigRational>>,
    symbolic_cross: HashMap<(Orientation, (u32, u32)), CrossWeights<RationalFunction>>,
}

impl<'a> SwitchContext<'a> {
    pub fn new(scheme: &'a dyn WeightScheme) -> SwitchContext<'a> {
        SwitchContext {
            scheme,
            wiring: Wiring::Transport,
            point_cross: HashMap::new(),
            symbolic_cross: HashMap::new(),
        }
    }

    pub fn with_wiring(mut self, wiring: Wiring) -> Self {
        self.wiring = wiring;
        self
    }

    pub fn scheme(&self) -> &'a dyn WeightScheme {
        self.scheme
    }

    /// Cross weights at `point` for the pair `(p, q)`.
    pub fn cross_at(&mut self, orientation: Orientation, pair: (u32, u32), point: &Point) -> Result<CrossWeights<BigRational>> {
        let key = (orientation, pair, point.clone());
        if let Some(c) = self.point_cross.get(&key) {
            return Ok(c.clone());
        }
        let c = solve_cross_point(self.scheme, pair, orientation, 1, point, self.wiring)?;
        self.point_cross.insert(key, c.clone());
        Ok(c)
    }

    pub fn cross_symbolic(&mut self, orientation: Orientation, pair: (u32, u32)) -> Result<CrossWeights<RationalFunction>> {
        if let Some(c) = self.symbolic_cross.get(&(orientation, pair)) {
            return Ok(c.clone());
        }
        let c = solve_cross_symbolic(self.scheme, pair, orientation, 1, self.wiring)?;
        self.symbolic_cross.insert((orientation, pair), c.clone());
        Ok(c)
    }

    /// `(a Z(sP) - c Z(P)) / b` with the cross solved at `P`.
    pub fn combine_at(&mut self, sym: OperatorSymbol, point: &Point, z_swapped: &BigRational, z: &BigRational) -> Result<BigRational> {
        let cross = self.cross_at(sym.orientation, operator_pair(sym), point)?;
        let (ka, kc, kb) = operator_kinds(sym);
        let b = cross.get(kb);
        if b.is_zero() {
            return Err(Error::VanishingWeight {
                what: format!("{kb} of the cross for {sym}"),
            });
        }
        Ok((cross.get(ka) * z_swapped - cross.get(kc) * z) / b)
    }

    /// Evaluates `word(f)` at `point`, where `f` is given pointwise.
    ///
    /// Each operator needs the previous function at the point and at its
    /// swap, so values are memoized per (position in the word, point).
    pub fn apply_word_at(
        &mut self,
        word: &OperatorWord,
        f: &dyn Fn(&Point) -> Result<BigRational>,
        point: &Point,
    ) -> Result<BigRational> {
        let apps: Vec<OperatorSymbol> = word.applications().collect();
        let mut memo: HashMap<(usize, Point), BigRational> = HashMap::new();
        self.eval_level(&apps, apps.len(), f, point, &mut memo)
    }

    fn eval_level(
        &mut self,
        apps: &[OperatorSymbol],
        level: usize,
        f: &dyn Fn(&Point) -> Result<BigRational>,
        point: &Point,
        memo: &mut HashMap<(usize, Point), BigRational>,
    ) -> Result<BigRational> {
        let key = (level, point.clone());
        if let Some(v) = memo.get(&key) {
            return Ok(v.clone());
        }
        let value = if level == 0 {
            f(point)?
        } else {
            let sym = apps[level - 1];
            let swapped = swap_point(sym, point);
            let zs = self.eval_level(apps, level - 1, f, &swapped, memo)?;
            let z = self.eval_level(apps, level - 1, f, point, memo)?;
            self.combine_at(sym, point, &zs, &z)?
        };
        memo.insert(key, value.clone());
        Ok(value)
    }

    /// One operator applied to a polynomial. The division must be exact,
    /// which holds when the corresponding exchange relation does.
    pub fn apply_symbolic(&mut self, sym: OperatorSymbol, z: &Polynomial) -> Result<Polynomial> {
        let cross = self.cross_symbolic(sym.orientation, operator_pair(sym))?;
        let (ka, kc, kb) = operator_kinds(sym);
        let (a, c, b) = (cross.get(ka), cross.get(kc), cross.get(kb));
        if b.numerator().is_zero() {
            return Err(Error::VanishingWeight {
                what: format!("{kb} of the cross for {sym}"),
            });
        }
        let zs = match sym.orientation {
            Orientation::Horizontal => z.swap_row_vars(sym.index),
            Orientation::Vertical => z.swap_col_vars(sym.index),
        };
        let (na, da) = (a.numerator(), a.denominator());
        let (nc, dc) = (c.numerator(), c.denominator());
        let (nb, db) = (b.numerator(), b.denominator());
        let (num, den) = if da == dc {
            (na.mul(&zs).sub(&nc.mul(z)).mul(db), da.mul(nb))
        } else {
            (na.mul(dc).mul(&zs).sub(&nc.mul(da).mul(z)).mul(db), da.mul(dc).mul(nb))
        };
        num.divide_exact(&den)
    }

    pub fn apply_word_symbolic(&mut self, word: &OperatorWord, z: &Polynomial) -> Result<Polynomial> {
        let mut cur = z.clone();
        for sym in word.applications() {
            cur = self.apply_symbolic(sym, &cur)?;
        }
        Ok(cur)
    }
}

fn check_lengths(alpha: &Signature, beta: &Signature) -> Result<usize> {
    if alpha.len() != beta.len() {
        return Err(Error::Invalid(format!("signatures {alpha} and {beta} must have the same length")));
    }
    Ok(alpha.len())
}

/// `Z_(alpha, beta)` computed from the base case by switch operators, at a point.
pub fn reduce_to_base_at(
    alpha: &Signature,
    beta: &Signature,
    dims: GridDims,
    scheme: &dyn WeightScheme,
    point: &Point,
    engine: Engine,
) -> Result<BigRational> {
    let d = check_lengths(alpha, beta)?;
    let word = word_for_signatures(alpha, beta, dims, WordForm::Transport)?;
    let base = Model::base(dims.rows, dims.cols, d)?;
    let mut ctx = SwitchContext::new(scheme);
    ctx.apply_word_at(&word, &|p| Ok(partition_at(&base, scheme, p, engine)?.value), point)
}

/// `Z_(alpha, beta)` computed from the base case by switch operators, symbolically.
pub fn reduce_to_base_symbolic(
    alpha: &Signature,
    beta: &Signature,
    dims: GridDims,
    scheme: &dyn WeightScheme,
    engine: Engine,
) -> Result<Polynomial> {
    let d = check_lengths(alpha, beta)?;
    check_symbolic_size(dims)?;
    let word = word_for_signatures(alpha, beta, dims, WordForm::Transport)?;
    let base = Model::base(dims.rows, dims.cols, d)?;
    let z = partition_symbolic(&base, scheme, engine)?.value;
    SwitchContext::new(scheme).apply_word_symbolic(&word, &z)
}

/// Base signatures for a grid and path count.
pub fn base_case(dims: GridDims, d: usize) -> (Signature, Signature) {
    base_signatures(d, dims.cols)
}
